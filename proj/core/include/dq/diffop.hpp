#pragma once

#include "dq/polynomial.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace dq {

/// Enumerates every ordered decomposition gamma = g_0 + ... + g_{n-1} with
/// its multinomial weight gamma! / prod g_i!. Factor i may only absorb
/// derivatives in variables below var_limit[i] (pass kMaxVariables for no
/// restriction); decompositions violating a limit are skipped.
void distribute(const Monomial &gamma, std::span<const int> var_limit,
                const std::function<void(std::span<const Monomial>, const Rational &)> &emit);

/// Differential operator with polynomial coefficients in normal order:
/// D = sum_alpha c_alpha(x) d^alpha.
class DiffOp
{
public:
	using Terms = std::map<Monomial, Polynomial>;

	DiffOp() = default;

	static DiffOp identity() { return multiplication(Polynomial(1)); }
	static DiffOp multiplication(const Polynomial &p);
	static DiffOp derivative(const Monomial &alpha, const Polynomial &coeff = Polynomial(1));
	static DiffOp partial(int var) { return derivative(Monomial::unit(var)); }

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// Highest derivative order, -1 for the zero operator.
	int order() const;
	Polynomial coefficient(const Monomial &alpha) const;
	void add_term(const Monomial &alpha, const Polynomial &coeff);

	Polynomial apply(const Polynomial &f) const;
	Polynomial operator()(const Polynomial &f) const { return apply(f); }

	DiffOp &operator+=(const DiffOp &o);
	DiffOp &operator-=(const DiffOp &o);
	DiffOp &operator*=(const Complex &z);

	friend DiffOp operator+(DiffOp a, const DiffOp &b) { return a += b; }
	friend DiffOp operator-(DiffOp a, const DiffOp &b) { return a -= b; }
	friend DiffOp operator-(DiffOp a) { return a *= Complex(-1); }
	friend DiffOp operator*(DiffOp a, const Complex &z) { return a *= z; }
	friend DiffOp operator*(const Complex &z, DiffOp a) { return a *= z; }
	/// Composition a o b.
	friend DiffOp operator*(const DiffOp &a, const DiffOp &b);

	friend bool operator==(const DiffOp &, const DiffOp &) = default;

	DiffOp conj() const;
	/// Coefficients under x_var -> x_var + shift. Derivatives are translation
	/// invariant, so this is conjugation by the translation.
	DiffOp translated(int var, const Rational &shift) const;
	/// True when every coefficient only uses variables in [first, first+count).
	bool coefficients_only_use(int first, int count) const;
	/// True when every derivative index only uses variables in
	/// [first, first+count).
	bool derivatives_only_use(int first, int count) const;
	/// Highest coefficient degree.
	int coefficient_degree() const;

private:
	Terms terms_;
};

inline bool is_zero(const DiffOp &d) { return d.is_zero(); }
inline DiffOp conj(const DiffOp &d) { return d.conj(); }
inline DiffOp compose(const DiffOp &a, const DiffOp &b) { return a * b; }
inline DiffOp commutator(const DiffOp &a, const DiffOp &b) { return a * b - b * a; }

using OperatorSeries = FormalSeries<DiffOp>;

/// sum_{a+b=n} lambda^n D_a(f_b).
PolySeries apply(const OperatorSeries &d, const PolySeries &f);

std::string format(const DiffOp &d, const Space &space);

/// k-linear multidifferential operator
/// (f_1, ..., f_k) -> sum c(x) prod_i d^{beta_i} f_i.
class MultiDiffOp
{
public:
	using Key = std::vector<Monomial>;
	using Terms = std::map<Key, Polynomial>;

	explicit MultiDiffOp(int arity = 2) : arity_(arity) {}

	/// The undeformed product (f, g) -> f g.
	static MultiDiffOp pointwise(int arity = 2);

	int arity() const { return arity_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void add_term(const Key &betas, const Polynomial &coeff);

	Polynomial apply(std::span<const Polynomial> args) const;
	Polynomial operator()(const Polynomial &f, const Polynomial &g) const;

	/// Highest derivative order in one slot (-1 if zero).
	int slot_order(int slot) const;
	int max_slot_order() const;
	int coefficient_degree() const;

	MultiDiffOp &operator+=(const MultiDiffOp &o);
	MultiDiffOp &operator-=(const MultiDiffOp &o);
	MultiDiffOp &operator*=(const Complex &z);
	friend MultiDiffOp operator+(MultiDiffOp a, const MultiDiffOp &b) { return a += b; }
	friend MultiDiffOp operator-(MultiDiffOp a, const MultiDiffOp &b) { return a -= b; }
	friend MultiDiffOp operator*(MultiDiffOp a, const Complex &z) { return a *= z; }
	friend bool operator==(const MultiDiffOp &, const MultiDiffOp &) = default;

	/// Arity 2 only: (f, g) -> B(g, f).
	MultiDiffOp swapped() const;
	/// Coefficient-wise conjugation.
	MultiDiffOp conj() const;
	/// B(..., D(f_slot), ...).
	MultiDiffOp precompose(int slot, const DiffOp &d) const;
	/// U(B(...)).
	MultiDiffOp postcompose(const DiffOp &u) const;
	/// Arity 2 only: g -> B(a, g) as an operator.
	DiffOp fix_first(const Polynomial &a) const;
	/// Arity 2 only: f -> B(f, b) as an operator.
	DiffOp fix_second(const Polynomial &b) const;

private:
	int arity_;
	Terms terms_;
};

inline bool is_zero(const MultiDiffOp &b) { return b.is_zero(); }

} // namespace dq

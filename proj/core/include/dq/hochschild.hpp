#pragma once

#include "dq/diffop.hpp"
#include "dq/report.hpp"

#include <map>
#include <span>
#include <vector>

namespace dq {

/// Trivial bundle R^base x R^fiber. Base variables come first, so a base
/// polynomial is already its own pullback.
struct SubmersionModel
{
	int base = 0;
	int fiber = 0;

	int total() const { return base + fiber; }
	friend bool operator==(const SubmersionModel &, const SubmersionModel &) = default;
};

/// Differential k-cochain on base functions with values in differential
/// operators on the total space, kept in normal order:
///
///   c(f_1, ..., f_k) = sum p(x, t) prod_i d^{beta_i} f_i d^alpha
///
/// with beta_i base multi-indices and alpha over all variables. The normal
/// form is unique, so equality of cochains is exact symbolic equality.
class Cochain
{
public:
	struct Key
	{
		std::vector<Monomial> betas;
		Monomial alpha;

		friend bool operator==(const Key &, const Key &) = default;
		friend auto operator<=>(const Key &, const Key &) = default;
	};
	using Terms = std::map<Key, Polynomial>;

	Cochain(int arity, SubmersionModel model);

	/// Arity 0.
	static Cochain from_operator(const DiffOp &d, SubmersionModel model);
	/// (f_1..f_k) -> multiplication by C(f_1..f_k).
	static Cochain multiplication(const MultiDiffOp &c, SubmersionModel model);

	int arity() const { return arity_; }
	const SubmersionModel &model() const { return model_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void add_term(const Key &key, const Polynomial &coeff);

	DiffOp evaluate(std::span<const Polynomial> args) const;
	DiffOp operator()() const { return evaluate({}); }
	DiffOp operator()(const Polynomial &f) const;
	DiffOp operator()(const Polynomial &f, const Polynomial &g) const;
	/// Arity 0 only.
	DiffOp as_operator() const;

	Cochain &operator+=(const Cochain &o);
	Cochain &operator-=(const Cochain &o);
	Cochain &operator*=(const Complex &z);
	friend Cochain operator+(Cochain a, const Cochain &b) { return a += b; }
	friend Cochain operator-(Cochain a, const Cochain &b) { return a -= b; }
	friend Cochain operator-(Cochain a) { return a *= Complex(-1); }
	friend Cochain operator*(Cochain a, const Complex &z) { return a *= z; }
	friend bool operator==(const Cochain &, const Cochain &) = default;

	/// Coefficients independent of the fiber variables, i.e. invariant under
	/// fiber translations.
	bool is_equivariant() const;
	Cochain translated(int var, const Rational &shift) const;

	int max_operator_order() const;
	int max_base_derivatives() const;
	int coefficient_degree() const;

private:
	int arity_;
	SubmersionModel model_;
	Terms terms_;
};

inline bool is_zero(const Cochain &c) { return c.is_zero(); }

/// a(args at a_slots) o b(args at b_slots), as a cochain of arity
/// a.arity() + b.arity(). Slot lists give each operand's argument positions.
Cochain compose(const Cochain &a, const Cochain &b, const std::vector<int> &a_slots,
                const std::vector<int> &b_slots);
/// (f, g) -> a(g) o b(f) for arity-1 a and b.
Cochain compose_swapped(const Cochain &a, const Cochain &b);
Cochain compose(const DiffOp &d, const Cochain &c);
Cochain compose(const Cochain &c, const DiffOp &d);
/// c(f_1, .., f_slot f_{slot+1}, ..): arity goes up by one.
Cochain merge_arguments(const Cochain &c, int slot);
/// c(.., C(g_1..g_l), ..) with a base multidifferential operator C in the
/// given slot.
Cochain precompose_argument(const Cochain &c, int slot, const MultiDiffOp &op);

/// Hochschild differential for the bimodule f.D = D o mult(f),
/// D.f = mult(f) o D. Arity 3 outputs are not differentiated further.
Cochain hochschild_delta(const Cochain &c);

/// delta c = 0, evaluated on every tuple of base monomials of degree at most
/// degree_bound and compared as operators.
CheckReport is_cocycle(const Cochain &c, int degree_bound);

struct AnsatzBounds
{
	int max_diffop_order = 2;
	int max_coeff_degree = 2;
	int max_base_derivatives = 2;
};

struct CoboundaryOptions
{
	AnsatzBounds bounds;
	/// Restrict the ansatz to fiber-independent coefficients.
	bool equivariant = false;
	/// Degree of base monomials used for the independent re-check.
	int verify_degree = 3;
	/// Deformation order reported in NoSolutionInTruncation, -1 if none.
	int order = -1;
};

/// Solves delta phi = r exactly over the bounded ansatz. The arity of phi is
/// r.arity() - 1 (r of arity 1 or 2). Free unknowns are set to zero, so
/// cocycle directions in the ansatz never appear in the answer. Throws
/// NotACocycle when delta r != 0 and NoSolutionInTruncation when the ansatz
/// is too small.
Cochain solve_coboundary(const Cochain &r, const CoboundaryOptions &options);

/// Number of unknowns the ansatz would use; exposed for reports.
int ansatz_size(int arity, SubmersionModel model, const CoboundaryOptions &options);

} // namespace dq

#pragma once

#include "dq/scalar.hpp"
#include "dq/series.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dq {

inline constexpr int kMaxVariables = 8;

/// Exponent vector over a fixed maximal number of variables. Doubles as a
/// derivative multi-index. Unused trailing slots are zero, so monomials in
/// fewer variables embed without padding.
class Monomial
{
public:
	Monomial() = default;
	Monomial(std::initializer_list<int> exponents);

	static Monomial unit(int var, int power = 1);

	int operator[](int var) const { return e_[static_cast<std::size_t>(var)]; }
	void set(int var, int power);

	int degree() const;
	/// Degree restricted to variables [first, first + count).
	int degree(int first, int count) const;
	bool is_one() const { return degree() == 0; }

	/// Componentwise <=.
	bool divides(const Monomial &o) const;

	friend Monomial operator+(const Monomial &a, const Monomial &b);
	/// Requires b.divides(a).
	friend Monomial operator-(const Monomial &a, const Monomial &b);

	friend bool operator==(const Monomial &, const Monomial &) = default;
	friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
	std::array<std::uint8_t, kMaxVariables> e_{};
};

/// All sub-multi-indices g <= a.
std::vector<Monomial> sub_indices(const Monomial &a);
/// prod_i binom(a_i, g_i) for g <= a.
Rational binomial(const Monomial &a, const Monomial &g);
/// Falling factorial prod_i a_i! / (a_i - g_i)!, i.e. the coefficient of
/// d^g x^a.
Rational falling_factorial(const Monomial &a, const Monomial &g);

/// All monomials in variables [first, first + count) of total degree at most
/// max_degree, ordered by degree, then lexicographically.
std::vector<Monomial> monomials_up_to(int first, int count, int max_degree);

/// Variable names of a split space: base variables come first, then fiber
/// variables. Only printing and parsing need names.
struct Space
{
	std::vector<std::string> base;
	std::vector<std::string> fiber;

	int base_count() const { return static_cast<int>(base.size()); }
	int fiber_count() const { return static_cast<int>(fiber.size()); }
	int size() const { return base_count() + fiber_count(); }
	const std::string &name(int var) const;
	/// Index of a variable name or -1.
	int index(const std::string &name) const;
};

/// Sparse multivariate polynomial with Gaussian rational coefficients. No
/// zero coefficients are stored. Variables are real, so conjugation acts on
/// coefficients only.
class Polynomial
{
public:
	using Terms = std::map<Monomial, Complex>;

	Polynomial() = default;
	Polynomial(long c) : Polynomial(Complex(c)) {}
	Polynomial(Complex c);
	Polynomial(const Monomial &m, Complex c = Complex(1));

	static Polynomial variable(int var) { return Polynomial(Monomial::unit(var)); }

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	Complex constant_term() const;
	Complex coefficient(const Monomial &m) const;
	int degree() const;
	/// True when no variable outside [first, first + count) occurs.
	bool only_uses(int first, int count) const;
	bool is_real() const;

	void add_term(const Monomial &m, const Complex &c);

	Polynomial &operator+=(const Polynomial &o);
	Polynomial &operator-=(const Polynomial &o);
	Polynomial &operator*=(const Complex &z);
	Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

	friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
	friend Polynomial operator-(Polynomial a) { return a *= Complex(-1); }
	friend Polynomial operator*(Polynomial a, const Complex &z) { return a *= z; }
	friend Polynomial operator*(const Complex &z, Polynomial a) { return a *= z; }
	friend Polynomial operator*(const Polynomial &a, const Polynomial &b);

	friend bool operator==(const Polynomial &, const Polynomial &) = default;

	/// d^alpha.
	Polynomial derivative(const Monomial &alpha) const;
	Polynomial conj() const;
	Complex evaluate(std::span<const Rational> point) const;
	/// Exact substitution x_var -> x_var + shift.
	Polynomial translated(int var, const Rational &shift) const;

	/// The polynomial's bidegree in the given variable range.
	int degree_in(int first, int count) const;

private:
	Terms terms_;
};

inline bool is_zero(const Polynomial &p) { return p.is_zero(); }
inline Polynomial conj(const Polynomial &p) { return p.conj(); }
Polynomial unit_inverse(const Polynomial &p);
Polynomial pow(const Polynomial &p, int n);

using PolySeries = FormalSeries<Polynomial>;

/// Human-readable form that the expression parser reads back, e.g.
/// "x^2*y - 1/2*i*t".
std::string format(const Polynomial &p, const Space &space);
/// Series form with "lam" powers, e.g. "x*y + 1/2*i*lam".
std::string format(const PolySeries &s, const Space &space);
std::string format(const Monomial &m, const Space &space);

} // namespace dq

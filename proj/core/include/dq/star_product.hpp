#pragma once

#include "dq/diffop.hpp"
#include "dq/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dq {

/// Antisymmetric bivector theta^{mu nu} with polynomial entries in the first
/// dim variables.
class PoissonTensor
{
public:
	PoissonTensor() = default;
	/// Throws DimensionMismatch unless entries form an antisymmetric square.
	explicit PoissonTensor(std::vector<std::vector<Polynomial>> entries);
	static PoissonTensor constant(const std::vector<std::vector<Rational>> &entries);

	int dim() const { return static_cast<int>(theta_.size()); }
	const Polynomial &operator()(int mu, int nu) const
	{
		return theta_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
	}
	bool is_constant() const;
	bool is_real() const;

	/// theta^{mu nu} d_mu f d_nu g.
	Polynomial bracket(const Polynomial &f, const Polynomial &g) const;

private:
	std::vector<std::vector<Polynomial>> theta_;
};

/// f * g = sum_r lambda^r C_r(f, g), truncated at order N. Cochains only
/// differentiate in base variables, so the same product acts on total-space
/// polynomials as the product-bundle extension with the fiber untouched.
class StarProduct
{
public:
	/// Cochains C_0..C_N; missing trailing entries are zero. C_0 must be the
	/// pointwise product.
	StarProduct(std::vector<MultiDiffOp> cochains, int order, int base_count);

	/// The exponential Weyl product for constant theta. Throws
	/// NonConstantTheta otherwise.
	static StarProduct moyal(const PoissonTensor &theta, int order);
	/// The undeformed product at the given truncation.
	static StarProduct pointwise(int order, int base_count);

	int order() const { return order_; }
	int base_count() const { return base_count_; }
	const MultiDiffOp &cochain(int r) const;
	const std::vector<MultiDiffOp> &cochains() const { return cochains_; }
	StarProduct truncated(int order) const;

	Polynomial cochain_apply(int r, const Polynomial &f, const Polynomial &g) const
	{
		return cochain(r)(f, g);
	}

	PolySeries multiply(const PolySeries &f, const PolySeries &g) const;
	PolySeries multiply(const Polynomial &f, const Polynomial &g) const;
	PolySeries commutator(const PolySeries &f, const PolySeries &g) const;

	/// Every C_r with r >= 1 kills constants in either slot.
	bool is_unital() const;

	/// g -> f * g as a series of differential operators (f base-only).
	OperatorSeries left_multiplication(const Polynomial &f) const;
	/// g -> g * f as a series of differential operators.
	OperatorSeries right_multiplication(const Polynomial &f) const;

	/// Largest derivative order in any slot of C_1..C_N.
	int max_cochain_order() const;

private:
	std::vector<MultiDiffOp> cochains_;
	int order_;
	int base_count_;
};

/// C_r(f, g) of the Weyl product.
Polynomial moyal_cochain(const PoissonTensor &theta, int r, const Polynomial &f,
                         const Polynomial &g);

/// Memoized star products of monomials, extended bilinearly. The cache makes
/// the exhaustive triple checks affordable.
class StarCache
{
public:
	explicit StarCache(const StarProduct &star) : star_(star) {}

	const PolySeries &monomials(const Monomial &a, const Monomial &b);
	PolySeries multiply(const PolySeries &f, const PolySeries &g);
	PolySeries multiply(const Polynomial &f, const Polynomial &g)
	{
		return multiply(PolySeries(star_.order(), f), PolySeries(star_.order(), g));
	}
	const StarProduct &star() const { return star_; }

private:
	const StarProduct &star_;
	std::map<std::pair<Monomial, Monomial>, PolySeries> cache_;
};

/// (f*g)*h = f*(g*h) on all base monomial triples of degree <= degree_bound.
CheckReport check_associativity(const StarProduct &star, int degree_bound);
/// conj(f*g) = conj(g)*conj(f) on all non-constant base monomial pairs.
CheckReport check_hermitian(const StarProduct &star, int degree_bound);

/// {f, g} = -i (C_1(f, g) - C_1(g, f)) as a bidifferential operator.
MultiDiffOp extract_poisson(const StarProduct &star);

/// Cyclic-sum trivector of theta, indexed by mu < nu < kappa.
struct SchoutenComponent
{
	int mu, nu, kappa;
	Polynomial value;
};
std::vector<SchoutenComponent> schouten_square(const PoissonTensor &theta);
bool is_poisson(const PoissonTensor &theta);
/// {{f,g},h} + {{g,h},f} + {{h,f},g} for the bracket of theta.
Polynomial jacobi_defect(const PoissonTensor &theta, const Polynomial &f, const Polynomial &g,
                         const Polynomial &h);

} // namespace dq

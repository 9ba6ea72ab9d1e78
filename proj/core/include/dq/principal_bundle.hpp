#pragma once

#include "dq/equivalence.hpp"
#include "dq/hochschild.hpp"

#include <vector>

namespace dq {

/// Right module structure F . f = sum_r lambda^r rho_r(f)(F) of total-space
/// functions over the base star product, truncated at order(). rho_0 is
/// multiplication by f and is not stored.
class ModuleDeformation
{
public:
	/// stages[r-1] = rho_r. The star product may carry more orders than there
	/// are stages; the next one is needed to extend the module.
	ModuleDeformation(const StarProduct &star, SubmersionModel model, std::vector<Cochain> stages);

	int order() const { return static_cast<int>(stages_.size()); }
	const StarProduct &star() const { return star_; }
	const SubmersionModel &model() const { return model_; }
	/// rho_r, with rho_0 the multiplication cochain.
	const Cochain &stage(int r) const;
	const std::vector<Cochain> &stages() const { return stages_; }

	/// F -> F . f as a series of operators.
	OperatorSeries right_operator(const PolySeries &f) const;
	OperatorSeries right_operator(const Polynomial &f) const
	{
		return right_operator(PolySeries(order(), f));
	}
	PolySeries act(const PolySeries &big_f, const PolySeries &f) const;
	PolySeries act(const Polynomial &big_f, const Polynomial &f) const
	{
		return act(PolySeries(order(), big_f), PolySeries(order(), f));
	}

	/// Keeps rho_1..rho_k.
	ModuleDeformation truncated(int k) const;
	ModuleDeformation extended(Cochain next) const;
	bool is_equivariant() const;

private:
	StarProduct star_;
	SubmersionModel model_;
	Cochain mult_;
	std::vector<Cochain> stages_;
};

/// rho_r(f)(F) = C_r(F, f) with the base derivatives of C_r acting on F.
ModuleDeformation product_bundle_module(const StarProduct &star, SubmersionModel model);

/// R_k(f, g) = sum_{r=1}^{k} [rho_r(C_{k+1-r}(f, g)) - rho_r(g) o rho_{k+1-r}(f)]
///           + mult(C_{k+1}(f, g)).
/// Needs rho_1..rho_k and C_{k+1}. Throws NotModuleToOrderK unless the
/// stages satisfy the module law modulo lambda^{k+1}.
Cochain obstruction_cocycle(const ModuleDeformation &rho, int k);
/// delta rho_j = R_{j-1} for every j <= k.
bool is_module_to_order(const ModuleDeformation &rho, int k);

/// Adds rho_{k+1} solving delta rho_{k+1} = R_k, where k = rho.order(), then
/// re-checks the module law on monomials of degree <= options.verify_degree.
ModuleDeformation extend_module_order(const ModuleDeformation &rho, CoboundaryOptions options);

/// Fiber translations t -> t + c acting on total-space polynomials.
class GroupActionModel
{
public:
	GroupActionModel(SubmersionModel model, std::vector<std::vector<Rational>> translations);
	/// Unit shift along each fiber axis plus the diagonal shift by 1/2.
	static GroupActionModel standard(SubmersionModel model);

	const std::vector<std::vector<Rational>> &translations() const { return translations_; }
	Polynomial act(std::size_t g, const Polynomial &big_f) const;
	DiffOp act(std::size_t g, const DiffOp &d) const;

private:
	SubmersionModel model_;
	std::vector<std::vector<Rational>> translations_;
};

struct ModuleCheck
{
	CheckReport module_law;
	CheckReport unitality;
	CheckReport equivariance;

	bool pass() const { return module_law.pass && unitality.pass && equivariance.pass; }
	/// The first failing axiom in the order above, or the module law.
	const CheckReport &first_failure() const;
};

/// Module law, unitality and equivariance on total-space monomials F and
/// base monomials f, g of degree <= degree_bound.
ModuleCheck check_module_structure(const ModuleDeformation &rho, int degree_bound,
                                   const GroupActionModel &group);

/// Solves T o R_f = R~_f o T order by order starting from t0, where R_f and
/// R~_f are the right operators of rho and rho_tilde. Each order is a
/// coboundary problem in arity 0.
OperatorSeries solve_intertwiner(const ModuleDeformation &rho, const ModuleDeformation &rho_tilde,
                                 const DiffOp &t0, CoboundaryOptions options);

/// T(F . f) = T(F) .~ f on monomials of degree <= degree_bound.
CheckReport check_intertwiner(const OperatorSeries &t, const ModuleDeformation &rho,
                              const ModuleDeformation &rho_tilde, int degree_bound);

/// G-equivariant T with T_0 = id intertwining the two module structures,
/// re-checked on monomials of degree <= options.verify_degree.
EquivalenceTransform solve_module_equivalence(const ModuleDeformation &rho,
                                              const ModuleDeformation &rho_tilde,
                                              CoboundaryOptions options);

/// F .~ f = T(T^{-1}(F) . f).
ModuleDeformation conjugate(const ModuleDeformation &rho, const EquivalenceTransform &t);
/// F .~ f = F . Phi(f), a module over apply_equivalence(Phi, star).
ModuleDeformation pull_star(const ModuleDeformation &rho, const EquivalenceTransform &phi);

} // namespace dq

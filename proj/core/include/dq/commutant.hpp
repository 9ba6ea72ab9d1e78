#pragma once

#include "dq/principal_bundle.hpp"

#include <optional>
#include <vector>

namespace dq {

/// Derivatives only in fiber directions; such operators commute with
/// multiplication by base functions.
bool is_vertical(const DiffOp &d, SubmersionModel model);

/// rho'(D0) = D0 + sum_r lambda^r D_r commuting with every right operator of
/// rho. The corrections carry no vertical part, which makes the lift unique.
/// Throws NotVertical or NoSolutionInTruncation.
OperatorSeries lift_vertical(const DiffOp &d0, const ModuleDeformation &rho,
                             CoboundaryOptions options);

/// D(F . f) = D(F) . f on total monomials F and base monomials f.
CheckReport check_commutant(const OperatorSeries &d, const ModuleDeformation &rho,
                            int degree_bound);

/// The vertical series V with rho'(V) = x, extracted order by order.
/// Throws NotVertical when x is not in the image of the lift.
OperatorSeries unlift(const OperatorSeries &x, const ModuleDeformation &rho,
                      const CoboundaryOptions &options);

/// D *' E = rho'^{-1}(rho'(D) o rho'(E)).
OperatorSeries induced_star_prime(const DiffOp &d, const DiffOp &e, const ModuleDeformation &rho,
                                  const CoboundaryOptions &options);

/// D .' F = rho'(D) F.
PolySeries left_action(const DiffOp &d, const PolySeries &big_f, const ModuleDeformation &rho,
                       const CoboundaryOptions &options);

/// Outcome of the bicommutant test: every operator within the ansatz that
/// commutes with the given vertical generators is multiplication by a base
/// polynomial, and each such right operator commutes with the lifts.
struct BicommutantReport
{
	bool pass = true;
	/// Dimension of the order-0 solution space within the ansatz.
	int solution_dimension = 0;
	/// Base polynomials spanning it.
	std::vector<Polynomial> multipliers;
	/// Set when a solution is not a base multiplication.
	std::optional<DiffOp> counterexample;
	CheckReport commutation;
};

BicommutantReport check_bicommutant(const std::vector<DiffOp> &generators,
                                    const ModuleDeformation &rho, const AnsatzBounds &bounds,
                                    const CoboundaryOptions &lift_options, int degree_bound);

} // namespace dq

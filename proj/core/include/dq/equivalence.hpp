#pragma once

#include "dq/star_product.hpp"

namespace dq {

/// T = id + sum_{r>=1} lambda^r T_r acting on functions.
class EquivalenceTransform
{
public:
	/// The identity at truncation order.
	explicit EquivalenceTransform(int order);
	/// stages[0] must be the identity.
	explicit EquivalenceTransform(OperatorSeries stages);

	/// exp(lambda X) truncated at order.
	static EquivalenceTransform exponential(const DiffOp &x, int order);

	int order() const { return stages_.order(); }
	const OperatorSeries &stages() const { return stages_; }
	const DiffOp &stage(int r) const { return stages_[r]; }

	EquivalenceTransform inverse() const;
	PolySeries apply(const PolySeries &f) const;
	PolySeries apply(const Polynomial &f) const { return apply(PolySeries(order(), f)); }

	/// Throws UnitalityViolation unless T_r(1) = 0 for all r >= 1.
	void require_unital() const;

	friend EquivalenceTransform operator*(const EquivalenceTransform &a,
	                                      const EquivalenceTransform &b)
	{
		return EquivalenceTransform(a.stages_ * b.stages_);
	}

private:
	OperatorSeries stages_;
};

/// f *' g = T^{-1}(T f * T g), computed symbolically on the cochains.
StarProduct apply_equivalence(const EquivalenceTransform &t, const StarProduct &star);

/// T(f *' g) = T(f) * T(g) on base monomial pairs of degree <= degree_bound.
CheckReport check_homomorphism(const EquivalenceTransform &t, const StarProduct &primed,
                               const StarProduct &star, int degree_bound);

} // namespace dq

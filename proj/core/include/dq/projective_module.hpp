#pragma once

#include "dq/star_product.hpp"

#include <functional>
#include <vector>

namespace dq {

using PolyMatrix = std::vector<std::vector<Polynomial>>;
using SeriesVector = std::vector<PolySeries>;

/// Square or rectangular matrix of formal series, row-major.
class SeriesMatrix
{
public:
	SeriesMatrix() = default;
	SeriesMatrix(int rows, int cols, int order);
	/// Constant-in-lambda embedding of a classical matrix.
	SeriesMatrix(const PolyMatrix &m, int order);
	static SeriesMatrix identity(int n, int order);

	int rows() const { return rows_; }
	int cols() const { return cols_; }
	int order() const { return order_; }
	PolySeries &operator()(int i, int j) { return e_[index(i, j)]; }
	const PolySeries &operator()(int i, int j) const { return e_[index(i, j)]; }

	/// Order-0 coefficients.
	PolyMatrix classical() const;
	SeriesMatrix conj_transpose() const;
	bool is_zero() const;
	/// Lowest lambda-order with a nonzero entry, -1 if zero.
	int lowest_order() const;

	SeriesMatrix &operator+=(const SeriesMatrix &o);
	SeriesMatrix &operator-=(const SeriesMatrix &o);
	SeriesMatrix &operator*=(const Complex &z);
	friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix &b) { return a += b; }
	friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix &b) { return a -= b; }
	friend SeriesMatrix operator*(SeriesMatrix a, const Complex &z) { return a *= z; }
	friend bool operator==(const SeriesMatrix &, const SeriesMatrix &) = default;

private:
	std::size_t index(int i, int j) const
	{
		return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
		       static_cast<std::size_t>(j);
	}

	int rows_ = 0;
	int cols_ = 0;
	int order_ = 0;
	std::vector<PolySeries> e_;
};

/// Matrix product with entries multiplied by the star product.
SeriesMatrix star_multiply(StarCache &star, const SeriesMatrix &a, const SeriesMatrix &b);
SeriesVector star_multiply(StarCache &star, const SeriesMatrix &a, const SeriesVector &v);

/// Exact pointwise matrix product of classical matrices.
PolyMatrix matrix_product(const PolyMatrix &a, const PolyMatrix &b);
bool is_hermitian(const PolyMatrix &m);

struct NewtonStep
{
	int step;
	/// Lowest order of e*e - e after this step; order + 1 once exact.
	int residual_order;
};

struct DeformedIdempotent
{
	SeriesMatrix e;
	std::vector<NewtonStep> steps;
};

/// Newton iteration e <- 3 e*e - 2 e*e*e from e0, which must satisfy
/// e0 e0 = e0 exactly (NotIdempotent otherwise).
DeformedIdempotent deform_idempotent(const PolyMatrix &e0, const StarProduct &star);
/// Same iteration from a seed whose order-0 part is idempotent; seeds that
/// differ at higher orders give different (equivalent) deformations.
DeformedIdempotent deform_idempotent(const SeriesMatrix &seed, const StarProduct &star);

/// e * e - e.
SeriesMatrix idempotency_defect(StarCache &star, const SeriesMatrix &e);

/// e * v, an element of the deformed module.
SeriesVector project(StarCache &star, const SeriesMatrix &e, const SeriesVector &v);

/// phi . f = (phi_i * f)_i. Throws NotInModule unless e * phi = phi.
SeriesVector module_action(StarCache &star, const SeriesMatrix &e, const SeriesVector &phi,
                           const PolySeries &f);

/// h(phi, psi) = sum_i conj(phi_i) * psi_i on the module of a Hermitian
/// deformed projector.
class DeformedMetric
{
public:
	DeformedMetric(SeriesMatrix e, const StarProduct &star) : e_(std::move(e)), star_(star) {}

	const SeriesMatrix &projector() const { return e_; }
	const StarProduct &star() const { return star_; }
	PolySeries operator()(const SeriesVector &phi, const SeriesVector &psi) const;

private:
	SeriesMatrix e_;
	StarProduct star_;
};

/// Checks that the star product is Hermitian (NonHermitianStar otherwise)
/// and that e is a Hermitian projector. A non-Hermitian e with Hermitian
/// classical part is replaced by the Newton deformation of e0; a
/// non-Hermitian e0 raises NonHermitianProjector.
DeformedMetric deform_metric(const SeriesMatrix &e, const StarProduct &star);

/// Linear map on module vectors, T(phi)_i = sum_j T_ij(phi_j).
class ModuleTransform
{
public:
	ModuleTransform() = default;
	explicit ModuleTransform(std::vector<std::vector<OperatorSeries>> entries);
	static ModuleTransform identity(int n, int order);
	/// phi -> m * phi, entries acting by left star multiplication.
	static ModuleTransform left_multiplication(const StarProduct &star, const SeriesMatrix &m);

	int size() const { return static_cast<int>(t_.size()); }
	const OperatorSeries &operator()(int i, int j) const
	{
		return t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
	}
	SeriesVector apply(const SeriesVector &phi) const;
	/// True when the order-0 stage is the identity matrix.
	bool starts_with_identity() const;

private:
	std::vector<std::vector<OperatorSeries>> t_;
};

/// e' * e + (1 - e') * (1 - e): intertwines the modules of two deformations
/// of the same classical projector.
ModuleTransform module_intertwiner(const StarProduct &star, const SeriesMatrix &e,
                                   const SeriesMatrix &e_prime);

using ModuleAction = std::function<SeriesVector(const SeriesVector &, const PolySeries &)>;

/// The right star action phi . f = phi * f (no membership check).
ModuleAction star_action(const StarProduct &star);

/// T(phi . f) = T(phi) .~ f for the given module elements and every base
/// monomial f of degree <= degree_bound.
CheckReport check_module_equivalence(const ModuleTransform &t, const ModuleAction &action,
                                     const ModuleAction &action_tilde,
                                     const std::vector<SeriesVector> &elements,
                                     int base_count, int degree_bound);

/// h(phi, psi) = h~(U phi, U psi) on all pairs of the given elements.
CheckReport check_isometry(const ModuleTransform &u, const DeformedMetric &h,
                           const DeformedMetric &h_tilde,
                           const std::vector<SeriesVector> &elements);

} // namespace dq

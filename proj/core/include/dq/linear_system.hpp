#pragma once

#include "dq/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dq {

/// Exact sparse linear system over the Gaussian rationals, kept in reduced
/// row echelon form as equations arrive. The pivot of each row is its
/// lowest-index unknown, so the particular solution returned by solve()
/// only uses the earliest linearly independent columns: callers order their
/// unknowns by preference.
class LinearSystem
{
public:
	using Row = std::map<int, Complex>;

	explicit LinearSystem(int unknowns) : unknowns_(unknowns) {}

	int unknowns() const { return unknowns_; }

	/// Adds sum_j row[j] x_j = rhs.
	void add_equation(Row row, Complex rhs);

	bool consistent() const { return consistent_; }
	int rank() const { return static_cast<int>(pivots_.size()); }

	/// Solution with every free unknown set to zero; nullopt if inconsistent.
	std::optional<std::vector<Complex>> solve() const;

	/// Basis of the homogeneous solution space, one vector per free unknown.
	std::vector<std::vector<Complex>> nullspace() const;

private:
	struct PivotRow
	{
		Row row;
		Complex rhs;
	};

	int unknowns_;
	std::map<int, PivotRow> pivots_;
	bool consistent_ = true;
};

} // namespace dq

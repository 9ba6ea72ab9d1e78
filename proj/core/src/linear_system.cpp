#include "dq/linear_system.hpp"

#include "dq/errors.hpp"

namespace dq {

namespace {

void axpy(LinearSystem::Row &target, const Complex &factor, const LinearSystem::Row &source)
{
	for (const auto &[col, v] : source) {
		auto [it, inserted] = target.try_emplace(col);
		it->second -= factor * v;
		if (it->second.is_zero())
			target.erase(it);
	}
}

} // namespace

void LinearSystem::add_equation(Row row, Complex rhs)
{
	for (auto it = row.begin(); it != row.end();) {
		if (it->first < 0 || it->first >= unknowns_)
			throw DimensionMismatch("unknown index out of range");
		it = it->second.is_zero() ? row.erase(it) : std::next(it);
	}

	// Rows in pivots_ are fully reduced against each other, so one pass over
	// the pivot columns present in the new row clears all of them.
	std::vector<int> hits;
	for (const auto &[col, v] : row)
		if (pivots_.count(col))
			hits.push_back(col);
	for (int col : hits) {
		auto it = row.find(col);
		if (it == row.end())
			continue;
		Complex factor = it->second;
		const PivotRow &p = pivots_.at(col);
		axpy(row, factor, p.row);
		rhs -= factor * p.rhs;
	}

	if (row.empty()) {
		if (!rhs.is_zero())
			consistent_ = false;
		return;
	}

	int pivot = row.begin()->first;
	Complex inv = row.begin()->second.inverse();
	for (auto &[col, v] : row)
		v *= inv;
	rhs *= inv;

	for (auto &[pcol, p] : pivots_) {
		auto it = p.row.find(pivot);
		if (it == p.row.end())
			continue;
		Complex factor = it->second;
		axpy(p.row, factor, row);
		p.rhs -= factor * rhs;
	}
	pivots_.emplace(pivot, PivotRow{std::move(row), std::move(rhs)});
}

std::optional<std::vector<Complex>> LinearSystem::solve() const
{
	if (!consistent_)
		return std::nullopt;
	std::vector<Complex> x(static_cast<std::size_t>(unknowns_));
	for (const auto &[pcol, p] : pivots_)
		x[static_cast<std::size_t>(pcol)] = p.rhs;
	return x;
}

std::vector<std::vector<Complex>> LinearSystem::nullspace() const
{
	std::vector<std::vector<Complex>> basis;
	for (int f = 0; f < unknowns_; ++f) {
		if (pivots_.count(f))
			continue;
		std::vector<Complex> v(static_cast<std::size_t>(unknowns_));
		v[static_cast<std::size_t>(f)] = Complex(1);
		for (const auto &[pcol, p] : pivots_) {
			auto it = p.row.find(f);
			if (it != p.row.end())
				v[static_cast<std::size_t>(pcol)] = -it->second;
		}
		basis.push_back(std::move(v));
	}
	return basis;
}

} // namespace dq

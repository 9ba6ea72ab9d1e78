#pragma once

#include "dq/diffop.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dq {

/// Inputs on which an identity failed, with lhs - rhs at the failing order.
struct Witness
{
	std::vector<Polynomial> inputs;
	Polynomial defect;
	std::string label;
	/// Set instead of defect when the failing identity is between operators.
	DiffOp operator_defect;
};

/// Outcome of an exhaustive exact check over bounded-degree monomials.
/// Failure is data, not an exception.
struct CheckReport
{
	std::string property;
	bool pass = true;
	/// Lowest lambda-order at which some case failed.
	int failing_order = -1;
	std::optional<Witness> witness;
	int degree_bound = 0;
	/// Monomial degree at which the check becomes complete for the operators
	/// involved, -1 when no such bound is known.
	int completeness_bound = -1;
	long cases = 0;

	/// Keeps the witness with the lowest failing order.
	void record(int order, Witness w)
	{
		if (pass || order < failing_order) {
			pass = false;
			failing_order = order;
			witness = std::move(w);
		}
	}

	/// Folds a series difference into the report.
	void compare(const PolySeries &diff, const std::vector<Polynomial> &inputs,
	             const std::string &label = {})
	{
		++cases;
		int r = diff.lowest_order();
		if (r >= 0)
			record(r, Witness{inputs, diff[r], label, DiffOp()});
	}

	void compare(const OperatorSeries &diff, const std::vector<Polynomial> &inputs,
	             const std::string &label = {})
	{
		++cases;
		int r = diff.lowest_order();
		if (r >= 0)
			record(r, Witness{inputs, Polynomial(), label, diff[r]});
	}

	void merge(const CheckReport &o)
	{
		cases += o.cases;
		if (!o.pass)
			record(o.failing_order, *o.witness);
	}
};

} // namespace dq

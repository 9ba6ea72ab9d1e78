#pragma once

#include "dq/expression.hpp"
#include "dq/hochschild.hpp"
#include "dq/star_product.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dqtool {

/// Malformed workspace or command input. Maps to exit code 3.
class InputError : public dq::Error
{
public:
	using dq::Error::Error;
};

/// Everything a command needs besides its own inputs. Loaded from JSON:
///
///   {
///     "base": ["x", "y"], "fiber": ["t"],
///     "theta": [["0", "1"], ["-1", "0"]],
///     "star": "moyal" | {"cochains": [[{"left": "d_x", "right": "d_y", "coeff": "i/2"}]]}
///                     | {"file": "cochains.json"},
///     "order": 2, "degree_bound": 3, "bounds": [2, 2, 2], "equivariant": false,
///     "inputs": { ... }
///   }
///
/// theta entries are expressions in the base variables; Moyal needs them
/// constant. cochains[r-1] lists the terms of C_r.
struct Workspace
{
	dq::Space space;
	std::vector<std::vector<dq::Polynomial>> theta;
	/// Empty for Moyal.
	std::vector<dq::MultiDiffOp> cochains;
	bool moyal = true;
	int order = 2;
	int degree_bound = 3;
	dq::AnsatzBounds bounds;
	bool equivariant = false;
	nlohmann::json inputs = nlohmann::json::object();

	dq::SubmersionModel model() const { return {space.base_count(), space.fiber_count()}; }
	dq::PoissonTensor poisson() const;
	dq::StarProduct star(int order) const;
	dq::StarProduct star() const { return star(order); }

	/// Named input; throws InputError when missing.
	const nlohmann::json &input(const std::string &key) const;
	dq::PolySeries series(const std::string &text) const;
	dq::Polynomial polynomial(const std::string &text) const;
	dq::DiffOp derivative(const std::string &text) const;
	dq::OperatorSeries operator_series(const std::string &text) const;
};

Workspace load_workspace(const nlohmann::json &j, const std::filesystem::path &dir = {});
Workspace load_workspace_file(const std::filesystem::path &file);

/// Command-line values that take precedence over the workspace.
struct Overrides
{
	std::optional<int> order;
	std::optional<int> degree_bound;
	std::optional<dq::AnsatzBounds> bounds;
	bool equivariant = false;
};

void apply_overrides(Workspace &ws, const Overrides &o);

/// "a,b,c" -> bounds.
dq::AnsatzBounds parse_bounds(const std::string &text);

} // namespace dqtool

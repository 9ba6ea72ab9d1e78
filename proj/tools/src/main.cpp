#include "dqtool/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

const std::map<std::string, std::string> summaries = {
    {"assoc-check", "Check associativity on all monomial triples up to the degree bound"},
    {"commutator", "Star commutator of inputs f and g"},
    {"deform-projector", "Deform the projector e into a star idempotent"},
    {"equiv-solve", "Solve for an equivalence between two module deformations"},
    {"extend-module", "Extend the product module order by order"},
    {"hermitian-check", "Check conj(f * g) = conj(g) * conj(f)"},
    {"lift-vertical", "Lift a vertical operator into the commutant"},
    {"metric", "Deformed metric of a projector and its positivity"},
    {"module-check", "Check the module axioms for a module deformation"},
    {"poisson", "Check that C_1 antisymmetrizes to the Poisson bracket"},
    {"schouten", "Check the Schouten bracket [theta, theta] vanishes"},
    {"star", "Star product of inputs f and g"},
    {"star-prime", "Induced product of two vertical operators"},
};

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact deformation quantization toolkit"};
	app.require_subcommand(1);
	app.fallthrough();

	std::string workspace;
	std::string output;
	std::string format = "json";
	std::string bounds;
	dqtool::Overrides overrides;
	app.add_option("--workspace", workspace, "Workspace JSON file")->required();
	app.add_option("--order", overrides.order, "Truncation order N");
	app.add_option("--degree-bound", overrides.degree_bound, "Monomial degree for exhaustive checks");
	app.add_option("--bounds", bounds, "Ansatz bounds: order,degree,derivatives");
	app.add_flag("--equivariant", overrides.equivariant, "Restrict solvers to fiber-independent terms");
	app.add_option("--output", output, "Write the report here instead of stdout");
	app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json"}));

	for (const auto &name : dqtool::command_names())
		app.add_subcommand(name, summaries.count(name) ? summaries.at(name) : "");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return dqtool::exit_code(dqtool::Verdict::error);
	}

	std::string name = app.get_subcommands().front()->get_name();
	dqtool::Outcome out;
	try {
		if (!bounds.empty())
			overrides.bounds = dqtool::parse_bounds(bounds);
		out = dqtool::run_command_file(name, workspace, overrides);
	} catch (const dq::Error &e) {
		out = {dqtool::Verdict::error, {{"command", name}, {"verdict", "error"}, {"error", e.what()}}};
	}

	std::string text = dqtool::render(out.report);
	if (output.empty()) {
		std::cout << text;
	} else {
		std::ofstream file(output);
		if (!file) {
			std::cerr << "cannot write " << output << "\n";
			return dqtool::exit_code(dqtool::Verdict::error);
		}
		file << text;
	}
	return dqtool::exit_code(out.verdict);
}

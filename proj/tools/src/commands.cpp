#include "dqtool/commands.hpp"

#include "dq/commutant.hpp"

#include <functional>
#include <map>

namespace dqtool {

using nlohmann::json;
using namespace dq;

int exit_code(Verdict v)
{
	switch (v) {
	case Verdict::pass: return 0;
	case Verdict::fail: return 1;
	case Verdict::inconclusive: return 2;
	case Verdict::error: return 3;
	}
	return 3;
}

const char *verdict_name(Verdict v)
{
	switch (v) {
	case Verdict::pass: return "pass";
	case Verdict::fail: return "fail";
	case Verdict::inconclusive: return "inconclusive";
	case Verdict::error: return "error";
	}
	return "error";
}

std::string render(const json &report) { return report.dump(2) + "\n"; }

namespace {

// ---------------------------------------------------------------------------
// Serialization

json series_json(const PolySeries &s, const Space &space)
{
	json out = json::object();
	for (int r = 0; r <= s.order(); ++r)
		if (!s[r].is_zero())
			out["order" + std::to_string(r)] = format(s[r], space);
	return out;
}

json operator_json(const OperatorSeries &s, const Space &space)
{
	json out = json::object();
	for (int r = 0; r <= s.order(); ++r)
		if (!s[r].is_zero())
			out["order" + std::to_string(r)] = format(s[r], space);
	return out;
}

std::string derivative_text(const Monomial &m, const Space &space)
{
	std::string out;
	for (int v = 0; v < space.size(); ++v) {
		if (m[v] == 0)
			continue;
		if (!out.empty())
			out += "*";
		out += "d_" + space.name(v);
		if (m[v] > 1)
			out += "^" + std::to_string(m[v]);
	}
	return out.empty() ? "1" : out;
}

json cochain_json(const Cochain &c, const Space &space)
{
	json terms = json::array();
	for (const auto &[key, p] : c.terms()) {
		json t;
		if (!key.betas.empty())
			t["arg"] = derivative_text(key.betas[0], space);
		t["op"] = derivative_text(key.alpha, space);
		t["coeff"] = format(p, space);
		terms.push_back(std::move(t));
	}
	return terms;
}

json matrix_json(const SeriesMatrix &m, const Space &space)
{
	json rows = json::array();
	for (int i = 0; i < m.rows(); ++i) {
		json row = json::array();
		for (int j = 0; j < m.cols(); ++j)
			row.push_back(series_json(m(i, j), space));
		rows.push_back(std::move(row));
	}
	return rows;
}

json check_json(const CheckReport &rep, const Space &space)
{
	json out;
	out["pass"] = rep.pass;
	out["cases"] = rep.cases;
	if (rep.pass)
		return out;
	out["failing_order"] = rep.failing_order;
	if (rep.witness) {
		const Witness &w = *rep.witness;
		json wj;
		json inputs = json::array();
		for (const auto &p : w.inputs)
			inputs.push_back(format(p, space));
		wj["inputs"] = std::move(inputs);
		wj["order"] = rep.failing_order;
		wj["defect"] = w.operator_defect.is_zero() ? format(w.defect, space)
		                                           : format(w.operator_defect, space);
		if (!w.label.empty())
			wj["label"] = w.label;
		out["witness"] = std::move(wj);
	}
	return out;
}

json bounds_json(const Workspace &ws)
{
	return {{"max_diffop_order", ws.bounds.max_diffop_order},
	        {"max_coeff_degree", ws.bounds.max_coeff_degree},
	        {"max_base_derivatives", ws.bounds.max_base_derivatives},
	        {"equivariant", ws.equivariant}};
}

CoboundaryOptions solver_options(const Workspace &ws)
{
	CoboundaryOptions o;
	o.bounds = ws.bounds;
	o.equivariant = ws.equivariant;
	o.verify_degree = ws.degree_bound;
	return o;
}

std::string text(const json &v)
{
	if (v.is_string())
		return v.get<std::string>();
	if (v.is_number_integer())
		return std::to_string(v.get<long long>());
	throw InputError("expected an expression string, got " + v.dump());
}

/// Order-0 operator from an expression; lam is rejected.
DiffOp plain_operator(const Workspace &ws, const std::string &key)
{
	OperatorSeries s = ws.operator_series(text(ws.input(key)));
	for (int r = 1; r <= s.order(); ++r)
		if (!s[r].is_zero())
			throw InputError("input '" + key + "' must not depend on lam");
	return s[0];
}

// ---------------------------------------------------------------------------
// Modules

/// "product", "empty", "solver", or an object with "kind" and extra "add"
/// terms {"order", "arg", "op", "coeff"}.
ModuleDeformation module_from(const Workspace &ws, const json &spec, const StarProduct &star)
{
	SubmersionModel model = ws.model();
	std::string kind = spec.is_string() ? spec.get<std::string>() : spec.value("kind", "product");
	ModuleDeformation rho(star, model, {});
	if (kind == "product") {
		rho = product_bundle_module(star, model);
	} else if (kind == "solver") {
		for (int k = 0; k < star.order(); ++k) {
			CoboundaryOptions o = solver_options(ws);
			o.order = k + 1;
			rho = extend_module_order(rho, o);
		}
	} else if (kind != "empty") {
		throw InputError("unknown module kind '" + kind + "'");
	}
	if (spec.is_object() && spec.contains("add")) {
		std::vector<Cochain> stages = rho.stages();
		for (const auto &t : spec.at("add")) {
			int r = t.at("order").get<int>();
			if (r < 1 || r > star.order())
				throw InputError("module term order out of range");
			while (static_cast<int>(stages.size()) < r)
				stages.emplace_back(1, model);
			Monomial beta = ws.derivative(t.value("arg", "")).terms().begin()->first;
			Monomial alpha = ws.derivative(t.value("op", "")).terms().begin()->first;
			if (beta.degree(model.base, model.fiber) != 0)
				throw InputError("module terms may only differentiate f in base variables");
			stages[static_cast<std::size_t>(r - 1)].add_term({{beta}, alpha},
			                                                 ws.polynomial(text(t.at("coeff"))));
		}
		rho = ModuleDeformation(star, model, std::move(stages));
	}
	return rho;
}

json module_json(const ModuleDeformation &rho, const Space &space)
{
	json out = json::object();
	for (int r = 1; r <= rho.order(); ++r)
		out["order" + std::to_string(r)] = cochain_json(rho.stage(r), space);
	return out;
}

json module_spec(const Workspace &ws, const std::string &key, const char *fallback)
{
	return ws.inputs.contains(key) ? ws.inputs.at(key) : json(fallback);
}

// ---------------------------------------------------------------------------
// Commands

using Handler = std::function<Verdict(const Workspace &, json &)>;

struct Command
{
	const char *identity;
	Handler run;
	bool uses_solver = false;
};

Verdict from_check(bool pass) { return pass ? Verdict::pass : Verdict::fail; }

Verdict cmd_star(const Workspace &ws, json &out)
{
	StarProduct star = ws.star();
	PolySeries f = ws.series(text(ws.input("f"))), g = ws.series(text(ws.input("g")));
	out["result"] = series_json(star.multiply(f, g), ws.space);
	return Verdict::pass;
}

Verdict cmd_commutator(const Workspace &ws, json &out)
{
	StarProduct star = ws.star();
	PolySeries f = ws.series(text(ws.input("f"))), g = ws.series(text(ws.input("g")));
	out["result"] = series_json(star.commutator(f, g), ws.space);
	return Verdict::pass;
}

Verdict cmd_assoc(const Workspace &ws, json &out)
{
	CheckReport rep = check_associativity(ws.star(), ws.degree_bound);
	out["check"] = check_json(rep, ws.space);
	return from_check(rep.pass);
}

Verdict cmd_hermitian(const Workspace &ws, json &out)
{
	CheckReport rep = check_hermitian(ws.star(), ws.degree_bound);
	out["check"] = check_json(rep, ws.space);
	return from_check(rep.pass);
}

Verdict cmd_poisson(const Workspace &ws, json &out)
{
	PoissonTensor theta = ws.poisson();
	MultiDiffOp b = extract_poisson(ws.star());
	CheckReport rep;
	rep.property = "poisson limit";
	auto monos = monomials_up_to(0, ws.space.base_count(), ws.degree_bound);
	for (const auto &a : monos)
		for (const auto &c : monos) {
			Polynomial f(a), g(c);
			rep.compare(PolySeries(0, b(f, g) - theta.bracket(f, g)), {f, g});
		}
	json terms = json::array();
	for (const auto &[betas, p] : b.terms())
		terms.push_back({{"left", derivative_text(betas[0], ws.space)},
		                 {"right", derivative_text(betas[1], ws.space)},
		                 {"coeff", format(p, ws.space)}});
	out["result"] = {{"bracket", std::move(terms)}};
	if (ws.inputs.contains("f") && ws.inputs.contains("g"))
		out["result"]["value"] =
		    format(b(ws.polynomial(text(ws.input("f"))), ws.polynomial(text(ws.input("g")))), ws.space);
	out["check"] = check_json(rep, ws.space);
	return from_check(rep.pass);
}

Verdict cmd_schouten(const Workspace &ws, json &out)
{
	PoissonTensor theta = ws.poisson();
	int m = theta.dim();
	std::map<std::tuple<int, int, int>, Polynomial> values;
	for (const auto &c : schouten_square(theta))
		values[{c.mu, c.nu, c.kappa}] = c.value;
	CheckReport rep;
	rep.property = "schouten";
	bool agrees = true;
	json components = json::array();
	for (int a = 0; a < m; ++a)
		for (int b = a + 1; b < m; ++b)
			for (int c = b + 1; c < m; ++c) {
				Polynomial x = Polynomial::variable(a), y = Polynomial::variable(b),
				           z = Polynomial::variable(c);
				Polynomial value = values.count({a, b, c}) ? values[{a, b, c}] : Polynomial();
				Polynomial jac = jacobi_defect(theta, x, y, z);
				agrees = agrees && jac == value;
				rep.compare(PolySeries(0, value), {x, y, z});
				if (!value.is_zero())
					components.push_back({{"indices", {ws.space.name(a), ws.space.name(b), ws.space.name(c)}},
					                      {"value", format(value, ws.space)}});
			}
	out["result"] = {{"components", std::move(components)}, {"jacobi_agrees", agrees}};
	out["check"] = check_json(rep, ws.space);
	return from_check(rep.pass && agrees);
}

SeriesMatrix projector_input(const Workspace &ws)
{
	return evaluate_matrix(parse_expression(text(ws.input("projector"))), ws.space, ws.order);
}

Verdict cmd_deform_projector(const Workspace &ws, json &out)
{
	StarProduct star = ws.star();
	StarCache cache(star);
	SeriesMatrix seed = projector_input(ws);
	DeformedIdempotent d = deform_idempotent(seed, star);
	bool exact = idempotency_defect(cache, d.e).is_zero();
	bool classical = d.e.classical() == seed.classical();
	bool doubling = true;
	int previous = 1;
	json steps = json::array();
	for (const auto &s : d.steps) {
		doubling = doubling && s.residual_order >= std::min(2 * previous, ws.order + 1);
		previous = s.residual_order;
		steps.push_back({{"step", s.step}, {"residual_order", s.residual_order}});
	}
	out["result"] = {{"projector", matrix_json(d.e, ws.space)},
	                 {"steps", std::move(steps)},
	                 {"idempotent", exact},
	                 {"classical_part_preserved", classical},
	                 {"precision_doubling", doubling}};
	return from_check(exact && classical && doubling);
}

Verdict cmd_metric(const Workspace &ws, json &out)
{
	StarProduct star = ws.star();
	StarCache cache(star);
	DeformedIdempotent d = deform_idempotent(projector_input(ws), star);
	DeformedMetric h = deform_metric(d.e, star);
	const SeriesMatrix &e = h.projector();
	std::vector<SeriesVector> elements;
	for (const auto &v : ws.input("elements")) {
		SeriesVector phi;
		for (const auto &entry : v)
			phi.push_back(ws.series(text(entry)));
		if (static_cast<int>(phi.size()) != e.rows())
			throw InputError("module element has the wrong length");
		elements.push_back(project(cache, e, phi));
	}
	CheckReport linear, symmetric, positive;
	linear.property = "right linearity";
	symmetric.property = "symmetry";
	positive.property = "classical positivity";
	auto monos = monomials_up_to(0, ws.space.base_count(), std::min(ws.degree_bound, 2));
	json values = json::array();
	for (std::size_t a = 0; a < elements.size(); ++a) {
		json row = json::array();
		for (std::size_t b = 0; b < elements.size(); ++b) {
			PolySeries hab = h(elements[a], elements[b]);
			row.push_back(series_json(hab, ws.space));
			symmetric.compare(hab - conj(h(elements[b], elements[a])), {});
			for (const auto &m : monos) {
				PolySeries f(ws.order, Polynomial(m));
				linear.compare(h(elements[a], module_action(cache, e, elements[b], f)) -
				                   star.multiply(hab, f),
				               {Polynomial(m)});
			}
		}
		values.push_back(std::move(row));
		// Order-0 diagonal values at a fixed grid of rational points.
		Polynomial h0 = h(elements[a], elements[a])[0];
		const Rational grid[] = {Rational(-2), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(3)};
		for (int k = 0; k < 25; ++k) {
			std::vector<Rational> pt;
			for (int v = 0; v < ws.space.size(); ++v)
				pt.push_back(grid[(k / (v == 0 ? 1 : 5 * v)) % 5]);
			Complex z = h0.evaluate(pt);
			++positive.cases;
			if (!z.is_real() || z.re().sign() < 0)
				positive.record(0, Witness{{h0}, h0, "diagonal value negative or complex", DiffOp()});
		}
	}
	out["result"] = {{"values", std::move(values)}};
	out["checks"] = {{"right_linearity", check_json(linear, ws.space)},
	                 {"symmetry", check_json(symmetric, ws.space)},
	                 {"classical_positivity", check_json(positive, ws.space)}};
	return from_check(linear.pass && symmetric.pass && positive.pass);
}

Verdict module_verdict(const ModuleDeformation &rho, const Workspace &ws, json &out)
{
	ModuleCheck check = check_module_structure(rho, ws.degree_bound, GroupActionModel::standard(ws.model()));
	out["checks"] = {{"module_law", check_json(check.module_law, ws.space)},
	                 {"unitality", check_json(check.unitality, ws.space)},
	                 {"equivariance", check_json(check.equivariance, ws.space)}};
	if (check.pass())
		return Verdict::pass;
	const CheckReport &first = check.first_failure();
	out["axiom"] = first.property;
	out["witness"] = check_json(first, ws.space)["witness"];
	return Verdict::fail;
}

Verdict cmd_module_check(const Workspace &ws, json &out)
{
	ModuleDeformation rho = module_from(ws, module_spec(ws, "module", "product"), ws.star());
	out["result"] = {{"stages", module_json(rho, ws.space)}};
	return module_verdict(rho, ws, out);
}

Verdict cmd_extend_module(const Workspace &ws, json &out)
{
	StarProduct star = ws.star();
	ModuleDeformation rho = module_from(ws, module_spec(ws, "module", "empty"), star);
	json closed = json::array();
	while (rho.order() < ws.order) {
		int k = rho.order();
		closed.push_back(hochschild_delta(obstruction_cocycle(rho, k)).is_zero());
		CoboundaryOptions o = solver_options(ws);
		o.order = k + 1;
		rho = extend_module_order(rho, o);
	}
	out["result"] = {{"stages", module_json(rho, ws.space)}, {"obstructions_closed", closed}};
	return module_verdict(rho, ws, out);
}

Verdict cmd_equiv_solve(const Workspace &ws, json &out)
{
	StarProduct star = ws.star();
	ModuleDeformation rho = module_from(ws, module_spec(ws, "source", "solver"), star);
	ModuleDeformation tilde = module_from(ws, module_spec(ws, "target", "product"), star);
	EquivalenceTransform t = solve_module_equivalence(rho, tilde, solver_options(ws));
	CheckReport rep = check_intertwiner(t.stages(), rho, tilde, ws.degree_bound);
	bool equivariant = true;
	for (int r = 0; r <= t.order(); ++r)
		equivariant = equivariant && t.stage(r).coefficients_only_use(0, ws.space.base_count());
	out["result"] = {{"transform", operator_json(t.stages(), ws.space)},
	                 {"equivariant", equivariant}};
	out["check"] = check_json(rep, ws.space);
	return from_check(rep.pass && (equivariant || !ws.equivariant));
}

Verdict cmd_lift_vertical(const Workspace &ws, json &out)
{
	ModuleDeformation rho = module_from(ws, module_spec(ws, "module", "product"), ws.star());
	DiffOp d0 = plain_operator(ws, "operator");
	if (!is_vertical(d0, ws.model()))
		throw InputError("operator differentiates in base directions");
	OperatorSeries lift = lift_vertical(d0, rho, solver_options(ws));
	CheckReport rep = check_commutant(lift, rho, ws.degree_bound);
	out["result"] = {{"lift", operator_json(lift, ws.space)}};
	out["check"] = check_json(rep, ws.space);
	return from_check(rep.pass && lift[0] == d0);
}

Verdict cmd_star_prime(const Workspace &ws, json &out)
{
	ModuleDeformation rho = module_from(ws, module_spec(ws, "module", "product"), ws.star());
	DiffOp d = plain_operator(ws, "left"), e = plain_operator(ws, "right");
	for (const DiffOp *op : {&d, &e})
		if (!is_vertical(*op, ws.model()))
			throw InputError("star-prime needs vertical operators");
	OperatorSeries p = induced_star_prime(d, e, rho, solver_options(ws));
	out["result"] = {{"product", operator_json(p, ws.space)}};
	return from_check(p[0] == d * e);
}

const std::map<std::string, Command> &commands()
{
	static const std::map<std::string, Command> table = {
	    {"star", {"f * g = sum_r lam^r C_r(f, g)", cmd_star}},
	    {"commutator", {"[f, g]_* = f * g - g * f", cmd_commutator}},
	    {"assoc-check", {"(f * g) * h = f * (g * h)", cmd_assoc}},
	    {"hermitian-check", {"conj(f * g) = conj(g) * conj(f)", cmd_hermitian}},
	    {"poisson", {"C_1(f, g) - C_1(g, f) = i {f, g}", cmd_poisson}},
	    {"schouten", {"[theta, theta] = 0", cmd_schouten}},
	    {"deform-projector", {"e * e = e", cmd_deform_projector}},
	    {"metric", {"h(phi, psi . f) = h(phi, psi) * f; h(phi, psi) = conj(h(psi, phi))", cmd_metric}},
	    {"module-check", {"(F . f) . g = F . (f * g); F . 1 = F; g^*(F . f) = g^*(F) . f",
	                      cmd_module_check, true}},
	    {"extend-module", {"delta rho_{k+1} = R_k", cmd_extend_module, true}},
	    {"equiv-solve", {"T(F . f) = T(F) .~ f", cmd_equiv_solve, true}},
	    {"lift-vertical", {"D(F . f) = D(F) . f", cmd_lift_vertical, true}},
	    {"star-prime", {"D *' E = rho'^-1(rho'(D) o rho'(E))", cmd_star_prime, true}},
	};
	return table;
}

json error_report(const std::string &name, const std::string &message)
{
	return {{"command", name}, {"verdict", "error"}, {"error", message}};
}

} // namespace

const std::vector<std::string> &command_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> out;
		for (const auto &[k, v] : commands())
			out.push_back(k);
		return out;
	}();
	return names;
}

Outcome run_command(const std::string &name, const Workspace &ws)
{
	auto it = commands().find(name);
	if (it == commands().end())
		return {Verdict::error, error_report(name, "unknown command")};
	const Command &cmd = it->second;
	json out;
	out["command"] = name;
	out["identity"] = cmd.identity;
	out["order"] = ws.order;
	out["degree_bound"] = ws.degree_bound;
	if (cmd.uses_solver)
		out["bounds"] = bounds_json(ws);
	Verdict v;
	try {
		v = cmd.run(ws, out);
	} catch (const NoSolutionInTruncation &e) {
		v = Verdict::inconclusive;
		out["reason"] = e.what();
		if (e.order() >= 0)
			out["failed_order"] = e.order();
	} catch (const Error &e) {
		return {Verdict::error, error_report(name, e.what())};
	} catch (const json::exception &e) {
		return {Verdict::error, error_report(name, std::string("malformed input: ") + e.what())};
	}
	out["verdict"] = verdict_name(v);
	return {v, std::move(out)};
}

Outcome run_command_file(const std::string &name, const std::string &workspace_file,
                         const Overrides &overrides)
{
	try {
		Workspace ws = load_workspace_file(workspace_file);
		apply_overrides(ws, overrides);
		return run_command(name, ws);
	} catch (const Error &e) {
		return {Verdict::error, error_report(name, e.what())};
	} catch (const json::exception &e) {
		return {Verdict::error, error_report(name, std::string("malformed workspace: ") + e.what())};
	}
}

} // namespace dqtool

#include "dqtool/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dqtool {

using nlohmann::json;

namespace {

bool is_identifier(const std::string &s)
{
	if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
		return false;
	for (char c : s)
		if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
			return false;
	return s != "i" && s != "lam" && s.rfind("d_", 0) != 0;
}

std::vector<std::string> names(const json &j, const char *key)
{
	if (!j.contains(key))
		return {};
	std::vector<std::string> out;
	for (const auto &v : j.at(key)) {
		std::string s = v.get<std::string>();
		if (!is_identifier(s))
			throw InputError("invalid variable name '" + s + "'");
		out.push_back(s);
	}
	return out;
}

std::string text_of(const json &v)
{
	if (v.is_string())
		return v.get<std::string>();
	if (v.is_number_integer())
		return std::to_string(v.get<long long>());
	throw InputError("expected an expression string, got " + v.dump());
}

int positive(const json &v, const char *what, int min)
{
	int n = v.get<int>();
	if (n < min)
		throw InputError(std::string(what) + " must be at least " + std::to_string(min));
	return n;
}

dq::MultiDiffOp cochain_terms(const Workspace &ws, const json &terms)
{
	dq::MultiDiffOp c(2);
	for (const auto &t : terms) {
		dq::DiffOp left = ws.derivative(t.value("left", ""));
		dq::DiffOp right = ws.derivative(t.value("right", ""));
		dq::Monomial a = left.terms().begin()->first, b = right.terms().begin()->first;
		if (a.degree(ws.space.base_count(), ws.space.fiber_count()) != 0 ||
		    b.degree(ws.space.base_count(), ws.space.fiber_count()) != 0)
			throw InputError("star cochains may only differentiate in base variables");
		c.add_term({a, b}, ws.polynomial(text_of(t.at("coeff"))));
	}
	return c;
}

} // namespace

dq::PoissonTensor Workspace::poisson() const
{
	if (theta.empty())
		throw InputError("workspace has no theta");
	return dq::PoissonTensor(theta);
}

dq::StarProduct Workspace::star(int n) const
{
	if (moyal)
		return dq::StarProduct::moyal(poisson(), n);
	std::vector<dq::MultiDiffOp> c{dq::MultiDiffOp::pointwise()};
	for (int r = 1; r <= n && r <= static_cast<int>(cochains.size()); ++r)
		c.push_back(cochains[static_cast<std::size_t>(r - 1)]);
	return dq::StarProduct(std::move(c), n, space.base_count());
}

const json &Workspace::input(const std::string &key) const
{
	if (!inputs.contains(key))
		throw InputError("missing input '" + key + "'");
	return inputs.at(key);
}

dq::PolySeries Workspace::series(const std::string &text) const
{
	return dq::parse_series(text, space, order);
}

dq::Polynomial Workspace::polynomial(const std::string &text) const
{
	return dq::parse_polynomial(text, space);
}

dq::DiffOp Workspace::derivative(const std::string &text) const
{
	if (text.empty() || text == "1")
		return dq::DiffOp::identity();
	dq::OperatorSeries s = dq::parse_operator(text, space, 0);
	const dq::DiffOp &d = s[0];
	if (d.terms().size() != 1 || d.terms().begin()->second != dq::Polynomial(1))
		throw InputError("'" + text + "' is not a product of partial derivatives");
	return d;
}

dq::OperatorSeries Workspace::operator_series(const std::string &text) const
{
	return dq::parse_operator(text, space, order);
}

Workspace load_workspace(const json &j, const std::filesystem::path &dir)
{
	if (!j.is_object())
		throw InputError("workspace must be a JSON object");
	Workspace ws;
	ws.space.base = names(j, "base");
	ws.space.fiber = names(j, "fiber");
	if (ws.space.base.empty())
		throw InputError("workspace needs at least one base variable");
	if (ws.space.size() > dq::kMaxVariables)
		throw InputError("too many variables");
	std::set<std::string> seen(ws.space.base.begin(), ws.space.base.end());
	seen.insert(ws.space.fiber.begin(), ws.space.fiber.end());
	if (static_cast<int>(seen.size()) != ws.space.size())
		throw InputError("variable names must be distinct");

	if (j.contains("order"))
		ws.order = positive(j.at("order"), "order", 1);
	if (j.contains("degree_bound"))
		ws.degree_bound = positive(j.at("degree_bound"), "degree_bound", 0);
	if (j.contains("bounds")) {
		const json &b = j.at("bounds");
		if (!b.is_array() || b.size() != 3)
			throw InputError("bounds must be [order, degree, derivatives]");
		ws.bounds = {positive(b[0], "bounds", 0), positive(b[1], "bounds", 0),
		             positive(b[2], "bounds", 0)};
	}
	ws.equivariant = j.value("equivariant", false);
	if (j.contains("inputs"))
		ws.inputs = j.at("inputs");

	if (j.contains("theta")) {
		const json &t = j.at("theta");
		if (t.size() != ws.space.base.size())
			throw InputError("theta must be a square matrix over the base variables");
		for (const auto &row : t) {
			if (row.size() != t.size())
				throw InputError("theta must be a square matrix over the base variables");
			std::vector<dq::Polynomial> r;
			for (const auto &v : row) {
				dq::Polynomial p = ws.polynomial(text_of(v));
				if (!p.only_uses(0, ws.space.base_count()))
					throw InputError("theta entries may only use base variables");
				if (!p.is_real())
					throw InputError("theta entries must be real");
				r.push_back(p);
			}
			ws.theta.push_back(std::move(r));
		}
		for (std::size_t a = 0; a < ws.theta.size(); ++a)
			for (std::size_t b = 0; b < ws.theta.size(); ++b)
				if (ws.theta[a][b] != -ws.theta[b][a])
					throw InputError("theta must be antisymmetric");
	}

	json star = j.value("star", json("moyal"));
	if (star.is_string()) {
		if (star.get<std::string>() != "moyal")
			throw InputError("unknown star product '" + star.get<std::string>() + "'");
	} else {
		ws.moyal = false;
		json cochains;
		if (star.contains("file")) {
			std::ifstream in(dir / star.at("file").get<std::string>());
			if (!in)
				throw InputError("cannot open cochain file " + star.at("file").get<std::string>());
			cochains = json::parse(in).at("cochains");
		} else {
			cochains = star.at("cochains");
		}
		for (const auto &terms : cochains)
			ws.cochains.push_back(cochain_terms(ws, terms));
	}
	return ws;
}

Workspace load_workspace_file(const std::filesystem::path &file)
{
	std::ifstream in(file);
	if (!in)
		throw InputError("cannot open workspace " + file.string());
	json j;
	try {
		j = json::parse(in);
	} catch (const json::parse_error &e) {
		throw InputError(std::string("workspace is not valid JSON: ") + e.what());
	}
	return load_workspace(j, file.parent_path());
}

void apply_overrides(Workspace &ws, const Overrides &o)
{
	if (o.order) {
		if (*o.order < 1)
			throw InputError("order must be at least 1");
		ws.order = *o.order;
	}
	if (o.degree_bound) {
		if (*o.degree_bound < 0)
			throw InputError("degree bound must be nonnegative");
		ws.degree_bound = *o.degree_bound;
	}
	if (o.bounds)
		ws.bounds = *o.bounds;
	if (o.equivariant)
		ws.equivariant = true;
}

dq::AnsatzBounds parse_bounds(const std::string &text)
{
	std::vector<int> v;
	std::stringstream in(text);
	std::string item;
	while (std::getline(in, item, ',')) {
		try {
			std::size_t used = 0;
			int n = std::stoi(item, &used);
			if (used != item.size() || n < 0)
				throw InputError("");
			v.push_back(n);
		} catch (const std::exception &) {
			throw InputError("bounds must be three nonnegative integers, got '" + text + "'");
		}
	}
	if (v.size() != 3)
		throw InputError("bounds must be three nonnegative integers, got '" + text + "'");
	return {v[0], v[1], v[2]};
}

} // namespace dqtool

#include "dq/principal_bundle.hpp"

#include <stdexcept>

namespace dq {

namespace {

Cochain mult_cochain(SubmersionModel model)
{
	return Cochain::multiplication(MultiDiffOp::pointwise(1), model);
}

MultiDiffOp as_unary(const DiffOp &d)
{
	MultiDiffOp out(1);
	for (const auto &[alpha, p] : d.terms())
		out.add_term({alpha}, p);
	return out;
}

std::vector<Monomial> total_monomials(SubmersionModel model, int degree)
{
	return monomials_up_to(0, model.total(), degree);
}

std::vector<Monomial> base_monomials(SubmersionModel model, int degree)
{
	return monomials_up_to(0, model.base, degree);
}

} // namespace

ModuleDeformation::ModuleDeformation(const StarProduct &star, SubmersionModel model,
                                     std::vector<Cochain> stages)
    : star_(star), model_(model), mult_(mult_cochain(model)), stages_(std::move(stages))
{
	if (star.base_count() != model.base)
		throw DimensionMismatch("star product and bundle model disagree on the base");
	if (order() > star.order())
		throw OrderMismatch("module has more stages than the star product has orders");
	for (const auto &s : stages_)
		if (s.arity() != 1 || s.model() != model)
			throw DimensionMismatch("module stages must be arity-1 cochains on the model");
}

const Cochain &ModuleDeformation::stage(int r) const
{
	if (r == 0)
		return mult_;
	return stages_.at(static_cast<std::size_t>(r - 1));
}

OperatorSeries ModuleDeformation::right_operator(const PolySeries &f) const
{
	if (f.order() != order())
		throw OrderMismatch("operand truncation differs from the module's");
	OperatorSeries out(order());
	for (int b = 0; b <= order(); ++b) {
		if (f[b].is_zero())
			continue;
		for (int r = 0; b + r <= order(); ++r)
			out[b + r] += stage(r)(f[b]);
	}
	return out;
}

PolySeries ModuleDeformation::act(const PolySeries &big_f, const PolySeries &f) const
{
	return apply(right_operator(f), big_f);
}

ModuleDeformation ModuleDeformation::truncated(int k) const
{
	return ModuleDeformation(star_, model_,
	                         std::vector<Cochain>(stages_.begin(), stages_.begin() + std::min(k, order())));
}

ModuleDeformation ModuleDeformation::extended(Cochain next) const
{
	auto s = stages_;
	s.push_back(std::move(next));
	return ModuleDeformation(star_, model_, std::move(s));
}

bool ModuleDeformation::is_equivariant() const
{
	for (const auto &s : stages_)
		if (!s.is_equivariant())
			return false;
	return true;
}

ModuleDeformation product_bundle_module(const StarProduct &star, SubmersionModel model)
{
	std::vector<Cochain> stages;
	for (int r = 1; r <= star.order(); ++r) {
		Cochain c(1, model);
		for (const auto &[k, p] : star.cochain(r).terms())
			c.add_term({{k[1]}, k[0]}, p);
		stages.push_back(std::move(c));
	}
	return ModuleDeformation(star, model, std::move(stages));
}

namespace {

Cochain obstruction_raw(const ModuleDeformation &rho, int k)
{
	const StarProduct &star = rho.star();
	if (k + 1 > star.order())
		throw OrderMismatch("the obstruction at order " + std::to_string(k) + " needs C_" +
		                    std::to_string(k + 1));
	Cochain out = Cochain::multiplication(star.cochain(k + 1), rho.model());
	for (int r = 1; r <= k; ++r) {
		out += precompose_argument(rho.stage(r), 0, star.cochain(k + 1 - r));
		out -= compose_swapped(rho.stage(r), rho.stage(k + 1 - r));
	}
	return out;
}

} // namespace

bool is_module_to_order(const ModuleDeformation &rho, int k)
{
	if (k > rho.order())
		return false;
	for (int j = 1; j <= k; ++j)
		if (hochschild_delta(rho.stage(j)) != obstruction_raw(rho, j - 1))
			return false;
	return true;
}

Cochain obstruction_cocycle(const ModuleDeformation &rho, int k)
{
	if (!is_module_to_order(rho, k))
		throw NotModuleToOrderK("stages 1.." + std::to_string(k) +
		                        " do not satisfy the module law");
	return obstruction_raw(rho, k);
}

namespace {

CheckReport module_law(const ModuleDeformation &rho, int degree_bound)
{
	CheckReport rep;
	rep.property = "module law";
	rep.degree_bound = degree_bound;
	int n = rho.order();
	StarProduct star = rho.star().truncated(n);
	auto bigs = total_monomials(rho.model(), degree_bound);
	auto smalls = base_monomials(rho.model(), degree_bound);
	std::vector<OperatorSeries> right;
	for (const auto &f : smalls)
		right.push_back(rho.right_operator(Polynomial(f)));
	for (std::size_t i = 0; i < smalls.size(); ++i)
		for (std::size_t j = 0; j < smalls.size(); ++j) {
			OperatorSeries prod = rho.right_operator(star.multiply(Polynomial(smalls[i]),
			                                                       Polynomial(smalls[j])));
			for (const auto &big : bigs) {
				PolySeries f_big(n, Polynomial(big));
				PolySeries lhs = apply(prod, f_big);
				PolySeries rhs = apply(right[j], apply(right[i], f_big));
				rep.compare(lhs - rhs, {Polynomial(big), Polynomial(smalls[i]), Polynomial(smalls[j])});
			}
		}
	return rep;
}

} // namespace

ModuleDeformation extend_module_order(const ModuleDeformation &rho, CoboundaryOptions options)
{
	int k = rho.order();
	Cochain r = obstruction_cocycle(rho, k);
	options.order = k;
	ModuleDeformation out = rho.extended(solve_coboundary(r, options));
	if (!module_law(out, options.verify_degree).pass)
		throw std::logic_error("extended module failed the module-law re-check");
	return out;
}

GroupActionModel::GroupActionModel(SubmersionModel model,
                                   std::vector<std::vector<Rational>> translations)
    : model_(model), translations_(std::move(translations))
{
	for (const auto &c : translations_)
		if (static_cast<int>(c.size()) != model.fiber)
			throw DimensionMismatch("translation vector has the wrong length");
}

GroupActionModel GroupActionModel::standard(SubmersionModel model)
{
	std::vector<std::vector<Rational>> t;
	for (int i = 0; i < model.fiber; ++i) {
		std::vector<Rational> c(static_cast<std::size_t>(model.fiber));
		c[static_cast<std::size_t>(i)] = Rational(1);
		t.push_back(std::move(c));
	}
	if (model.fiber > 0)
		t.emplace_back(static_cast<std::size_t>(model.fiber), Rational(1, 2));
	return GroupActionModel(model, std::move(t));
}

Polynomial GroupActionModel::act(std::size_t g, const Polynomial &big_f) const
{
	Polynomial out = big_f;
	for (int i = 0; i < model_.fiber; ++i)
		if (!translations_.at(g)[static_cast<std::size_t>(i)].is_zero())
			out = out.translated(model_.base + i, translations_[g][static_cast<std::size_t>(i)]);
	return out;
}

DiffOp GroupActionModel::act(std::size_t g, const DiffOp &d) const
{
	DiffOp out = d;
	for (int i = 0; i < model_.fiber; ++i)
		if (!translations_.at(g)[static_cast<std::size_t>(i)].is_zero())
			out = out.translated(model_.base + i, translations_[g][static_cast<std::size_t>(i)]);
	return out;
}

const CheckReport &ModuleCheck::first_failure() const
{
	if (!module_law.pass)
		return module_law;
	if (!unitality.pass)
		return unitality;
	if (!equivariance.pass)
		return equivariance;
	return module_law;
}

ModuleCheck check_module_structure(const ModuleDeformation &rho, int degree_bound,
                                   const GroupActionModel &group)
{
	ModuleCheck out;
	out.module_law = module_law(rho, degree_bound);

	int n = rho.order();
	auto bigs = total_monomials(rho.model(), degree_bound);
	out.unitality.property = "unitality";
	out.unitality.degree_bound = degree_bound;
	OperatorSeries unit = rho.right_operator(Polynomial(1));
	for (const auto &big : bigs) {
		PolySeries f_big(n, Polynomial(big));
		out.unitality.compare(apply(unit, f_big) - f_big, {Polynomial(big)});
	}

	out.equivariance.property = "equivariance";
	out.equivariance.degree_bound = degree_bound;
	for (const auto &f : base_monomials(rho.model(), degree_bound)) {
		OperatorSeries right = rho.right_operator(Polynomial(f));
		for (const auto &big : bigs)
			for (std::size_t g = 0; g < group.translations().size(); ++g) {
				PolySeries acted = apply(right, PolySeries(n, Polynomial(big)));
				PolySeries lhs(n);
				for (int r = 0; r <= n; ++r)
					lhs[r] = group.act(g, acted[r]);
				PolySeries rhs = apply(right, PolySeries(n, group.act(g, Polynomial(big))));
				out.equivariance.compare(lhs - rhs, {Polynomial(big), Polynomial(f)},
				                         "translation " + std::to_string(g));
			}
	}
	return out;
}

OperatorSeries solve_intertwiner(const ModuleDeformation &rho, const ModuleDeformation &rho_tilde,
                                 const DiffOp &t0, CoboundaryOptions options)
{
	if (rho.order() != rho_tilde.order() || rho.model() != rho_tilde.model())
		throw DimensionMismatch("module structures are not comparable");
	SubmersionModel model = rho.model();
	int n = rho.order();
	if (!hochschild_delta(Cochain::from_operator(t0, model)).is_zero())
		throw NotVertical("the order-0 operator does not commute with base multiplications");
	OperatorSeries t(n);
	t[0] = t0;
	for (int k = 1; k <= n; ++k) {
		Cochain target(1, model);
		for (int a = 0; a < k; ++a) {
			if (t[a].is_zero())
				continue;
			target += compose(rho_tilde.stage(k - a), t[a]);
			target -= compose(t[a], rho.stage(k - a));
		}
		options.order = k;
		t[k] = solve_coboundary(target, options).as_operator();
	}
	return t;
}

CheckReport check_intertwiner(const OperatorSeries &t, const ModuleDeformation &rho,
                              const ModuleDeformation &rho_tilde, int degree_bound)
{
	CheckReport rep;
	rep.property = "intertwiner";
	rep.degree_bound = degree_bound;
	int n = rho.order();
	auto bigs = total_monomials(rho.model(), degree_bound);
	for (const auto &f : base_monomials(rho.model(), degree_bound)) {
		OperatorSeries r = rho.right_operator(Polynomial(f));
		OperatorSeries rt = rho_tilde.right_operator(Polynomial(f));
		for (const auto &big : bigs) {
			PolySeries f_big(n, Polynomial(big));
			rep.compare(apply(t, apply(r, f_big)) - apply(rt, apply(t, f_big)),
			            {Polynomial(big), Polynomial(f)});
		}
	}
	return rep;
}

EquivalenceTransform solve_module_equivalence(const ModuleDeformation &rho,
                                              const ModuleDeformation &rho_tilde,
                                              CoboundaryOptions options)
{
	OperatorSeries t = solve_intertwiner(rho, rho_tilde, DiffOp::identity(), options);
	if (!check_intertwiner(t, rho, rho_tilde, options.verify_degree).pass)
		throw std::logic_error("module equivalence failed the re-check");
	return EquivalenceTransform(std::move(t));
}

ModuleDeformation conjugate(const ModuleDeformation &rho, const EquivalenceTransform &t)
{
	int n = rho.order();
	if (t.order() < n)
		throw OrderMismatch("transform is truncated below the module order");
	EquivalenceTransform u = t.inverse();
	std::vector<Cochain> stages;
	for (int k = 1; k <= n; ++k) {
		Cochain s(1, rho.model());
		for (int a = 0; a <= k; ++a)
			for (int b = 0; a + b <= k; ++b) {
				int c = k - a - b;
				if (t.stage(a).is_zero() || u.stage(c).is_zero())
					continue;
				s += compose(compose(t.stage(a), rho.stage(b)), u.stage(c));
			}
		stages.push_back(std::move(s));
	}
	return ModuleDeformation(rho.star(), rho.model(), std::move(stages));
}

ModuleDeformation pull_star(const ModuleDeformation &rho, const EquivalenceTransform &phi)
{
	StarProduct star = apply_equivalence(phi, rho.star());
	std::vector<Cochain> stages;
	for (int k = 1; k <= rho.order(); ++k) {
		Cochain s(1, rho.model());
		for (int a = 0; a <= k; ++a)
			if (!phi.stage(k - a).is_zero())
				s += precompose_argument(rho.stage(a), 0, as_unary(phi.stage(k - a)));
		stages.push_back(std::move(s));
	}
	return ModuleDeformation(star, rho.model(), std::move(stages));
}

} // namespace dq

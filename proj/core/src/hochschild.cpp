#include "dq/hochschild.hpp"

#include "dq/linear_system.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace dq {

Cochain::Cochain(int arity, SubmersionModel model) : arity_(arity), model_(model)
{
	if (arity < 0)
		throw ArityUnsupported("negative arity");
}

Cochain Cochain::from_operator(const DiffOp &d, SubmersionModel model)
{
	Cochain c(0, model);
	for (const auto &[alpha, p] : d.terms())
		c.add_term({{}, alpha}, p);
	return c;
}

Cochain Cochain::multiplication(const MultiDiffOp &op, SubmersionModel model)
{
	Cochain c(op.arity(), model);
	for (const auto &[betas, p] : op.terms())
		c.add_term({betas, Monomial{}}, p);
	return c;
}

void Cochain::add_term(const Key &key, const Polynomial &coeff)
{
	if (static_cast<int>(key.betas.size()) != arity_)
		throw DimensionMismatch("cochain term has wrong arity");
	if (coeff.is_zero())
		return;
	for (const auto &b : key.betas)
		if (b.degree(0, model_.base) != b.degree())
			throw DimensionMismatch("cochain arguments are base functions");
	auto [it, inserted] = terms_.try_emplace(key, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

DiffOp Cochain::evaluate(std::span<const Polynomial> args) const
{
	if (static_cast<int>(args.size()) != arity_)
		throw DimensionMismatch("wrong number of cochain arguments");
	DiffOp out;
	for (const auto &[key, p] : terms_) {
		Polynomial c = p;
		for (std::size_t i = 0; i < args.size() && !c.is_zero(); ++i)
			c *= args[i].derivative(key.betas[i]);
		out.add_term(key.alpha, c);
	}
	return out;
}

DiffOp Cochain::operator()(const Polynomial &f) const
{
	const Polynomial a[] = {f};
	return evaluate(a);
}

DiffOp Cochain::operator()(const Polynomial &f, const Polynomial &g) const
{
	const Polynomial a[] = {f, g};
	return evaluate(a);
}

DiffOp Cochain::as_operator() const
{
	if (arity_ != 0)
		throw ArityUnsupported("as_operator() needs arity 0");
	return evaluate({});
}

Cochain &Cochain::operator+=(const Cochain &o)
{
	if (o.arity_ != arity_ || o.model_ != model_)
		throw DimensionMismatch("cochains are not compatible");
	for (const auto &[k, p] : o.terms_)
		add_term(k, p);
	return *this;
}

Cochain &Cochain::operator-=(const Cochain &o)
{
	if (o.arity_ != arity_ || o.model_ != model_)
		throw DimensionMismatch("cochains are not compatible");
	for (const auto &[k, p] : o.terms_)
		add_term(k, -p);
	return *this;
}

Cochain &Cochain::operator*=(const Complex &z)
{
	if (z.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[k, p] : terms_)
		p *= z;
	return *this;
}

bool Cochain::is_equivariant() const
{
	return std::all_of(terms_.begin(), terms_.end(),
	                   [&](const auto &t) { return t.second.only_uses(0, model_.base); });
}

Cochain Cochain::translated(int var, const Rational &shift) const
{
	Cochain out(arity_, model_);
	for (const auto &[k, p] : terms_)
		out.add_term(k, p.translated(var, shift));
	return out;
}

int Cochain::max_operator_order() const
{
	int o = -1;
	for (const auto &[k, p] : terms_)
		o = std::max(o, k.alpha.degree());
	return o;
}

int Cochain::max_base_derivatives() const
{
	int o = -1;
	for (const auto &[k, p] : terms_)
		for (const auto &b : k.betas)
			o = std::max(o, b.degree());
	return o;
}

int Cochain::coefficient_degree() const
{
	int d = -1;
	for (const auto &[k, p] : terms_)
		d = std::max(d, p.degree());
	return d;
}

Cochain compose(const Cochain &a, const Cochain &b, const std::vector<int> &a_slots,
                const std::vector<int> &b_slots)
{
	if (a.model() != b.model())
		throw DimensionMismatch("cochains live on different models");
	if (static_cast<int>(a_slots.size()) != a.arity() || static_cast<int>(b_slots.size()) != b.arity())
		throw DimensionMismatch("slot lists do not match arities");
	int arity = a.arity() + b.arity();
	int m = a.model().base;

	// d^alpha of a passes through b: part 0 hits b's coefficient, parts
	// 1..kb hit b's (base) arguments, the last part stays a derivative.
	std::vector<int> limits{kMaxVariables};
	limits.insert(limits.end(), static_cast<std::size_t>(b.arity()), m);
	limits.push_back(kMaxVariables);

	Cochain out(arity, a.model());
	for (const auto &[ka, p] : a.terms())
		for (const auto &[kb, q] : b.terms())
			distribute(ka.alpha, limits, [&](std::span<const Monomial> parts, const Rational &w) {
				Polynomial dq = q.derivative(parts[0]);
				if (dq.is_zero())
					return;
				Cochain::Key key{std::vector<Monomial>(static_cast<std::size_t>(arity)),
				                 parts.back() + kb.alpha};
				for (std::size_t i = 0; i < a_slots.size(); ++i)
					key.betas[static_cast<std::size_t>(a_slots[i])] = ka.betas[i];
				for (std::size_t j = 0; j < b_slots.size(); ++j)
					key.betas[static_cast<std::size_t>(b_slots[j])] = kb.betas[j] + parts[1 + j];
				out.add_term(key, (p * dq) * Complex(w));
			});
	return out;
}

Cochain compose_swapped(const Cochain &a, const Cochain &b)
{
	if (a.arity() != 1 || b.arity() != 1)
		throw ArityUnsupported("compose_swapped() needs arity-1 cochains");
	return compose(a, b, {1}, {0});
}

Cochain compose(const DiffOp &d, const Cochain &c)
{
	std::vector<int> slots(static_cast<std::size_t>(c.arity()));
	std::iota(slots.begin(), slots.end(), 0);
	return compose(Cochain::from_operator(d, c.model()), c, {}, slots);
}

Cochain compose(const Cochain &c, const DiffOp &d)
{
	std::vector<int> slots(static_cast<std::size_t>(c.arity()));
	std::iota(slots.begin(), slots.end(), 0);
	return compose(c, Cochain::from_operator(d, c.model()), slots, {});
}

Cochain merge_arguments(const Cochain &c, int slot)
{
	if (slot < 0 || slot >= c.arity())
		throw DimensionMismatch("merge slot out of range");
	int m = c.model().base;
	const int limits[] = {m, m};
	auto s = static_cast<std::size_t>(slot);
	Cochain out(c.arity() + 1, c.model());
	for (const auto &[k, p] : c.terms())
		distribute(k.betas[s], limits, [&](std::span<const Monomial> parts, const Rational &w) {
			Cochain::Key key{{}, k.alpha};
			key.betas.insert(key.betas.end(), k.betas.begin(), k.betas.begin() + slot);
			key.betas.push_back(parts[0]);
			key.betas.push_back(parts[1]);
			key.betas.insert(key.betas.end(), k.betas.begin() + slot + 1, k.betas.end());
			out.add_term(key, p * Complex(w));
		});
	return out;
}

Cochain precompose_argument(const Cochain &c, int slot, const MultiDiffOp &op)
{
	if (slot < 0 || slot >= c.arity())
		throw DimensionMismatch("argument slot out of range");
	int m = c.model().base;
	std::vector<int> limits(static_cast<std::size_t>(op.arity()) + 1, m);
	auto s = static_cast<std::size_t>(slot);
	Cochain out(c.arity() - 1 + op.arity(), c.model());
	for (const auto &[k, p] : c.terms())
		for (const auto &[obetas, oc] : op.terms())
			distribute(k.betas[s], limits, [&](std::span<const Monomial> parts, const Rational &w) {
				Polynomial doc = oc.derivative(parts[0]);
				if (doc.is_zero())
					return;
				Cochain::Key key{{}, k.alpha};
				key.betas.insert(key.betas.end(), k.betas.begin(), k.betas.begin() + slot);
				for (std::size_t j = 0; j < obetas.size(); ++j)
					key.betas.push_back(obetas[j] + parts[1 + j]);
				key.betas.insert(key.betas.end(), k.betas.begin() + slot + 1, k.betas.end());
				out.add_term(key, (p * doc) * Complex(w));
			});
	return out;
}

Cochain hochschild_delta(const Cochain &c)
{
	int k = c.arity();
	if (k > 2)
		throw ArityUnsupported("delta is implemented for arity <= 2");
	Cochain mult = Cochain::multiplication(MultiDiffOp::pointwise(1), c.model());

	std::vector<int> tail(static_cast<std::size_t>(k));
	std::iota(tail.begin(), tail.end(), 1);
	std::vector<int> head(static_cast<std::size_t>(k));
	std::iota(head.begin(), head.end(), 0);

	// f_0 . c(f_1..f_k)
	Cochain out = compose(c, mult, tail, {0});
	for (int i = 0; i < k; ++i) {
		Cochain merged = merge_arguments(c, i);
		if (i % 2 == 0)
			out -= merged;
		else
			out += merged;
	}
	// c(f_0..f_{k-1}) . f_k
	Cochain last = compose(mult, c, {k}, head);
	if (k % 2 == 0)
		out -= last;
	else
		out += last;
	return out;
}

namespace {

template <class Visit>
void for_each_tuple(const std::vector<Monomial> &monos, int arity, Visit &&visit)
{
	std::vector<Polynomial> args(static_cast<std::size_t>(arity));
	std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
	if (arity > 0 && monos.empty())
		return;
	while (true) {
		for (int i = 0; i < arity; ++i)
			args[static_cast<std::size_t>(i)] = Polynomial(monos[idx[static_cast<std::size_t>(i)]]);
		visit(std::span<const Polynomial>(args));
		int i = arity - 1;
		for (; i >= 0; --i) {
			auto &x = idx[static_cast<std::size_t>(i)];
			if (++x < monos.size())
				break;
			x = 0;
		}
		if (i < 0)
			return;
	}
}

} // namespace

CheckReport is_cocycle(const Cochain &c, int degree_bound)
{
	CheckReport rep;
	rep.property = "cocycle";
	rep.degree_bound = degree_bound;
	Cochain d = hochschild_delta(c);
	auto monos = monomials_up_to(0, c.model().base, degree_bound);
	for_each_tuple(monos, d.arity(), [&](std::span<const Polynomial> args) {
		++rep.cases;
		DiffOp v = d.evaluate(args);
		if (!v.is_zero())
			rep.record(0, Witness{{args.begin(), args.end()}, Polynomial(), "delta c", v});
	});
	return rep;
}

namespace {

struct Unknown
{
	Cochain::Key key;
	Monomial coeff;
};

std::vector<Unknown> ansatz(int arity, SubmersionModel model, const CoboundaryOptions &o)
{
	auto alphas = monomials_up_to(0, model.total(), o.bounds.max_diffop_order);
	auto betas = monomials_up_to(0, model.base, o.bounds.max_base_derivatives);
	auto coeffs = monomials_up_to(0, o.equivariant ? model.base : model.total(),
	                              o.bounds.max_coeff_degree);

	std::vector<std::vector<Monomial>> beta_tuples{{}};
	for (int i = 0; i < arity; ++i) {
		std::vector<std::vector<Monomial>> next;
		for (const auto &t : beta_tuples)
			for (const auto &b : betas) {
				next.push_back(t);
				next.back().push_back(b);
			}
		beta_tuples = std::move(next);
	}

	std::vector<Unknown> out;
	for (const auto &a : alphas)
		for (const auto &bt : beta_tuples)
			for (const auto &c : coeffs)
				out.push_back({{bt, a}, c});

	auto rank = [&](const Unknown &u) {
		int beta_total = 0;
		for (const auto &b : u.key.betas)
			beta_total += b.degree();
		int alpha = u.key.alpha.degree();
		return std::array<int, 4>{alpha + beta_total, alpha, alpha - u.key.alpha.degree(0, model.base),
		                          u.coeff.degree()};
	};
	std::stable_sort(out.begin(), out.end(),
	                 [&](const Unknown &x, const Unknown &y) { return rank(x) < rank(y); });
	return out;
}

// delta evaluated through operator composition only, independent of the
// symbolic normal ordering used to set up the linear system.
DiffOp delta_by_evaluation(const Cochain &phi, std::span<const Polynomial> args)
{
	if (phi.arity() == 0) {
		DiffOp d = phi.as_operator();
		DiffOp f = DiffOp::multiplication(args[0]);
		return d * f - f * d;
	}
	const Polynomial &f = args[0];
	const Polynomial &g = args[1];
	return phi(g) * DiffOp::multiplication(f) - phi(f * g) + DiffOp::multiplication(g) * phi(f);
}

std::string describe(const CoboundaryOptions &o)
{
	return "max_diffop_order=" + std::to_string(o.bounds.max_diffop_order) +
	       ", max_coeff_degree=" + std::to_string(o.bounds.max_coeff_degree) +
	       ", max_base_derivatives=" + std::to_string(o.bounds.max_base_derivatives) +
	       (o.equivariant ? ", equivariant" : "");
}

} // namespace

int ansatz_size(int arity, SubmersionModel model, const CoboundaryOptions &options)
{
	return static_cast<int>(ansatz(arity, model, options).size());
}

Cochain solve_coboundary(const Cochain &r, const CoboundaryOptions &options)
{
	if (r.arity() != 1 && r.arity() != 2)
		throw ArityUnsupported("solve_coboundary needs a cochain of arity 1 or 2");
	int arity = r.arity() - 1;
	const SubmersionModel model = r.model();
	if (!hochschild_delta(r).is_zero())
		throw NotACocycle("delta R != 0");
	if (r.is_zero())
		return Cochain(arity, model);

	auto unknowns = ansatz(arity, model, options);
	using RowKey = std::pair<Cochain::Key, Monomial>;
	std::map<RowKey, LinearSystem::Row> rows;
	for (std::size_t j = 0; j < unknowns.size(); ++j) {
		Cochain basis(arity, model);
		basis.add_term(unknowns[j].key, Polynomial(unknowns[j].coeff));
		for (Cochain d = hochschild_delta(basis); const auto &[key, p] : d.terms())
			for (const auto &[mono, c] : p.terms())
				rows[{key, mono}][static_cast<int>(j)] += c;
	}
	std::map<RowKey, Complex> rhs;
	for (const auto &[key, p] : r.terms())
		for (const auto &[mono, c] : p.terms()) {
			rhs[{key, mono}] = c;
			rows.try_emplace({key, mono});
		}

	LinearSystem sys(static_cast<int>(unknowns.size()));
	for (auto &[rk, row] : rows) {
		auto it = rhs.find(rk);
		sys.add_equation(std::move(row), it == rhs.end() ? Complex() : it->second);
		if (!sys.consistent())
			break;
	}
	auto x = sys.solve();
	if (!x)
		throw NoSolutionInTruncation("no coboundary within ansatz (" + describe(options) + ")",
		                             options.order);

	Cochain phi(arity, model);
	for (std::size_t j = 0; j < unknowns.size(); ++j)
		if (!(*x)[j].is_zero())
			phi.add_term(unknowns[j].key, Polynomial(unknowns[j].coeff, (*x)[j]));

	auto monos = monomials_up_to(0, model.base, options.verify_degree);
	for_each_tuple(monos, r.arity(), [&](std::span<const Polynomial> args) {
		if (delta_by_evaluation(phi, args) != r.evaluate(args))
			throw std::logic_error("coboundary solution failed the independent re-check");
	});
	return phi;
}

} // namespace dq

#include "dq/diffop.hpp"

#include <algorithm>

namespace dq {

namespace {

void distribute_rec(const Monomial &rest, std::span<const int> limits, std::size_t idx,
                    std::vector<Monomial> &parts, const Rational &weight,
                    const std::function<void(std::span<const Monomial>, const Rational &)> &emit)
{
	if (idx + 1 == parts.size()) {
		for (int v = limits[idx]; v < kMaxVariables; ++v)
			if (rest[v] != 0)
				return;
		parts[idx] = rest;
		emit(parts, weight);
		return;
	}
	for (const auto &g : sub_indices(rest)) {
		bool ok = true;
		for (int v = limits[idx]; v < kMaxVariables && ok; ++v)
			ok = g[v] == 0;
		if (!ok)
			continue;
		parts[idx] = g;
		distribute_rec(rest - g, limits, idx + 1, parts, weight * binomial(rest, g), emit);
	}
}

} // namespace

void distribute(const Monomial &gamma, std::span<const int> var_limit,
                const std::function<void(std::span<const Monomial>, const Rational &)> &emit)
{
	if (var_limit.empty())
		return;
	std::vector<Monomial> parts(var_limit.size());
	distribute_rec(gamma, var_limit, 0, parts, Rational(1), emit);
}

DiffOp DiffOp::multiplication(const Polynomial &p) { return derivative(Monomial{}, p); }

DiffOp DiffOp::derivative(const Monomial &alpha, const Polynomial &coeff)
{
	DiffOp d;
	d.add_term(alpha, coeff);
	return d;
}

int DiffOp::order() const
{
	int o = -1;
	for (const auto &[a, c] : terms_)
		o = std::max(o, a.degree());
	return o;
}

Polynomial DiffOp::coefficient(const Monomial &alpha) const
{
	auto it = terms_.find(alpha);
	return it == terms_.end() ? Polynomial() : it->second;
}

void DiffOp::add_term(const Monomial &alpha, const Polynomial &coeff)
{
	if (coeff.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(alpha, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Polynomial DiffOp::apply(const Polynomial &f) const
{
	Polynomial out;
	for (const auto &[a, c] : terms_) {
		Polynomial d = f.derivative(a);
		if (!d.is_zero())
			out += c * d;
	}
	return out;
}

DiffOp &DiffOp::operator+=(const DiffOp &o)
{
	for (const auto &[a, c] : o.terms_)
		add_term(a, c);
	return *this;
}

DiffOp &DiffOp::operator-=(const DiffOp &o)
{
	for (const auto &[a, c] : o.terms_)
		add_term(a, -c);
	return *this;
}

DiffOp &DiffOp::operator*=(const Complex &z)
{
	if (z.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[a, c] : terms_)
		c *= z;
	return *this;
}

DiffOp operator*(const DiffOp &a, const DiffOp &b)
{
	// c_alpha d^alpha o (d_beta d^beta)
	//   = sum_{g <= alpha} binom(alpha, g) c_alpha (d^g d_beta) d^{alpha - g + beta}
	DiffOp out;
	for (const auto &[alpha, ca] : a.terms_)
		for (const auto &[beta, db] : b.terms_)
			for (const auto &g : sub_indices(alpha)) {
				Polynomial dd = db.derivative(g);
				if (dd.is_zero())
					continue;
				out.add_term(alpha - g + beta, (ca * dd) * Complex(binomial(alpha, g)));
			}
	return out;
}

DiffOp DiffOp::conj() const
{
	DiffOp out;
	for (const auto &[a, c] : terms_)
		out.add_term(a, c.conj());
	return out;
}

DiffOp DiffOp::translated(int var, const Rational &shift) const
{
	DiffOp out;
	for (const auto &[a, c] : terms_)
		out.add_term(a, c.translated(var, shift));
	return out;
}

bool DiffOp::coefficients_only_use(int first, int count) const
{
	return std::all_of(terms_.begin(), terms_.end(),
	                   [&](const auto &t) { return t.second.only_uses(first, count); });
}

bool DiffOp::derivatives_only_use(int first, int count) const
{
	return std::all_of(terms_.begin(), terms_.end(), [&](const auto &t) {
		return t.first.degree() == t.first.degree(first, count);
	});
}

int DiffOp::coefficient_degree() const
{
	int d = -1;
	for (const auto &[a, c] : terms_)
		d = std::max(d, c.degree());
	return d;
}

std::string format(const DiffOp &d, const Space &space)
{
	if (d.is_zero())
		return "0";
	std::string out;
	for (const auto &[alpha, c] : d.terms()) {
		std::string deriv;
		for (int v = 0; v < kMaxVariables; ++v) {
			if (alpha[v] == 0)
				continue;
			if (!deriv.empty())
				deriv += "*";
			deriv += "d_" + (v < space.size() ? space.name(v) : "v" + std::to_string(v));
			if (alpha[v] > 1)
				deriv += "^" + std::to_string(alpha[v]);
		}
		// A lone negative coefficient is pulled out into the joining sign.
		bool negative = false;
		Polynomial shown = c;
		if (c.terms().size() == 1) {
			const Complex &z = c.terms().begin()->second;
			Rational lead = z.re().is_zero() ? z.im() : z.re();
			if ((z.is_real() || z.re().is_zero()) && lead.sign() < 0) {
				negative = true;
				shown = -c;
			}
		}
		std::string coeff = format(shown, space);
		std::string term;
		if (deriv.empty())
			term = shown.terms().size() > 1 ? "(" + coeff + ")" : coeff;
		else if (shown == Polynomial(1))
			term = deriv;
		else
			term = (shown.terms().size() > 1 ? "(" + coeff + ")" : coeff) + "*" + deriv;
		if (out.empty())
			out = negative ? "-" + term : term;
		else
			out += (negative ? " - " : " + ") + term;
	}
	return out;
}

PolySeries apply(const OperatorSeries &d, const PolySeries &f)
{
	d.require_same_order(OperatorSeries(f.order()));
	PolySeries out(f.order());
	for (int a = 0; a <= d.order(); ++a) {
		if (d[a].is_zero())
			continue;
		for (int b = 0; a + b <= f.order(); ++b)
			if (!f[b].is_zero())
				out[a + b] += d[a](f[b]);
	}
	return out;
}

MultiDiffOp MultiDiffOp::pointwise(int arity)
{
	MultiDiffOp b(arity);
	b.add_term(Key(static_cast<std::size_t>(arity)), Polynomial(1));
	return b;
}

void MultiDiffOp::add_term(const Key &betas, const Polynomial &coeff)
{
	if (static_cast<int>(betas.size()) != arity_)
		throw DimensionMismatch("multidifferential term has wrong arity");
	if (coeff.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(betas, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Polynomial MultiDiffOp::apply(std::span<const Polynomial> args) const
{
	if (static_cast<int>(args.size()) != arity_)
		throw DimensionMismatch("wrong number of arguments for multidifferential operator");
	std::vector<std::map<Monomial, Polynomial>> cache(args.size());
	auto deriv = [&](std::size_t slot, const Monomial &b) -> const Polynomial & {
		auto it = cache[slot].find(b);
		if (it == cache[slot].end())
			it = cache[slot].emplace(b, args[slot].derivative(b)).first;
		return it->second;
	};
	Polynomial out;
	for (const auto &[betas, c] : terms_) {
		Polynomial prod = c;
		for (std::size_t s = 0; s < betas.size() && !prod.is_zero(); ++s) {
			const Polynomial &d = deriv(s, betas[s]);
			prod = d.is_zero() ? Polynomial() : prod * d;
		}
		out += prod;
	}
	return out;
}

Polynomial MultiDiffOp::operator()(const Polynomial &f, const Polynomial &g) const
{
	const Polynomial args[] = {f, g};
	return apply(args);
}

int MultiDiffOp::slot_order(int slot) const
{
	int o = -1;
	for (const auto &[betas, c] : terms_)
		o = std::max(o, betas[static_cast<std::size_t>(slot)].degree());
	return o;
}

int MultiDiffOp::max_slot_order() const
{
	int o = -1;
	for (int s = 0; s < arity_; ++s)
		o = std::max(o, slot_order(s));
	return o;
}

int MultiDiffOp::coefficient_degree() const
{
	int d = -1;
	for (const auto &[betas, c] : terms_)
		d = std::max(d, c.degree());
	return d;
}

MultiDiffOp &MultiDiffOp::operator+=(const MultiDiffOp &o)
{
	if (o.arity_ != arity_)
		throw DimensionMismatch("arity mismatch");
	for (const auto &[k, c] : o.terms_)
		add_term(k, c);
	return *this;
}

MultiDiffOp &MultiDiffOp::operator-=(const MultiDiffOp &o)
{
	if (o.arity_ != arity_)
		throw DimensionMismatch("arity mismatch");
	for (const auto &[k, c] : o.terms_)
		add_term(k, -c);
	return *this;
}

MultiDiffOp &MultiDiffOp::operator*=(const Complex &z)
{
	if (z.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[k, c] : terms_)
		c *= z;
	return *this;
}

MultiDiffOp MultiDiffOp::swapped() const
{
	if (arity_ != 2)
		throw DimensionMismatch("swapped() needs arity 2");
	MultiDiffOp out(2);
	for (const auto &[k, c] : terms_)
		out.add_term({k[1], k[0]}, c);
	return out;
}

MultiDiffOp MultiDiffOp::conj() const
{
	MultiDiffOp out(arity_);
	for (const auto &[k, c] : terms_)
		out.add_term(k, c.conj());
	return out;
}

MultiDiffOp MultiDiffOp::precompose(int slot, const DiffOp &d) const
{
	auto s = static_cast<std::size_t>(slot);
	MultiDiffOp out(arity_);
	for (const auto &[betas, c] : terms_)
		for (const auto &[delta, dc] : d.terms())
			for (const auto &g : sub_indices(betas[s])) {
				Polynomial dg = dc.derivative(g);
				if (dg.is_zero())
					continue;
				Key k = betas;
				k[s] = betas[s] - g + delta;
				out.add_term(k, (c * dg) * Complex(binomial(betas[s], g)));
			}
	return out;
}

MultiDiffOp MultiDiffOp::postcompose(const DiffOp &u) const
{
	MultiDiffOp out(arity_);
	std::vector<int> limits(static_cast<std::size_t>(arity_) + 1, kMaxVariables);
	for (const auto &[alpha, ua] : u.terms())
		for (const auto &[betas, c] : terms_)
			distribute(alpha, limits, [&](std::span<const Monomial> parts, const Rational &w) {
				Polynomial dc = c.derivative(parts[0]);
				if (dc.is_zero())
					return;
				Key k = betas;
				for (std::size_t i = 0; i < k.size(); ++i)
					k[i] = k[i] + parts[i + 1];
				out.add_term(k, (ua * dc) * Complex(w));
			});
	return out;
}

DiffOp MultiDiffOp::fix_first(const Polynomial &a) const
{
	if (arity_ != 2)
		throw DimensionMismatch("fix_first() needs arity 2");
	DiffOp out;
	for (const auto &[k, c] : terms_) {
		Polynomial da = a.derivative(k[0]);
		if (!da.is_zero())
			out.add_term(k[1], c * da);
	}
	return out;
}

DiffOp MultiDiffOp::fix_second(const Polynomial &b) const
{
	if (arity_ != 2)
		throw DimensionMismatch("fix_second() needs arity 2");
	DiffOp out;
	for (const auto &[k, c] : terms_) {
		Polynomial db = b.derivative(k[1]);
		if (!db.is_zero())
			out.add_term(k[0], c * db);
	}
	return out;
}

} // namespace dq

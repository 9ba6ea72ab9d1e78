#include "dq/star_product.hpp"

#include <algorithm>

namespace dq {

PoissonTensor::PoissonTensor(std::vector<std::vector<Polynomial>> entries)
    : theta_(std::move(entries))
{
	for (const auto &row : theta_)
		if (row.size() != theta_.size())
			throw DimensionMismatch("theta must be a square matrix");
	for (int mu = 0; mu < dim(); ++mu)
		for (int nu = mu; nu < dim(); ++nu)
			if ((*this)(mu, nu) != -(*this)(nu, mu))
				throw DimensionMismatch("theta must be antisymmetric");
}

PoissonTensor PoissonTensor::constant(const std::vector<std::vector<Rational>> &entries)
{
	std::vector<std::vector<Polynomial>> p;
	for (const auto &row : entries) {
		auto &out = p.emplace_back();
		for (const auto &v : row)
			out.emplace_back(Complex(v));
	}
	return PoissonTensor(std::move(p));
}

bool PoissonTensor::is_constant() const
{
	for (const auto &row : theta_)
		for (const auto &p : row)
			if (!p.is_constant())
				return false;
	return true;
}

bool PoissonTensor::is_real() const
{
	for (const auto &row : theta_)
		for (const auto &p : row)
			if (!p.is_real())
				return false;
	return true;
}

Polynomial PoissonTensor::bracket(const Polynomial &f, const Polynomial &g) const
{
	Polynomial out;
	for (int mu = 0; mu < dim(); ++mu) {
		Polynomial df = f.derivative(Monomial::unit(mu));
		if (df.is_zero())
			continue;
		for (int nu = 0; nu < dim(); ++nu)
			if (!(*this)(mu, nu).is_zero())
				out += (*this)(mu, nu) * df * g.derivative(Monomial::unit(nu));
	}
	return out;
}

namespace {

using Symbol = std::map<std::pair<Monomial, Monomial>, Complex>;

// Powers of the constant bivector symbol theta^{mu nu} xi_mu (x) eta_nu.
std::vector<MultiDiffOp> moyal_cochains(const PoissonTensor &theta, int order)
{
	if (!theta.is_constant())
		throw NonConstantTheta("the exponential formula needs a constant theta");
	Symbol p;
	for (int mu = 0; mu < theta.dim(); ++mu)
		for (int nu = 0; nu < theta.dim(); ++nu) {
			Complex c = theta(mu, nu).constant_term();
			if (!c.is_zero())
				p[{Monomial::unit(mu), Monomial::unit(nu)}] += c;
		}

	std::vector<MultiDiffOp> out{MultiDiffOp::pointwise()};
	Symbol power{{{Monomial{}, Monomial{}}, Complex(1)}};
	Complex scale(1);
	for (int r = 1; r <= order; ++r) {
		Symbol next;
		for (const auto &[k1, c1] : power)
			for (const auto &[k2, c2] : p) {
				auto &slot = next[{k1.first + k2.first, k1.second + k2.second}];
				slot += c1 * c2;
			}
		power = std::move(next);
		scale *= Complex(Rational(0), Rational(1, 2)) * Complex(Rational(1, r));
		MultiDiffOp c(2);
		for (const auto &[k, v] : power)
			c.add_term({k.first, k.second}, Polynomial(v * scale));
		out.push_back(std::move(c));
	}
	return out;
}

} // namespace

StarProduct::StarProduct(std::vector<MultiDiffOp> cochains, int order, int base_count)
    : cochains_(std::move(cochains)), order_(order), base_count_(base_count)
{
	if (order < 0)
		throw OrderMismatch("negative truncation order");
	if (cochains_.empty())
		cochains_.push_back(MultiDiffOp::pointwise());
	if (cochains_[0] != MultiDiffOp::pointwise())
		throw DimensionMismatch("C_0 must be the pointwise product");
	cochains_.resize(static_cast<std::size_t>(order) + 1, MultiDiffOp(2));
	for (const auto &c : cochains_) {
		if (c.arity() != 2)
			throw DimensionMismatch("star product cochains must be bidifferential");
		for (const auto &[k, coeff] : c.terms())
			for (const auto &beta : k)
				if (beta.degree(0, base_count) != beta.degree())
					throw DimensionMismatch("star product cochains may only differentiate base variables");
	}
}

StarProduct StarProduct::moyal(const PoissonTensor &theta, int order)
{
	return StarProduct(moyal_cochains(theta, order), order, theta.dim());
}

StarProduct StarProduct::pointwise(int order, int base_count)
{
	return StarProduct({MultiDiffOp::pointwise()}, order, base_count);
}

const MultiDiffOp &StarProduct::cochain(int r) const { return cochains_.at(static_cast<std::size_t>(r)); }

StarProduct StarProduct::truncated(int order) const
{
	std::vector<MultiDiffOp> c(cochains_.begin(),
	                           cochains_.begin() + std::min(order, order_) + 1);
	return StarProduct(std::move(c), order, base_count_);
}

PolySeries StarProduct::multiply(const PolySeries &f, const PolySeries &g) const
{
	f.require_same_order(g);
	if (f.order() != order_)
		throw OrderMismatch("operand truncation differs from the star product's");
	PolySeries out(order_);
	for (int a = 0; a <= order_; ++a) {
		if (f[a].is_zero())
			continue;
		for (int b = 0; a + b <= order_; ++b) {
			if (g[b].is_zero())
				continue;
			for (int r = 0; a + b + r <= order_; ++r)
				out[a + b + r] += cochains_[static_cast<std::size_t>(r)](f[a], g[b]);
		}
	}
	return out;
}

PolySeries StarProduct::multiply(const Polynomial &f, const Polynomial &g) const
{
	return multiply(PolySeries(order_, f), PolySeries(order_, g));
}

PolySeries StarProduct::commutator(const PolySeries &f, const PolySeries &g) const
{
	return multiply(f, g) - multiply(g, f);
}

bool StarProduct::is_unital() const
{
	for (int r = 1; r <= order_; ++r)
		for (const auto &[k, c] : cochains_[static_cast<std::size_t>(r)].terms())
			if (k[0].is_one() || k[1].is_one())
				return false;
	return true;
}

OperatorSeries StarProduct::left_multiplication(const Polynomial &f) const
{
	OperatorSeries out(order_);
	for (int r = 0; r <= order_; ++r)
		out[r] = cochains_[static_cast<std::size_t>(r)].fix_first(f);
	return out;
}

OperatorSeries StarProduct::right_multiplication(const Polynomial &f) const
{
	OperatorSeries out(order_);
	for (int r = 0; r <= order_; ++r)
		out[r] = cochains_[static_cast<std::size_t>(r)].fix_second(f);
	return out;
}

int StarProduct::max_cochain_order() const
{
	int o = 0;
	for (int r = 1; r <= order_; ++r)
		o = std::max(o, cochains_[static_cast<std::size_t>(r)].max_slot_order());
	return o;
}

Polynomial moyal_cochain(const PoissonTensor &theta, int r, const Polynomial &f,
                         const Polynomial &g)
{
	return moyal_cochains(theta, r).back()(f, g);
}

const PolySeries &StarCache::monomials(const Monomial &a, const Monomial &b)
{
	auto key = std::make_pair(a, b);
	auto it = cache_.find(key);
	if (it == cache_.end())
		it = cache_.emplace(key, star_.multiply(Polynomial(a), Polynomial(b))).first;
	return it->second;
}

PolySeries StarCache::multiply(const PolySeries &f, const PolySeries &g)
{
	f.require_same_order(g);
	int n = star_.order();
	if (f.order() != n)
		throw OrderMismatch("operand truncation differs from the star product's");
	PolySeries out(n);
	for (int a = 0; a <= n; ++a)
		for (const auto &[ma, ca] : f[a].terms())
			for (int b = 0; a + b <= n; ++b)
				for (const auto &[mb, cb] : g[b].terms()) {
					const PolySeries &p = monomials(ma, mb);
					Complex w = ca * cb;
					for (int r = 0; a + b + r <= n; ++r)
						if (!p[r].is_zero())
							out[a + b + r] += p[r] * w;
				}
	return out;
}

CheckReport check_associativity(const StarProduct &star, int degree_bound)
{
	CheckReport rep;
	rep.property = "associativity";
	rep.degree_bound = degree_bound;
	int bound = 0;
	for (int a = 0; a <= star.order(); ++a)
		for (int b = 0; a + b <= star.order(); ++b)
			bound = std::max(bound, std::max(star.cochain(a).max_slot_order(), 0) +
			                            std::max(star.cochain(b).max_slot_order(), 0));
	rep.completeness_bound = bound;

	StarCache cache(star);
	auto monos = monomials_up_to(0, star.base_count(), degree_bound);
	int n = star.order();
	for (const auto &f : monos)
		for (const auto &g : monos) {
			PolySeries fg = cache.multiply(Polynomial(f), Polynomial(g));
			for (const auto &h : monos) {
				PolySeries lhs = cache.multiply(fg, PolySeries(n, Polynomial(h)));
				PolySeries rhs = cache.multiply(PolySeries(n, Polynomial(f)),
				                                cache.monomials(g, h));
				rep.compare(lhs - rhs, {Polynomial(f), Polynomial(g), Polynomial(h)});
			}
		}
	return rep;
}

CheckReport check_hermitian(const StarProduct &star, int degree_bound)
{
	CheckReport rep;
	rep.property = "hermitian";
	rep.degree_bound = degree_bound;
	rep.completeness_bound = star.max_cochain_order();
	auto monos = monomials_up_to(0, star.base_count(), degree_bound);
	for (const auto &f : monos) {
		if (f.is_one())
			continue;
		for (const auto &g : monos) {
			if (g.is_one())
				continue;
			// Basis monomials are real, so conj(f) = f.
			PolySeries lhs = conj(star.multiply(Polynomial(f), Polynomial(g)));
			PolySeries rhs = star.multiply(Polynomial(g), Polynomial(f));
			rep.compare(lhs - rhs, {Polynomial(f), Polynomial(g)});
		}
	}
	return rep;
}

MultiDiffOp extract_poisson(const StarProduct &star)
{
	if (star.order() < 1)
		return MultiDiffOp(2);
	const MultiDiffOp &c1 = star.cochain(1);
	return (c1 - c1.swapped()) * Complex(Rational(0), Rational(-1));
}

} // namespace dq

#include "dq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dq {

Monomial::Monomial(std::initializer_list<int> exponents)
{
	if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
		throw DimensionMismatch("too many variables in monomial");
	int i = 0;
	for (int e : exponents)
		set(i++, e);
}

Monomial Monomial::unit(int var, int power)
{
	Monomial m;
	m.set(var, power);
	return m;
}

void Monomial::set(int var, int power)
{
	if (var < 0 || var >= kMaxVariables)
		throw DimensionMismatch("variable index out of range");
	if (power < 0 || power > 255)
		throw DimensionMismatch("exponent out of range");
	e_[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(power);
}

int Monomial::degree() const
{
	int d = 0;
	for (auto x : e_)
		d += x;
	return d;
}

int Monomial::degree(int first, int count) const
{
	int d = 0;
	for (int v = first; v < first + count; ++v)
		d += (*this)[v];
	return d;
}

bool Monomial::divides(const Monomial &o) const
{
	for (int v = 0; v < kMaxVariables; ++v)
		if ((*this)[v] > o[v])
			return false;
	return true;
}

Monomial operator+(const Monomial &a, const Monomial &b)
{
	Monomial m;
	for (int v = 0; v < kMaxVariables; ++v)
		m.set(v, a[v] + b[v]);
	return m;
}

Monomial operator-(const Monomial &a, const Monomial &b)
{
	Monomial m;
	for (int v = 0; v < kMaxVariables; ++v)
		m.set(v, a[v] - b[v]);
	return m;
}

std::vector<Monomial> sub_indices(const Monomial &a)
{
	std::vector<Monomial> out{Monomial{}};
	for (int v = 0; v < kMaxVariables; ++v) {
		int top = a[v];
		if (top == 0)
			continue;
		std::vector<Monomial> next;
		next.reserve(out.size() * static_cast<std::size_t>(top + 1));
		for (const auto &m : out)
			for (int k = 0; k <= top; ++k) {
				Monomial n = m;
				n.set(v, k);
				next.push_back(n);
			}
		out = std::move(next);
	}
	return out;
}

namespace {

long small_binomial(int n, int k)
{
	long r = 1;
	for (int i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

} // namespace

Rational binomial(const Monomial &a, const Monomial &g)
{
	long r = 1;
	for (int v = 0; v < kMaxVariables; ++v)
		if (g[v] != 0)
			r *= small_binomial(a[v], g[v]);
	return Rational(r);
}

Rational falling_factorial(const Monomial &a, const Monomial &g)
{
	mpz_class r = 1;
	for (int v = 0; v < kMaxVariables; ++v)
		for (int i = 0; i < g[v]; ++i)
			r *= a[v] - i;
	return Rational(mpq_class(r));
}

std::vector<Monomial> monomials_up_to(int first, int count, int max_degree)
{
	std::vector<Monomial> out;
	if (max_degree < 0)
		return out;
	// Build by degree so the ordering is graded.
	std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(max_degree) + 1);
	std::vector<Monomial> all{Monomial{}};
	for (int v = first; v < first + count; ++v) {
		std::vector<Monomial> next;
		for (const auto &m : all)
			for (int k = 0; m.degree() + k <= max_degree; ++k) {
				Monomial n = m;
				n.set(v, k);
				next.push_back(n);
			}
		all = std::move(next);
	}
	for (const auto &m : all)
		by_degree[static_cast<std::size_t>(m.degree())].push_back(m);
	for (auto &bucket : by_degree) {
		std::sort(bucket.begin(), bucket.end(), std::greater<>());
		out.insert(out.end(), bucket.begin(), bucket.end());
	}
	return out;
}

const std::string &Space::name(int var) const
{
	if (var < base_count())
		return base.at(static_cast<std::size_t>(var));
	return fiber.at(static_cast<std::size_t>(var - base_count()));
}

int Space::index(const std::string &n) const
{
	for (int v = 0; v < size(); ++v)
		if (name(v) == n)
			return v;
	return -1;
}

Polynomial::Polynomial(Complex c)
{
	if (!c.is_zero())
		terms_.emplace(Monomial{}, std::move(c));
}

Polynomial::Polynomial(const Monomial &m, Complex c)
{
	if (!c.is_zero())
		terms_.emplace(m, std::move(c));
}

bool Polynomial::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Complex Polynomial::constant_term() const { return coefficient(Monomial{}); }

Complex Polynomial::coefficient(const Monomial &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Complex() : it->second;
}

int Polynomial::degree() const
{
	int d = -1;
	for (const auto &[m, c] : terms_)
		d = std::max(d, m.degree());
	return d;
}

int Polynomial::degree_in(int first, int count) const
{
	int d = -1;
	for (const auto &[m, c] : terms_)
		d = std::max(d, m.degree(first, count));
	return d;
}

bool Polynomial::only_uses(int first, int count) const
{
	for (const auto &[m, c] : terms_)
		if (m.degree() != m.degree(first, count))
			return false;
	return true;
}

bool Polynomial::is_real() const
{
	for (const auto &[m, c] : terms_)
		if (!c.is_real())
			return false;
	return true;
}

void Polynomial::add_term(const Monomial &m, const Complex &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
	for (const auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
	for (const auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Polynomial &Polynomial::operator*=(const Complex &z)
{
	if (z.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[m, c] : terms_)
		c *= z;
	return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
	Polynomial out;
	for (const auto &[ma, ca] : a.terms_)
		for (const auto &[mb, cb] : b.terms_)
			out.add_term(ma + mb, ca * cb);
	return out;
}

Polynomial Polynomial::derivative(const Monomial &alpha) const
{
	if (alpha.is_one())
		return *this;
	Polynomial out;
	for (const auto &[m, c] : terms_)
		if (alpha.divides(m))
			out.add_term(m - alpha, c * Complex(falling_factorial(m, alpha)));
	return out;
}

Polynomial Polynomial::conj() const
{
	Polynomial out = *this;
	for (auto &[m, c] : out.terms_)
		c = c.conj();
	return out;
}

Complex Polynomial::evaluate(std::span<const Rational> point) const
{
	Complex sum;
	for (const auto &[m, c] : terms_) {
		Rational v(1);
		for (int var = 0; var < kMaxVariables; ++var) {
			if (m[var] == 0)
				continue;
			if (static_cast<std::size_t>(var) >= point.size())
				throw DimensionMismatch("evaluation point has too few coordinates");
			for (int k = 0; k < m[var]; ++k)
				v *= point[static_cast<std::size_t>(var)];
		}
		sum += c * Complex(v);
	}
	return sum;
}

Polynomial Polynomial::translated(int var, const Rational &shift) const
{
	Polynomial out;
	for (const auto &[m, c] : terms_) {
		int e = m[var];
		// (x + s)^e = sum_k binom(e,k) x^k s^(e-k)
		Rational s_pow(1);
		std::vector<Rational> powers{s_pow};
		for (int k = 1; k <= e; ++k)
			powers.push_back(powers.back() * shift);
		for (int k = 0; k <= e; ++k) {
			Monomial n = m;
			n.set(var, k);
			Rational coeff = binomial(Monomial::unit(var, e), Monomial::unit(var, k)) *
			                 powers[static_cast<std::size_t>(e - k)];
			out.add_term(n, c * Complex(coeff));
		}
	}
	return out;
}

Polynomial unit_inverse(const Polynomial &p)
{
	if (!p.is_constant() || p.is_zero())
		throw InvertError("order-0 coefficient is not invertible");
	return Polynomial(p.constant_term().inverse());
}

Polynomial pow(const Polynomial &p, int n)
{
	Polynomial r(1);
	for (int i = 0; i < n; ++i)
		r = r * p;
	return r;
}

std::string format(const Monomial &m, const Space &space)
{
	std::string out;
	for (int v = 0; v < kMaxVariables; ++v) {
		if (m[v] == 0)
			continue;
		if (!out.empty())
			out += "*";
		out += v < space.size() ? space.name(v) : "v" + std::to_string(v);
		if (m[v] > 1)
			out += "^" + std::to_string(m[v]);
	}
	return out;
}

namespace {

struct Rendered
{
	bool negative;
	std::string body;
};

Rendered render_term(const Complex &c, const std::string &factors)
{
	auto with = [&](std::string s) { return factors.empty() ? s : s + "*" + factors; };
	if (c.is_real() || c.re().is_zero()) {
		bool imaginary = !c.is_real();
		Rational v = imaginary ? c.im() : c.re();
		bool negative = v.sign() < 0;
		Rational a = negative ? -v : v;
		std::string scalar;
		if (imaginary)
			scalar = a.is_one() ? "i" : a.str() + "*i";
		else if (!a.is_one() || factors.empty())
			scalar = a.str();
		if (scalar.empty())
			return {negative, factors};
		return {negative, with(scalar)};
	}
	return {false, with(c.str())};
}

std::string join_terms(const std::vector<Rendered> &terms)
{
	if (terms.empty())
		return "0";
	std::string out;
	for (std::size_t i = 0; i < terms.size(); ++i) {
		if (i == 0)
			out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
		else
			out += (terms[i].negative ? " - " : " + ") + terms[i].body;
	}
	return out;
}

std::vector<std::pair<Monomial, Complex>> graded(const Polynomial &p)
{
	std::vector<std::pair<Monomial, Complex>> t(p.terms().begin(), p.terms().end());
	std::stable_sort(t.begin(), t.end(), [](const auto &a, const auto &b) {
		if (a.first.degree() != b.first.degree())
			return a.first.degree() > b.first.degree();
		return a.first > b.first;
	});
	return t;
}

} // namespace

std::string format(const Polynomial &p, const Space &space)
{
	std::vector<Rendered> terms;
	for (const auto &[m, c] : graded(p))
		terms.push_back(render_term(c, format(m, space)));
	return join_terms(terms);
}

std::string format(const PolySeries &s, const Space &space)
{
	std::vector<Rendered> terms;
	for (int r = 0; r <= s.order(); ++r) {
		std::string lam = r == 0 ? "" : (r == 1 ? "lam" : "lam^" + std::to_string(r));
		for (const auto &[m, c] : graded(s[r])) {
			std::string f = format(m, space);
			if (!lam.empty())
				f = f.empty() ? lam : lam + "*" + f;
			terms.push_back(render_term(c, f));
		}
	}
	return join_terms(terms);
}

} // namespace dq

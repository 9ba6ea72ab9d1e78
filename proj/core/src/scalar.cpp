#include "dq/scalar.hpp"

#include "dq/errors.hpp"

#include <ostream>

namespace dq {

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw InvertError("rational with zero denominator");
	v_ = mpq_class(num, den);
	v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	std::string s(text);
	mpq_class q;
	if (s.empty() || q.set_str(s, 10) != 0)
		throw Error("malformed rational literal '" + s + "'");
	if (q.get_den() == 0)
		throw InvertError("rational with zero denominator");
	q.canonicalize();
	return Rational(q);
}

std::string Rational::str() const { return v_.get_str(10); }

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw InvertError("division by zero");
	v_ /= o.v_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Complex Complex::inverse() const
{
	Rational n = norm();
	if (n.is_zero())
		throw InvertError("division by zero");
	return Complex(re_ / n, -im_ / n);
}

Complex &Complex::operator+=(const Complex &o)
{
	re_ += o.re_;
	im_ += o.im_;
	return *this;
}

Complex &Complex::operator-=(const Complex &o)
{
	re_ -= o.re_;
	im_ -= o.im_;
	return *this;
}

Complex &Complex::operator*=(const Complex &o)
{
	if (im_.is_zero() && o.im_.is_zero()) {
		re_ *= o.re_;
		return *this;
	}
	Rational re = re_ * o.re_ - im_ * o.im_;
	Rational im = re_ * o.im_ + im_ * o.re_;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

std::string Complex::str() const
{
	if (im_.is_zero())
		return re_.str();
	std::string imag;
	if (im_.is_one())
		imag = "i";
	else if (im_ == Rational(-1))
		imag = "-i";
	else
		imag = im_.str() + "*i";
	if (re_.is_zero())
		return imag;
	std::string out = "(" + re_.str();
	if (im_.sign() > 0)
		out += "+";
	return out + imag + ")";
}

std::ostream &operator<<(std::ostream &os, const Complex &z) { return os << z.str(); }

} // namespace dq

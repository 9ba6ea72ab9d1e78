#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dq {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational
{
public:
	Rational() = default;
	Rational(long value) : v_(value) {}
	Rational(long num, long den);
	explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

	/// Accepts "p", "-p" and "p/q".
	static Rational parse(std::string_view text);

	const mpq_class &value() const { return v_; }
	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	int sign() const { return sgn(v_); }
	bool is_integer() const { return v_.get_den() == 1; }
	double to_double() const { return v_.get_d(); }

	/// "p" when integral, "p/q" otherwise.
	std::string str() const;

	Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
	Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
	Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

	friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

private:
	mpq_class v_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Gaussian rational re + i*im.
class Complex
{
public:
	Complex() = default;
	Complex(long re) : re_(re) {}
	Complex(Rational re) : re_(std::move(re)) {}
	Complex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

	static Complex i() { return Complex(Rational(0), Rational(1)); }

	const Rational &re() const { return re_; }
	const Rational &im() const { return im_; }

	bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
	bool is_one() const { return re_.is_one() && im_.is_zero(); }
	bool is_real() const { return im_.is_zero(); }

	Complex conj() const { return Complex(re_, -im_); }
	Rational norm() const { return re_ * re_ + im_ * im_; }
	Complex inverse() const;

	Complex &operator+=(const Complex &o);
	Complex &operator-=(const Complex &o);
	Complex &operator*=(const Complex &o);
	Complex &operator/=(const Complex &o) { return *this *= o.inverse(); }

	friend Complex operator+(Complex a, const Complex &b) { return a += b; }
	friend Complex operator-(Complex a, const Complex &b) { return a -= b; }
	friend Complex operator*(Complex a, const Complex &b) { return a *= b; }
	friend Complex operator/(Complex a, const Complex &b) { return a /= b; }
	friend Complex operator-(const Complex &a) { return Complex(-a.re_, -a.im_); }

	friend bool operator==(const Complex &a, const Complex &b) = default;

	/// Text form that the expression parser reads back: "3", "-1/2*i",
	/// "(1/2+3*i)".
	std::string str() const;

private:
	Rational re_;
	Rational im_;
};

std::ostream &operator<<(std::ostream &os, const Complex &z);

inline Complex conj(const Complex &z) { return z.conj(); }
inline bool is_zero(const Complex &z) { return z.is_zero(); }
inline bool is_zero(const Rational &r) { return r.is_zero(); }

} // namespace dq

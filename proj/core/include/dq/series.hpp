#pragma once

#include "dq/errors.hpp"
#include "dq/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dq {

namespace detail {
// Unqualified so that ADL finds is_zero for coefficient types declared later.
template <class T> bool coefficient_is_zero(const T &x) { return is_zero(x); }
} // namespace detail

/// Truncated formal power series sum_{r=0}^{N} lambda^r a_r. All arithmetic
/// is performed modulo lambda^{N+1}; operands with different N are rejected
/// rather than silently re-truncated.
///
/// T is any coefficient module over Complex: Complex itself, Polynomial,
/// DiffOp, ... It needs a default constructor producing zero, +=, -=,
/// multiplication by Complex and a free is_zero(const T&).
template <class T> class FormalSeries
{
public:
	FormalSeries() : c_(1) {}
	explicit FormalSeries(int order) : c_(checked_size(order)) {}
	FormalSeries(int order, T constant) : c_(checked_size(order))
	{
		c_[0] = std::move(constant);
	}

	/// coeff * lambda^power, truncated at order.
	static FormalSeries monomial(int order, int power, T coeff)
	{
		FormalSeries s(order);
		if (power <= order)
			s.c_[power] = std::move(coeff);
		return s;
	}

	int order() const { return static_cast<int>(c_.size()) - 1; }
	const T &operator[](int r) const { return c_.at(r); }
	T &operator[](int r) { return c_.at(r); }
	const std::vector<T> &coefficients() const { return c_; }

	bool is_zero() const
	{
		for (const auto &x : c_)
			if (!detail::coefficient_is_zero(x))
				return false;
		return true;
	}

	/// Lowest r with a_r != 0, or -1 for the zero series.
	int lowest_order() const
	{
		for (int r = 0; r <= order(); ++r)
			if (!detail::coefficient_is_zero(c_[r]))
				return r;
		return -1;
	}

	/// Re-truncate explicitly (drop or zero-pad).
	FormalSeries truncated(int order) const
	{
		FormalSeries s(order);
		for (int r = 0; r <= std::min(order, this->order()); ++r)
			s.c_[r] = c_[r];
		return s;
	}

	/// Multiplies by lambda^k (coefficients shifted up, overflow dropped).
	FormalSeries shifted(int k) const
	{
		FormalSeries s(order());
		for (int r = 0; r + k <= order(); ++r)
			s.c_[r + k] = c_[r];
		return s;
	}

	FormalSeries &operator+=(const FormalSeries &o)
	{
		require_same_order(o);
		for (std::size_t r = 0; r < c_.size(); ++r)
			c_[r] += o.c_[r];
		return *this;
	}
	FormalSeries &operator-=(const FormalSeries &o)
	{
		require_same_order(o);
		for (std::size_t r = 0; r < c_.size(); ++r)
			c_[r] -= o.c_[r];
		return *this;
	}
	FormalSeries &operator*=(const Complex &z)
	{
		for (auto &x : c_)
			x *= z;
		return *this;
	}

	friend FormalSeries operator+(FormalSeries a, const FormalSeries &b) { return a += b; }
	friend FormalSeries operator-(FormalSeries a, const FormalSeries &b) { return a -= b; }
	friend FormalSeries operator-(FormalSeries a)
	{
		a *= Complex(-1);
		return a;
	}
	friend FormalSeries operator*(FormalSeries a, const Complex &z) { return a *= z; }
	friend FormalSeries operator*(const Complex &z, FormalSeries a) { return a *= z; }

	/// Cauchy product with an arbitrary bilinear coefficient product.
	template <class Product>
	static FormalSeries convolve(const FormalSeries &a, const FormalSeries &b, Product &&product)
	{
		a.require_same_order(b);
		FormalSeries s(a.order());
		for (int i = 0; i <= a.order(); ++i) {
			if (detail::coefficient_is_zero(a.c_[i]))
				continue;
			for (int j = 0; i + j <= a.order(); ++j) {
				if (detail::coefficient_is_zero(b.c_[j]))
					continue;
				s.c_[i + j] += product(a.c_[i], b.c_[j]);
			}
		}
		return s;
	}

	friend FormalSeries operator*(const FormalSeries &a, const FormalSeries &b)
	{
		return convolve(a, b, [](const T &x, const T &y) { return x * y; });
	}

	friend bool operator==(const FormalSeries &a, const FormalSeries &b) = default;

	void require_same_order(const FormalSeries &o) const
	{
		if (o.order() != order())
			throw OrderMismatch("truncation orders differ: " + std::to_string(order()) + " vs " +
			                    std::to_string(o.order()));
	}

private:
	static std::size_t checked_size(int order)
	{
		if (order < 0)
			throw OrderMismatch("negative truncation order");
		return static_cast<std::size_t>(order) + 1;
	}

	std::vector<T> c_;
};

template <class T> bool is_zero(const FormalSeries<T> &s) { return s.is_zero(); }

/// Coefficient-wise conjugation (lambda is real).
template <class T> FormalSeries<T> conj(const FormalSeries<T> &s)
{
	FormalSeries<T> out(s.order());
	for (int r = 0; r <= s.order(); ++r)
		out[r] = conj(s[r]);
	return out;
}

/// Inverse in the truncated ring; the order-0 coefficient must be a unit.
/// Needs unit_inverse(const T&) (throwing InvertError) and a commutative *.
template <class T> FormalSeries<T> invert(const FormalSeries<T> &a)
{
	FormalSeries<T> b(a.order());
	T inv0 = unit_inverse(a[0]);
	b[0] = inv0;
	for (int n = 1; n <= a.order(); ++n) {
		T acc{};
		for (int k = 1; k <= n; ++k)
			acc += a[k] * b[n - k];
		b[n] = -(inv0 * acc);
	}
	return b;
}

inline Complex unit_inverse(const Complex &z)
{
	if (z.is_zero())
		throw InvertError("order-0 coefficient is not invertible");
	return z.inverse();
}

using ScalarSeries = FormalSeries<Complex>;
using RealSeries = FormalSeries<Rational>;

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Sign in the ordered ring of formal series: decided by the lowest
/// nonvanishing coefficient. A zero verdict only means zero modulo
/// lambda^{truncation+1}.
struct SignVerdict
{
	Sign sign = Sign::zero;
	int lowest_order = -1;
	int truncation = 0;
};

inline SignVerdict series_sign(const RealSeries &a)
{
	SignVerdict v;
	v.truncation = a.order();
	v.lowest_order = a.lowest_order();
	if (v.lowest_order >= 0)
		v.sign = a[v.lowest_order].sign() > 0 ? Sign::positive : Sign::negative;
	return v;
}

inline std::string to_string(Sign s)
{
	switch (s) {
	case Sign::positive: return "positive";
	case Sign::negative: return "negative";
	default: return "zero";
	}
}

} // namespace dq

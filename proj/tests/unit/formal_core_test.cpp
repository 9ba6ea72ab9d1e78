#include "dq/diffop.hpp"
#include "dq/linear_system.hpp"
#include "dq/polynomial.hpp"
#include "dq/series.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace dq;
using dq::testing::Generator;
using dq::testing::var;

namespace {

ScalarSeries scalar_series(std::initializer_list<Complex> c)
{
	ScalarSeries s(static_cast<int>(c.size()) - 1);
	int r = 0;
	for (const auto &z : c)
		s[r++] = z;
	return s;
}

Polynomial x() { return var(0); }
Polynomial y() { return var(1); }

} // namespace

TEST(Series, ProductOfConjugateBinomials)
{
	auto a = scalar_series({1, 1, 0});
	auto b = scalar_series({1, -1, 0});
	EXPECT_EQ(a * b, scalar_series({1, 0, -1}));
}

TEST(Series, GeometricInverse)
{
	auto a = scalar_series({1, -1, 0, 0});
	EXPECT_EQ(invert(a), scalar_series({1, 1, 1, 1}));
	EXPECT_EQ(a * invert(a), scalar_series({1, 0, 0, 0}));
}

TEST(Series, ConjugateOfImaginaryLambda)
{
	auto a = scalar_series({0, Complex::i()});
	EXPECT_EQ(conj(a), scalar_series({0, -Complex::i()}));
}

TEST(Series, NonUnitCannotBeInverted)
{
	EXPECT_THROW(invert(scalar_series({0, 1})), InvertError);
}

TEST(Series, MixedOrdersAreRejected)
{
	EXPECT_THROW(scalar_series({1, 1}) + scalar_series({1, 1, 1}), OrderMismatch);
	EXPECT_THROW(scalar_series({1, 1}) * scalar_series({1, 1, 1}), OrderMismatch);
}

TEST(Series, RandomInverses)
{
	Generator gen(11);
	for (int k = 0; k < 30; ++k) {
		int n = gen.integer(0, 6);
		ScalarSeries a(n);
		a[0] = Complex(gen.integer(1, 5), gen.integer(-3, 3));
		for (int r = 1; r <= n; ++r)
			a[r] = gen.complex();
		ScalarSeries one(n, Complex(1));
		EXPECT_EQ(a * invert(a), one);
		EXPECT_EQ(invert(invert(a)), a);
	}
}

TEST(Series, RingAxiomsOnRandomSeries)
{
	Generator gen(12);
	for (int k = 0; k < 40; ++k) {
		int n = gen.integer(0, 6);
		ScalarSeries a(n), b(n), c(n);
		for (int r = 0; r <= n; ++r) {
			a[r] = gen.complex();
			b[r] = gen.complex();
			c[r] = gen.complex();
		}
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_EQ(a * b, b * a);
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_EQ(conj(a * b), conj(a) * conj(b));
		EXPECT_EQ(conj(conj(a)), a);
	}
}

TEST(SeriesSign, LowestCoefficientDecides)
{
	RealSeries a(3);
	a[2] = 3;
	a[3] = 5;
	EXPECT_EQ(series_sign(a).sign, Sign::positive);
	EXPECT_EQ(series_sign(a).lowest_order, 2);

	RealSeries zero(4);
	auto v = series_sign(zero);
	EXPECT_EQ(v.sign, Sign::zero);
	EXPECT_EQ(v.truncation, 4);

	RealSeries b(2);
	b[1] = -1;
	b[2] = 2;
	EXPECT_EQ(series_sign(b).sign, Sign::negative);
}

TEST(SeriesSign, OrderedRingAxioms)
{
	Generator gen(13);
	auto value = [](Sign s) { return static_cast<int>(s); };
	for (int k = 0; k < 200; ++k) {
		int n = gen.integer(0, 6);
		RealSeries a = gen.real_series(n), b = gen.real_series(n);
		Sign sa = series_sign(a).sign, sb = series_sign(b).sign;
		if (sa != Sign::zero && sb != Sign::zero) {
			Sign sab = series_sign(a * b).sign;
			// a*b may vanish modulo lambda^{N+1} when the lowest orders add up past N.
			if (series_sign(a).lowest_order + series_sign(b).lowest_order <= n)
				EXPECT_EQ(value(sab), value(sa) * value(sb));
		}
		if (sa == sb && sa != Sign::zero)
			EXPECT_EQ(series_sign(a + b).sign, sa);
	}
}

TEST(Polynomial, ProductAndDerivative)
{
	Polynomial p = x() * x() * y() - Polynomial(Complex::i());
	EXPECT_EQ(p.degree(), 3);
	EXPECT_EQ(p.derivative(Monomial{1}), Polynomial(2) * x() * y());
	EXPECT_EQ(p.derivative(Monomial{2, 1}), Polynomial(2));
	EXPECT_EQ(p.conj(), x() * x() * y() + Polynomial(Complex::i()));
}

TEST(Polynomial, TranslationIsExactSubstitution)
{
	Polynomial p = x() * x();
	EXPECT_EQ(p.translated(0, Rational(1)), x() * x() + Polynomial(2) * x() + Polynomial(1));
}

TEST(DiffOp, ApplyExamples)
{
	EXPECT_EQ(DiffOp::partial(0)(x() * x()), Polynomial(2) * x());
	EXPECT_EQ(DiffOp::derivative(Monomial{1}, y())(x() * y()), y() * y());
	EXPECT_EQ(DiffOp::derivative(Monomial{1, 1})(x()), Polynomial());
}

TEST(DiffOp, LeibnizNormalOrdering)
{
	DiffOp d = DiffOp::partial(0) * DiffOp::multiplication(x());
	DiffOp expected = DiffOp::derivative(Monomial{1}, x()) + DiffOp::identity();
	EXPECT_EQ(d, expected);
	for (const auto &m : monomials_up_to(0, 2, 4))
		EXPECT_EQ(d(Polynomial(m)), DiffOp::partial(0)(x() * Polynomial(m)));
}

TEST(DiffOp, IdentityAndCommutingPartials)
{
	Generator gen(3);
	DiffOp d = gen.diffop(2, 2, 2);
	EXPECT_EQ(d * DiffOp::identity(), d);
	EXPECT_EQ(DiffOp::identity() * d, d);
	EXPECT_TRUE(commutator(DiffOp::partial(0), DiffOp::partial(1)).is_zero());
}

TEST(DiffOp, CompositionMatchesApplication)
{
	Generator gen(21);
	auto tests = monomials_up_to(0, 3, 6);
	for (int k = 0; k < 15; ++k) {
		DiffOp a = gen.diffop(3, 2, 2), b = gen.diffop(3, 2, 2), c = gen.diffop(3, 2, 2);
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_LE((a * b).order(), a.order() + b.order());
		for (const auto &m : tests) {
			Polynomial f(m);
			ASSERT_EQ((a * b)(f), a(b(f)));
			ASSERT_EQ(((a * b) * c)(f), (a * (b * c))(f));
		}
	}
}

TEST(DiffOp, CommutatorOrderDrops)
{
	Generator gen(22);
	for (int k = 0; k < 20; ++k) {
		DiffOp a = gen.diffop(2, 2, 2), b = gen.diffop(2, 2, 2);
		DiffOp c = commutator(a, b);
		if (!c.is_zero())
			EXPECT_LE(c.order(), a.order() + b.order() - 1);
	}
}

TEST(DiffOp, ConjugationIsAnAutomorphism)
{
	Generator gen(23);
	for (int k = 0; k < 20; ++k) {
		DiffOp a = gen.diffop(2, 2, 2), b = gen.diffop(2, 2, 2);
		EXPECT_EQ(conj(a * b), conj(a) * conj(b));
		EXPECT_EQ(conj(conj(a)), a);
	}
	Polynomial real = x() * y() + Polynomial(3);
	EXPECT_EQ(conj(real), real);
}

TEST(DiffOp, TranslationConjugates)
{
	Generator gen(24);
	DiffOp d = gen.diffop(2, 2, 2);
	Rational c(3, 2);
	for (const auto &m : monomials_up_to(0, 2, 3)) {
		Polynomial f(m);
		EXPECT_EQ(d.translated(0, c)(f.translated(0, c)), d(f).translated(0, c));
	}
}

TEST(MultiDiffOp, SwapPrecomposePostcompose)
{
	MultiDiffOp b(2);
	b.add_term({Monomial{1}, Monomial{0, 1}}, Polynomial(1));
	EXPECT_EQ(b(x(), y()), Polynomial(1));
	EXPECT_EQ(b.swapped()(y(), x()), Polynomial(1));
	MultiDiffOp pre = b.precompose(0, DiffOp::multiplication(x()));
	EXPECT_EQ(pre(x(), y()), Polynomial(2) * x());
	MultiDiffOp post = b.postcompose(DiffOp::multiplication(y()));
	EXPECT_EQ(post(x(), y()), y());
	EXPECT_EQ(b.fix_first(x())(y()), Polynomial(1));
	EXPECT_EQ(b.fix_second(y())(x()), Polynomial(1));
}

TEST(LinearSystem, SolveAndNullspace)
{
	LinearSystem sys(3);
	sys.add_equation({{0, 1}, {1, 1}}, 2);
	sys.add_equation({{1, 1}, {2, -1}}, 0);
	ASSERT_TRUE(sys.consistent());
	EXPECT_EQ(sys.rank(), 2);
	auto sol = sys.solve();
	ASSERT_TRUE(sol);
	EXPECT_EQ((*sol)[0] + (*sol)[1], Complex(2));
	EXPECT_EQ((*sol)[1] - (*sol)[2], Complex(0));
	auto ns = sys.nullspace();
	ASSERT_EQ(ns.size(), 1u);
	EXPECT_EQ(ns[0][0] + ns[0][1], Complex(0));

	sys.add_equation({{0, 1}, {1, 1}}, 3);
	EXPECT_FALSE(sys.consistent());
	EXPECT_FALSE(sys.solve());
}

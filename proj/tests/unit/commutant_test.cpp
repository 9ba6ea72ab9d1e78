#include "dq/commutant.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace dq;
using dq::testing::Generator;
using dq::testing::unit_theta;
using dq::testing::var;

namespace {

const SubmersionModel model{2, 1};

Polynomial x() { return var(0); }
Polynomial y() { return var(1); }
Polynomial t() { return var(2); }

const Complex half_i(Rational(0), Rational(1, 2));

ModuleDeformation moyal_module(int order)
{
	return product_bundle_module(StarProduct::moyal(unit_theta(), order), model);
}

CoboundaryOptions lift_options()
{
	CoboundaryOptions o;
	o.bounds = {4, 2, 2};
	o.verify_degree = 2;
	return o;
}

DiffOp mult(const Polynomial &p) { return DiffOp::multiplication(p); }
DiffOp dt() { return DiffOp::partial(2); }

} // namespace

TEST(Lift, FiberDerivativeIsUnchanged)
{
	ModuleDeformation rho = moyal_module(3);
	OperatorSeries d = lift_vertical(dt(), rho, lift_options());
	EXPECT_EQ(d, OperatorSeries(3, dt()));
	EXPECT_TRUE(check_commutant(d, rho, 3).pass);
}

TEST(Lift, BaseCoordinateBecomesLeftStarMultiplication)
{
	ModuleDeformation rho = moyal_module(3);
	OperatorSeries d = lift_vertical(mult(x()), rho, lift_options());
	OperatorSeries expected(3, mult(x()));
	expected[1] = DiffOp::partial(1) * half_i;
	EXPECT_EQ(d, expected);
	EXPECT_EQ(d, rho.star().left_multiplication(x()));
	EXPECT_TRUE(check_commutant(d, rho, 3).pass);
}

TEST(Lift, IdentityAndClassicalLimit)
{
	ModuleDeformation rho = moyal_module(3);
	EXPECT_EQ(lift_vertical(DiffOp::identity(), rho, lift_options()),
	          OperatorSeries(3, DiffOp::identity()));
	Generator gen(61);
	for (int k = 0; k < 4; ++k) {
		DiffOp d0 = DiffOp::derivative(Monomial{0, 0, static_cast<std::uint8_t>(gen.integer(0, 2))},
		                               gen.polynomial(0, 3, 1, 2));
		OperatorSeries d = lift_vertical(d0, rho, lift_options());
		EXPECT_EQ(d[0], d0);
		EXPECT_TRUE(check_commutant(d, rho, 2).pass);
	}
}

TEST(Lift, RejectsHorizontalOperators)
{
	ModuleDeformation rho = moyal_module(2);
	EXPECT_THROW(lift_vertical(DiffOp::partial(0), rho, lift_options()), NotVertical);
}

TEST(CheckCommutant, HorizontalDerivativeFails)
{
	ModuleDeformation rho = moyal_module(2);
	CheckReport rep = check_commutant(OperatorSeries(2, DiffOp::partial(0)), rho, 2);
	ASSERT_FALSE(rep.pass);
	EXPECT_EQ(rep.failing_order, 0);
	EXPECT_TRUE(rep.witness);
}

TEST(CheckCommutant, RightActionByNoncentralFunctionFails)
{
	ModuleDeformation rho = moyal_module(2);
	CheckReport rep = check_commutant(rho.right_operator(x()), rho, 2);
	ASSERT_FALSE(rep.pass);
	EXPECT_EQ(rep.failing_order, 1);
	EXPECT_TRUE(check_commutant(rho.right_operator(Polynomial(3)), rho, 2).pass);
}

TEST(StarPrime, CoordinateCommutator)
{
	ModuleDeformation rho = moyal_module(4);
	OperatorSeries xy = induced_star_prime(mult(x()), mult(y()), rho, lift_options());
	OperatorSeries yx = induced_star_prime(mult(y()), mult(x()), rho, lift_options());
	OperatorSeries expected(4);
	expected[1] = DiffOp::identity() * Complex(Rational(0), Rational(1));
	EXPECT_EQ(xy - yx, expected);
	EXPECT_EQ(xy[0], mult(x() * y()));
}

TEST(StarPrime, IdentityIsNeutral)
{
	ModuleDeformation rho = moyal_module(3);
	DiffOp d = mult(x()) * dt() + mult(t());
	EXPECT_EQ(induced_star_prime(d, DiffOp::identity(), rho, lift_options()), OperatorSeries(3, d));
}

TEST(StarPrime, LieBracketAtOrderZero)
{
	ModuleDeformation rho = moyal_module(3);
	std::vector<std::pair<DiffOp, DiffOp>> pairs = {
	    {dt(), mult(t()) * dt()},
	    {mult(x()) * dt(), mult(t() * y()) * dt()},
	};
	for (const auto &[xi, eta] : pairs) {
		OperatorSeries bracket = induced_star_prime(xi, eta, rho, lift_options()) -
		                         induced_star_prime(eta, xi, rho, lift_options());
		EXPECT_EQ(bracket[0], commutator(xi, eta));
	}
	OperatorSeries b = induced_star_prime(dt(), mult(t()) * dt(), rho, lift_options()) -
	                   induced_star_prime(mult(t()) * dt(), dt(), rho, lift_options());
	EXPECT_EQ(b[0], dt());
}

TEST(StarPrime, AssociativeOnRandomTriples)
{
	ModuleDeformation rho = moyal_module(2);
	CoboundaryOptions o = lift_options();
	o.bounds = {3, 2, 3};
	Generator gen(62);
	for (int k = 0; k < 2; ++k) {
		std::vector<DiffOp> ops;
		for (int i = 0; i < 3; ++i)
			ops.push_back(DiffOp::derivative(Monomial{0, 0, static_cast<std::uint8_t>(gen.integer(0, 1))},
			                                 gen.polynomial(0, 2, 1, 1, true)));
		OperatorSeries a = lift_vertical(ops[0], rho, o);
		OperatorSeries b = lift_vertical(ops[1], rho, o);
		OperatorSeries c = lift_vertical(ops[2], rho, o);
		// Associativity of composition of lifts transports to *'.
		OperatorSeries lhs = unlift((a * b) * c, rho, o);
		OperatorSeries rhs = unlift(a * (b * c), rho, o);
		EXPECT_EQ(lhs, rhs);
		EXPECT_EQ(lhs[0], ops[0] * ops[1] * ops[2]);
	}
}

TEST(LeftAction, Examples)
{
	ModuleDeformation rho = moyal_module(3);
	PolySeries big(3, t() * y() * y());
	EXPECT_EQ(left_action(DiffOp::identity(), big, rho, lift_options()), big);
	PolySeries expected(3, x() * t() * y() * y());
	expected[1] = t() * y() * Complex(Rational(0), Rational(1));
	EXPECT_EQ(left_action(mult(x()), big, rho, lift_options()), expected);
}

TEST(LeftAction, BimoduleCompatibility)
{
	ModuleDeformation rho = moyal_module(3);
	PolySeries big(3, t() * y());
	PolySeries f(3, y());
	PolySeries lhs = rho.act(left_action(mult(x()), big, rho, lift_options()), f);
	PolySeries rhs = left_action(mult(x()), rho.act(big, f), rho, lift_options());
	EXPECT_EQ(lhs, rhs);
	PolySeries expected(3, x() * t() * y() * y());
	expected[1] = t() * y() * Complex(Rational(0), Rational(1));
	EXPECT_EQ(lhs, expected);
}

TEST(LeftAction, ModuleLaw)
{
	ModuleDeformation rho = moyal_module(3);
	CoboundaryOptions o = lift_options();
	DiffOp d = mult(x()), e = mult(t()) * dt();
	OperatorSeries de = induced_star_prime(d, e, rho, o);
	for (const auto &m : monomials_up_to(0, 3, 2)) {
		PolySeries big(3, Polynomial(m));
		PolySeries lhs = apply(lift_vertical(de[0], rho, o), big);
		for (int r = 1; r <= 3; ++r)
			if (!de[r].is_zero())
				lhs += apply(lift_vertical(de[r], rho, o), big).shifted(r);
		EXPECT_EQ(lhs, left_action(d, left_action(e, big, rho, o), rho, o));
	}
}

TEST(Bicommutant, RightMultiplicationsOnly)
{
	ModuleDeformation rho = moyal_module(2);
	std::vector<DiffOp> generators = {dt(), mult(x()), mult(y()), mult(t())};
	BicommutantReport rep = check_bicommutant(generators, rho, {2, 3, 0}, lift_options(), 2);
	EXPECT_TRUE(rep.pass);
	EXPECT_FALSE(rep.counterexample);
	// Base polynomials of degree <= 3 in two variables.
	EXPECT_EQ(rep.solution_dimension, 10);
	EXPECT_TRUE(rep.commutation.pass);
}

TEST(Invariance, TranslationsCommuteWithStarPrime)
{
	ModuleDeformation rho = moyal_module(2);
	GroupActionModel g = GroupActionModel::standard(model);
	CoboundaryOptions o = lift_options();
	std::vector<DiffOp> ops = {dt(), mult(t()) * dt(), mult(x()) * dt(), mult(y())};
	for (std::size_t k = 0; k < g.translations().size(); ++k)
		for (const auto &d : ops)
			for (const auto &e : ops) {
				OperatorSeries de = induced_star_prime(d, e, rho, o);
				OperatorSeries moved(de.order());
				for (int r = 0; r <= de.order(); ++r)
					moved[r] = g.act(k, de[r]);
				EXPECT_EQ(moved, induced_star_prime(g.act(k, d), g.act(k, e), rho, o));
				PolySeries big(2, t() * t() * x());
				PolySeries lhs = left_action(d, big, rho, o);
				for (int r = 0; r <= 2; ++r)
					lhs[r] = g.act(k, lhs[r]);
				PolySeries moved_big(2, g.act(k, big[0]));
				EXPECT_EQ(lhs, left_action(g.act(k, d), moved_big, rho, o));
			}
}

TEST(StarChange, CommutantAndStarPrimeCoincide)
{
	int n = 3;
	ModuleDeformation rho = moyal_module(n);
	Generator gen(63);
	DiffOp x1 = DiffOp::derivative(Monomial{2}, Polynomial(Complex(gen.rational()))) +
	            DiffOp::derivative(Monomial{1, 1}, Polynomial(Complex(gen.rational()))) +
	            DiffOp::derivative(Monomial{0, 2}, Polynomial(Complex(gen.rational())));
	EquivalenceTransform phi = EquivalenceTransform::exponential(x1, n);
	ModuleDeformation tilde = pull_star(rho, phi);
	std::vector<DiffOp> ops = {dt(), mult(x()), mult(y()), mult(t()), DiffOp::identity()};
	for (const auto &d : ops) {
		OperatorSeries l = lift_vertical(d, rho, lift_options());
		EXPECT_EQ(l, lift_vertical(d, tilde, lift_options()));
		EXPECT_TRUE(check_commutant(l, tilde, 2).pass);
	}
	for (const auto &d : ops)
		for (const auto &e : ops)
			EXPECT_EQ(induced_star_prime(d, e, rho, lift_options()),
			          induced_star_prime(d, e, tilde, lift_options()));
}

#include "dq/hochschild.hpp"
#include "dq/star_product.hpp"

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

Cochain random_cochain(Generator &gen, int arity, int max_order, bool equivariant = false,
                       int terms = 3)
{
	Cochain c(arity, model);
	for (int k = 0; k < terms; ++k) {
		Cochain::Key key;
		for (int i = 0; i < arity; ++i)
			key.betas.push_back(gen.monomial(0, model.base, 1));
		key.alpha = gen.monomial(0, model.total(), max_order);
		int coeff_vars = equivariant ? model.base : model.total();
		c.add_term(key, gen.polynomial(0, coeff_vars, 1, 2));
	}
	return c;
}

MultiDiffOp derivative_x_cochain()
{
	MultiDiffOp c(2);
	c.add_term({Monomial{}, Monomial{1}}, Polynomial(1));
	return c;
}

} // namespace

TEST(Delta, VerticalOperatorIsClosed)
{
	Cochain d = Cochain::from_operator(DiffOp::partial(2), model);
	EXPECT_TRUE(hochschild_delta(d).is_zero());
}

TEST(Delta, HorizontalDerivativeGivesMultiplication)
{
	Cochain d = hochschild_delta(Cochain::from_operator(DiffOp::partial(0), model));
	for (const auto &m : monomials_up_to(0, 2, 3)) {
		Polynomial f(m);
		EXPECT_EQ(d(f), DiffOp::multiplication(f.derivative(Monomial{1})));
	}
}

TEST(Delta, SquaresToZero)
{
	Generator gen(41);
	for (int k = 0; k < 6; ++k) {
		Cochain d = Cochain::from_operator(gen.diffop(3, 2, 2), model);
		EXPECT_TRUE(hochschild_delta(hochschild_delta(d)).is_zero());
		Cochain phi = random_cochain(gen, 1, 2);
		EXPECT_TRUE(hochschild_delta(hochschild_delta(phi)).is_zero());
	}
	EXPECT_THROW(hochschild_delta(hochschild_delta(hochschild_delta(random_cochain(gen, 1, 1)))),
	             ArityUnsupported);
}

TEST(Delta, AgreesWithDirectEvaluation)
{
	Generator gen(42);
	Cochain phi = random_cochain(gen, 1, 2);
	Cochain d = hochschild_delta(phi);
	for (const auto &a : monomials_up_to(0, 2, 2))
		for (const auto &b : monomials_up_to(0, 2, 2)) {
			Polynomial f(a), g(b);
			DiffOp direct = phi(g) * DiffOp::multiplication(f) - phi(f * g) +
			                DiffOp::multiplication(g) * phi(f);
			ASSERT_EQ(d(f, g), direct);
		}
}

TEST(Delta, ZeroCocyclesAreVertical)
{
	Generator gen(43);
	for (int k = 0; k < 20; ++k) {
		DiffOp d = gen.diffop(3, 2, 2);
		bool vertical = d.derivatives_only_use(model.base, model.fiber);
		EXPECT_EQ(hochschild_delta(Cochain::from_operator(d, model)).is_zero(), vertical);
		DiffOp v;
		for (const auto &[alpha, p] : d.terms())
			if (alpha.degree(0, model.base) == 0)
				v.add_term(alpha, p);
		v += DiffOp::derivative(Monomial{0, 0, 2}, x() * t());
		EXPECT_TRUE(hochschild_delta(Cochain::from_operator(v, model)).is_zero());
		for (const auto &m : monomials_up_to(0, 2, 2))
			ASSERT_EQ(commutator(v, DiffOp::multiplication(Polynomial(m))), DiffOp());
	}
}

TEST(Compose, MatchesEvaluation)
{
	Generator gen(44);
	Cochain a = random_cochain(gen, 1, 2), b = random_cochain(gen, 1, 2);
	Cochain ab = compose(a, b, {0}, {1});
	Cochain ba = compose_swapped(a, b);
	for (const auto &m1 : monomials_up_to(0, 2, 2))
		for (const auto &m2 : monomials_up_to(0, 2, 2)) {
			Polynomial f(m1), g(m2);
			ASSERT_EQ(ab(f, g), a(f) * b(g));
			ASSERT_EQ(ba(f, g), a(g) * b(f));
		}
	DiffOp d = gen.diffop(3, 1, 1);
	Polynomial f = x() * y() + Polynomial(2);
	EXPECT_EQ(compose(d, a)(f), d * a(f));
	EXPECT_EQ(compose(a, d)(f), a(f) * d);
	EXPECT_EQ(merge_arguments(a, 0)(f, x()), a(f * x()));
}

TEST(Compose, PrecomposeArgument)
{
	Generator gen(45);
	Cochain a = random_cochain(gen, 1, 1);
	MultiDiffOp c1 = StarProduct::moyal(unit_theta(), 1).cochain(1);
	Cochain p = precompose_argument(a, 0, c1);
	for (const auto &m1 : monomials_up_to(0, 2, 2))
		for (const auto &m2 : monomials_up_to(0, 2, 2)) {
			Polynomial f(m1), g(m2);
			ASSERT_EQ(p(f, g), a(c1(f, g)));
		}
}

TEST(Cocycle, CoboundariesPass)
{
	Generator gen(46);
	Cochain psi = random_cochain(gen, 1, 2);
	EXPECT_TRUE(is_cocycle(hochschild_delta(psi), 2).pass);
}

TEST(Cocycle, MoyalFirstOrderPasses)
{
	MultiDiffOp c1 = StarProduct::moyal(unit_theta(), 1).cochain(1);
	EXPECT_TRUE(is_cocycle(Cochain::multiplication(c1, model), 2).pass);
}

TEST(Cocycle, DerivativeProductFails)
{
	auto rep = is_cocycle(Cochain::multiplication(derivative_x_cochain(), model), 1);
	ASSERT_FALSE(rep.pass);
	ASSERT_TRUE(rep.witness);
	EXPECT_FALSE(rep.witness->operator_defect.is_zero());
	EXPECT_EQ(rep.witness->inputs.size(), 3u);
}

TEST(Solve, ZeroCocycle)
{
	Cochain phi = solve_coboundary(Cochain(2, model), {});
	EXPECT_TRUE(phi.is_zero());
	EXPECT_EQ(phi.arity(), 1);
}

TEST(Solve, ConstructedCoboundaries)
{
	Generator gen(47);
	for (int k = 0; k < 4; ++k) {
		Cochain psi = random_cochain(gen, 1, 1);
		Cochain r = hochschild_delta(psi);
		CoboundaryOptions o;
		o.bounds = {1, 1, 1};
		Cochain phi = solve_coboundary(r, o);
		EXPECT_EQ(hochschild_delta(phi), r);
	}
}

TEST(Solve, ArityOne)
{
	Generator gen(48);
	DiffOp d = gen.diffop(3, 2, 1);
	Cochain r = hochschild_delta(Cochain::from_operator(d, model));
	CoboundaryOptions o;
	o.bounds = {2, 1, 0};
	Cochain phi = solve_coboundary(r, o);
	EXPECT_EQ(hochschild_delta(phi), r);
	// Vertical columns lie in the kernel of delta and stay at zero.
	for (DiffOp op = phi.as_operator(); const auto &[alpha, p] : op.terms())
		EXPECT_GT(alpha.degree(0, model.base), 0);
}

TEST(Solve, MoyalObstruction)
{
	MultiDiffOp c1 = StarProduct::moyal(unit_theta(), 1).cochain(1);
	Cochain r = Cochain::multiplication(c1, model);
	CoboundaryOptions o;
	o.bounds = {1, 0, 1};
	Cochain phi = solve_coboundary(r, o);
	EXPECT_EQ(hochschild_delta(phi), r);
	o.bounds.max_base_derivatives = 0;
	EXPECT_THROW(solve_coboundary(r, o), NoSolutionInTruncation);
}

TEST(Solve, AnsatzTooSmall)
{
	Cochain psi(1, model);
	psi.add_term({{Monomial{}}, Monomial{3}}, Polynomial(1));
	Cochain r = hochschild_delta(psi);
	CoboundaryOptions o;
	o.bounds = {2, 1, 1};
	o.order = 5;
	try {
		solve_coboundary(r, o);
		FAIL() << "expected NoSolutionInTruncation";
	} catch (const NoSolutionInTruncation &e) {
		EXPECT_EQ(e.order(), 5);
		EXPECT_NE(std::string(e.what()).find("max_diffop_order=2"), std::string::npos);
	}
	o.bounds.max_diffop_order = 3;
	EXPECT_EQ(hochschild_delta(solve_coboundary(r, o)), r);
}

TEST(Solve, RejectsNonCocycle)
{
	EXPECT_THROW(solve_coboundary(Cochain::multiplication(derivative_x_cochain(), model), {}),
	             NotACocycle);
}

TEST(Solve, EquivariantClosure)
{
	Generator gen(49);
	for (int k = 0; k < 3; ++k) {
		Cochain psi = random_cochain(gen, 1, 1, true);
		ASSERT_TRUE(psi.is_equivariant());
		Cochain r = hochschild_delta(psi);
		CoboundaryOptions o;
		o.bounds = {1, 1, 1};
		o.equivariant = true;
		Cochain phi = solve_coboundary(r, o);
		EXPECT_TRUE(phi.is_equivariant());
		EXPECT_EQ(hochschild_delta(phi), r);
		EXPECT_LT(ansatz_size(1, model, o), ansatz_size(1, model, {o.bounds, false, 3, -1}));
	}
}

TEST(Cochain, TranslationAndEquivariance)
{
	Cochain c(1, model);
	c.add_term({{Monomial{1}}, Monomial{}}, t());
	EXPECT_FALSE(c.is_equivariant());
	Cochain shifted = c.translated(2, Rational(1));
	EXPECT_EQ(shifted(x()), DiffOp::multiplication(t() + Polynomial(1)));
	EXPECT_THROW(c.add_term({{Monomial{0, 0, 1}}, Monomial{}}, t()), Error);
}

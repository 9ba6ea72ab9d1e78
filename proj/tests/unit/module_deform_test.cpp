#include "dq/projective_module.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace dq;
using dq::testing::Generator;
using dq::testing::unit_theta;
using dq::testing::var;

namespace {

Polynomial x() { return var(0); }
Polynomial y() { return var(1); }

// [[1 - ab, a], [b - ab^2, ab]] is idempotent for any commuting a, b.
PolyMatrix rank_one(const Polynomial &a, const Polynomial &b)
{
	Polynomial one(1);
	return {{one - a * b, a}, {b - a * b * b, a * b}};
}

SeriesVector constant_vector(int order, std::initializer_list<Polynomial> v)
{
	SeriesVector out;
	for (const auto &p : v)
		out.emplace_back(order, p);
	return out;
}

SeriesMatrix half_projector(int order)
{
	Polynomial h(Complex(Rational(1, 2)));
	return SeriesMatrix(PolyMatrix{{h, h}, {h, h}}, order);
}

} // namespace

TEST(DeformIdempotent, ConstantProjectorIsFixed)
{
	StarProduct star = StarProduct::moyal(unit_theta(), 4);
	PolyMatrix d{{Polynomial(1), Polynomial()}, {Polynomial(), Polynomial()}};
	auto out = deform_idempotent(d, star);
	EXPECT_EQ(out.e, SeriesMatrix(d, 4));
	auto id = deform_idempotent(PolyMatrix{{Polynomial(1), Polynomial()}, {Polynomial(), Polynomial(1)}}, star);
	EXPECT_EQ(id.e, SeriesMatrix::identity(2, 4));
	EXPECT_TRUE(id.steps.empty());
}

TEST(DeformIdempotent, RankOneProjectorAcquiresCorrections)
{
	int n = 6;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	PolyMatrix e0 = rank_one(y(), x());
	ASSERT_EQ(matrix_product(e0, e0), e0);
	auto out = deform_idempotent(e0, star);
	StarCache cache(star);
	EXPECT_TRUE(idempotency_defect(cache, out.e).is_zero());
	EXPECT_EQ(out.e.classical(), e0);
	EXPECT_GE(out.e.lowest_order(), 0);
	EXPECT_NE(out.e, SeriesMatrix(e0, n));
}

TEST(DeformIdempotent, PrecisionDoubles)
{
	int n = 6;
	Generator gen(31);
	StarProduct star = StarProduct::moyal(PoissonTensor::constant(gen.theta(2)), n);
	for (int k = 0; k < 3; ++k) {
		auto out = deform_idempotent(rank_one(gen.polynomial(0, 2, 1), gen.polynomial(0, 2, 1)), star);
		int previous = 1;
		for (const auto &s : out.steps) {
			EXPECT_GE(s.residual_order, std::min(2 * previous, n + 1));
			previous = s.residual_order;
		}
		EXPECT_EQ(out.steps.back().residual_order, n + 1);
		EXPECT_LE(static_cast<int>(out.steps.size()), 3);
	}
}

TEST(DeformIdempotent, RejectsNonIdempotent)
{
	StarProduct star = StarProduct::moyal(unit_theta(), 2);
	EXPECT_THROW(deform_idempotent(PolyMatrix{{x()}}, star), NotIdempotent);
}

TEST(DeformIdempotent, HermitianSeedStaysHermitian)
{
	int n = 4;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	SeriesMatrix seed = half_projector(n);
	// A Hermitian perturbation at order one.
	seed(0, 1)[1] = x() * Polynomial(Complex::i());
	seed(1, 0)[1] = -(x() * Polynomial(Complex::i()));
	seed(0, 0)[1] = y() * y();
	auto out = deform_idempotent(seed, star);
	StarCache cache(star);
	EXPECT_TRUE(idempotency_defect(cache, out.e).is_zero());
	EXPECT_EQ(out.e.conj_transpose(), out.e);
}

TEST(ModuleAction, UnitalityAndClassicalLimit)
{
	int n = 4;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	StarCache cache(star);
	auto e = deform_idempotent(rank_one(y(), x()), star).e;
	SeriesVector phi = project(cache, e, constant_vector(n, {x() * x(), y()}));
	EXPECT_EQ(module_action(cache, e, phi, PolySeries(n, Polynomial(1))), phi);
	auto acted = module_action(cache, e, phi, PolySeries(n, x() * y()));
	for (std::size_t i = 0; i < phi.size(); ++i)
		EXPECT_EQ(acted[i][0], phi[i][0] * x() * y());
}

TEST(ModuleAction, RightModuleLawAndClosure)
{
	int n = 4;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	StarCache cache(star);
	auto e = deform_idempotent(rank_one(y(), x()), star).e;
	SeriesVector phi = project(cache, e, constant_vector(n, {Polynomial(1) + x(), x() * y()}));
	PolySeries fx(n, x()), fy(n, y());
	auto lhs = module_action(cache, e, module_action(cache, e, phi, fx), fy);
	auto rhs = module_action(cache, e, phi, star.multiply(fx, fy));
	EXPECT_EQ(lhs, rhs);
	EXPECT_EQ(project(cache, e, lhs), lhs);
}

TEST(ModuleAction, RejectsForeignVector)
{
	int n = 2;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	StarCache cache(star);
	SeriesMatrix e(PolyMatrix{{Polynomial(1), Polynomial()}, {Polynomial(), Polynomial()}}, n);
	EXPECT_THROW(module_action(cache, e, constant_vector(n, {x(), y()}), PolySeries(n, x())),
	             NotInModule);
}

TEST(Metric, FreeRankOne)
{
	int n = 3;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	DeformedMetric h = deform_metric(SeriesMatrix::identity(1, n), star);
	EXPECT_EQ(h(constant_vector(n, {Polynomial(1)}), constant_vector(n, {Polynomial(1)})),
	          PolySeries(n, Polynomial(1)));
	PolySeries hxy = h(constant_vector(n, {x()}), constant_vector(n, {y()}));
	PolySeries expected(n);
	expected[0] = x() * y();
	expected[1] = Polynomial(Complex(Rational(0), Rational(1, 2)));
	EXPECT_EQ(hxy, expected);
	EXPECT_EQ(conj(hxy), h(constant_vector(n, {y()}), constant_vector(n, {x()})));
}

TEST(Metric, AxiomsOnRandomElements)
{
	int n = 4;
	Generator gen(32);
	StarProduct star = StarProduct::moyal(PoissonTensor::constant(gen.theta(2)), n);
	StarCache cache(star);
	DeformedMetric h = deform_metric(half_projector(n), star);
	const SeriesMatrix &e = h.projector();
	for (int k = 0; k < 4; ++k) {
		SeriesVector phi = project(cache, e, constant_vector(n, {gen.polynomial(0, 2, 2), gen.polynomial(0, 2, 2)}));
		SeriesVector psi = project(cache, e, constant_vector(n, {gen.polynomial(0, 2, 2), gen.polynomial(0, 2, 2)}));
		PolySeries f(n, gen.polynomial(0, 2, 2));
		EXPECT_EQ(h(phi, module_action(cache, e, psi, f)), star.multiply(h(phi, psi), f));
		EXPECT_EQ(h(phi, psi), conj(h(psi, phi)));
		Complex z = gen.complex();
		SeriesVector scaled;
		for (std::size_t i = 0; i < psi.size(); ++i)
			scaled.push_back(psi[i] * z + phi[i]);
		EXPECT_EQ(h(phi, scaled), h(phi, psi) * z + h(phi, phi));
	}
}

TEST(Metric, ClassicalDiagonalIsNonnegative)
{
	int n = 3;
	Generator gen(33);
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	DeformedMetric h = deform_metric(SeriesMatrix::identity(2, n), star);
	SeriesVector phi = constant_vector(n, {gen.polynomial(0, 2, 2), gen.polynomial(0, 2, 2)});
	Polynomial h0 = h(phi, phi)[0];
	EXPECT_TRUE(h0.is_real());
	for (int k = 0; k < 25; ++k) {
		std::vector<Rational> pt{gen.rational(), gen.rational()};
		Complex v = h0.evaluate(pt);
		EXPECT_TRUE(v.is_real());
		EXPECT_GE(v.re().sign(), 0);
	}
}

TEST(Metric, RejectsBrokenInputs)
{
	int n = 2;
	MultiDiffOp c1 = MultiDiffOp::pointwise() * Complex::i();
	StarProduct broken({MultiDiffOp::pointwise(), c1}, n, 2);
	EXPECT_THROW(deform_metric(SeriesMatrix::identity(1, n), broken), NonHermitianStar);
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	SeriesMatrix e(rank_one(y(), x()), n);
	EXPECT_THROW(deform_metric(e, star), NonHermitianProjector);
}

TEST(Metric, NonHermitianDeformationIsReplaced)
{
	int n = 3;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	SeriesMatrix seed = half_projector(n);
	seed(0, 1)[1] = x();
	auto skewed = deform_idempotent(seed, star).e;
	ASSERT_NE(skewed.conj_transpose(), skewed);
	DeformedMetric h = deform_metric(skewed, star);
	EXPECT_EQ(h.projector().conj_transpose(), h.projector());
	EXPECT_EQ(h.projector().classical(), skewed.classical());
}

TEST(ModuleEquivalence, IdentityTransform)
{
	int n = 3;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	StarCache cache(star);
	auto e = deform_idempotent(rank_one(y(), x()), star).e;
	std::vector<SeriesVector> elements{project(cache, e, constant_vector(n, {x(), y()}))};
	auto rep = check_module_equivalence(ModuleTransform::identity(2, n), star_action(star),
	                                    star_action(star), elements, 2, 2);
	EXPECT_TRUE(rep.pass);
}

TEST(ModuleEquivalence, ConjugatedActionIsEquivalent)
{
	int n = 3;
	Generator gen(34);
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	// Componentwise T = id + lam D with its series inverse.
	DiffOp d = gen.diffop(2, 2, 1);
	OperatorSeries t(n, DiffOp::identity()), u(n, DiffOp::identity());
	t[1] = d;
	for (int r = 1; r <= n; ++r) {
		DiffOp p = DiffOp::identity();
		for (int k = 0; k < r; ++k)
			p = p * d;
		u[r] = r % 2 ? -p : p;
	}
	ModuleTransform tt({{t, OperatorSeries(n)}, {OperatorSeries(n), t}});
	ModuleTransform uu({{u, OperatorSeries(n)}, {OperatorSeries(n), u}});
	ModuleAction act = star_action(star);
	ModuleAction tilde = [&](const SeriesVector &psi, const PolySeries &f) {
		return tt.apply(act(uu.apply(psi), f));
	};
	std::vector<SeriesVector> elements{constant_vector(n, {x(), y() * y()}),
	                                   constant_vector(n, {Polynomial(1), x() * y()})};
	EXPECT_TRUE(check_module_equivalence(tt, act, tilde, elements, 2, 2).pass);
}

TEST(ModuleEquivalence, PerturbedActionFails)
{
	int n = 3;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	ModuleAction act = star_action(star);
	ModuleAction tilde = [&](const SeriesVector &phi, const PolySeries &f) {
		SeriesVector out = act(phi, f);
		for (std::size_t i = 0; i < out.size(); ++i)
			out[i] += (phi[i] * PolySeries(n, f[0].derivative(Monomial{1}))).shifted(1);
		return out;
	};
	std::vector<SeriesVector> elements{constant_vector(n, {x(), y()})};
	auto rep = check_module_equivalence(ModuleTransform::identity(2, n), act, tilde, elements, 2, 2);
	ASSERT_FALSE(rep.pass);
	EXPECT_EQ(rep.failing_order, 1);
	EXPECT_TRUE(rep.witness);
}

TEST(ModuleEquivalence, DifferentSchedulesAreRelated)
{
	int n = 4;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	StarCache cache(star);
	PolyMatrix e0 = rank_one(y(), x());
	auto e = deform_idempotent(e0, star).e;
	SeriesMatrix seed(e0, n);
	seed(0, 1)[1] = x() * y();
	auto e_prime = deform_idempotent(seed, star).e;
	ASSERT_NE(e, e_prime);
	ModuleTransform t = module_intertwiner(star, e, e_prime);
	EXPECT_TRUE(t.starts_with_identity());
	std::vector<SeriesVector> elements{project(cache, e, constant_vector(n, {x(), y()})),
	                                   project(cache, e, constant_vector(n, {Polynomial(1), x() * x()}))};
	EXPECT_TRUE(check_module_equivalence(t, star_action(star), star_action(star), elements, 2, 2).pass);
	for (const auto &phi : elements) {
		SeriesVector image = t.apply(phi);
		EXPECT_EQ(project(cache, e_prime, image), image);
	}
}

TEST(Isometry, IdentityIsIsometric)
{
	int n = 2;
	StarProduct star = StarProduct::moyal(unit_theta(), n);
	DeformedMetric h = deform_metric(SeriesMatrix::identity(2, n), star);
	std::vector<SeriesVector> elements{constant_vector(n, {x(), y()}), constant_vector(n, {y(), Polynomial(1)})};
	EXPECT_TRUE(check_isometry(ModuleTransform::identity(2, n), h, h, elements).pass);
}

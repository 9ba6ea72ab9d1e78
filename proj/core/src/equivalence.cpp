#include "dq/equivalence.hpp"

namespace dq {

EquivalenceTransform::EquivalenceTransform(int order) : stages_(order, DiffOp::identity()) {}

EquivalenceTransform::EquivalenceTransform(OperatorSeries stages) : stages_(std::move(stages))
{
	if (stages_[0] != DiffOp::identity())
		throw DimensionMismatch("an equivalence transform starts with the identity");
}

EquivalenceTransform EquivalenceTransform::exponential(const DiffOp &x, int order)
{
	OperatorSeries s(order, DiffOp::identity());
	DiffOp power = DiffOp::identity();
	for (int r = 1; r <= order; ++r) {
		power = power * x;
		power *= Complex(Rational(1, r));
		s[r] = power;
	}
	return EquivalenceTransform(std::move(s));
}

EquivalenceTransform EquivalenceTransform::inverse() const
{
	// U_n = -sum_{r=1}^{n} T_r U_{n-r}
	OperatorSeries u(order(), DiffOp::identity());
	for (int n = 1; n <= order(); ++n) {
		DiffOp acc;
		for (int r = 1; r <= n; ++r)
			if (!stages_[r].is_zero())
				acc += stages_[r] * u[n - r];
		u[n] = -acc;
	}
	return EquivalenceTransform(std::move(u));
}

PolySeries EquivalenceTransform::apply(const PolySeries &f) const
{
	if (f.order() != order())
		throw OrderMismatch("operand truncation differs from the transform's");
	PolySeries out(order());
	for (int a = 0; a <= order(); ++a)
		for (int b = 0; a + b <= order(); ++b)
			if (!f[b].is_zero())
				out[a + b] += stages_[a](f[b]);
	return out;
}

void EquivalenceTransform::require_unital() const
{
	for (int r = 1; r <= order(); ++r)
		if (!stages_[r](Polynomial(1)).is_zero())
			throw UnitalityViolation("stage " + std::to_string(r) + " does not annihilate 1");
}

StarProduct apply_equivalence(const EquivalenceTransform &t, const StarProduct &star)
{
	if (t.order() != star.order())
		throw OrderMismatch("transform and star product truncations differ");
	t.require_unital();
	int n = star.order();
	EquivalenceTransform u = t.inverse();
	std::vector<MultiDiffOp> c(static_cast<std::size_t>(n) + 1, MultiDiffOp(2));
	for (int r = 0; r <= n; ++r) {
		const MultiDiffOp &cr = star.cochain(r);
		if (cr.is_zero())
			continue;
		for (int b = 0; r + b <= n; ++b) {
			if (t.stage(b).is_zero())
				continue;
			MultiDiffOp left = cr.precompose(0, t.stage(b));
			for (int d = 0; r + b + d <= n; ++d) {
				if (t.stage(d).is_zero())
					continue;
				MultiDiffOp both = left.precompose(1, t.stage(d));
				for (int a = 0; r + b + d + a <= n; ++a)
					if (!u.stage(a).is_zero())
						c[static_cast<std::size_t>(r + b + d + a)] += both.postcompose(u.stage(a));
			}
		}
	}
	return StarProduct(std::move(c), n, star.base_count());
}

CheckReport check_homomorphism(const EquivalenceTransform &t, const StarProduct &primed,
                               const StarProduct &star, int degree_bound)
{
	CheckReport rep;
	rep.property = "homomorphism";
	rep.degree_bound = degree_bound;
	StarCache cache(star);
	auto monos = monomials_up_to(0, star.base_count(), degree_bound);
	for (const auto &f : monos)
		for (const auto &g : monos) {
			PolySeries lhs = t.apply(primed.multiply(Polynomial(f), Polynomial(g)));
			PolySeries rhs = cache.multiply(t.apply(Polynomial(f)), t.apply(Polynomial(g)));
			rep.compare(lhs - rhs, {Polynomial(f), Polynomial(g)});
		}
	return rep;
}

} // namespace dq

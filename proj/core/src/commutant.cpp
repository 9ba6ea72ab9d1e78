#include "dq/commutant.hpp"

#include "dq/linear_system.hpp"

#include <map>
#include <tuple>

namespace dq {

bool is_vertical(const DiffOp &d, SubmersionModel model)
{
	return d.derivatives_only_use(model.base, model.fiber);
}

OperatorSeries lift_vertical(const DiffOp &d0, const ModuleDeformation &rho,
                             CoboundaryOptions options)
{
	if (!is_vertical(d0, rho.model()))
		throw NotVertical("operator differentiates in base directions");
	return solve_intertwiner(rho, rho, d0, options);
}

CheckReport check_commutant(const OperatorSeries &d, const ModuleDeformation &rho,
                            int degree_bound)
{
	CheckReport rep = check_intertwiner(d, rho, rho, degree_bound);
	rep.property = "commutant";
	return rep;
}

OperatorSeries unlift(const OperatorSeries &x, const ModuleDeformation &rho,
                      const CoboundaryOptions &options)
{
	int n = rho.order();
	if (x.order() != n)
		throw OrderMismatch("operator series truncation differs from the module's");
	OperatorSeries v(n);
	OperatorSeries residual = x;
	for (int r = 0; r <= n; ++r) {
		const DiffOp y = residual[r];
		if (y.is_zero())
			continue;
		if (!is_vertical(y, rho.model()))
			throw NotVertical("order " + std::to_string(r) + " of the series is not vertical");
		v[r] = y;
		OperatorSeries lift = lift_vertical(y, rho, options);
		for (int s = 0; r + s <= n; ++s)
			residual[r + s] -= lift[s];
	}
	return v;
}

OperatorSeries induced_star_prime(const DiffOp &d, const DiffOp &e, const ModuleDeformation &rho,
                                  const CoboundaryOptions &options)
{
	return unlift(lift_vertical(d, rho, options) * lift_vertical(e, rho, options), rho, options);
}

PolySeries left_action(const DiffOp &d, const PolySeries &big_f, const ModuleDeformation &rho,
                       const CoboundaryOptions &options)
{
	return apply(lift_vertical(d, rho, options), big_f);
}

BicommutantReport check_bicommutant(const std::vector<DiffOp> &generators,
                                    const ModuleDeformation &rho, const AnsatzBounds &bounds,
                                    const CoboundaryOptions &lift_options, int degree_bound)
{
	SubmersionModel model = rho.model();
	BicommutantReport out;
	out.commutation.property = "bicommutant";
	out.commutation.degree_bound = degree_bound;

	std::vector<DiffOp> basis;
	for (const auto &alpha : monomials_up_to(0, model.total(), bounds.max_diffop_order))
		for (const auto &c : monomials_up_to(0, model.total(), bounds.max_coeff_degree))
			basis.push_back(DiffOp::derivative(alpha, Polynomial(c)));

	using RowKey = std::tuple<std::size_t, Monomial, Monomial>;
	std::map<RowKey, LinearSystem::Row> rows;
	for (std::size_t j = 0; j < basis.size(); ++j)
		for (std::size_t g = 0; g < generators.size(); ++g)
			for (DiffOp c = commutator(basis[j], generators[g]); const auto &[alpha, p] : c.terms())
				for (const auto &[mono, c] : p.terms())
					rows[{g, alpha, mono}][static_cast<int>(j)] += c;
	LinearSystem sys(static_cast<int>(basis.size()));
	for (auto &[k, row] : rows)
		sys.add_equation(std::move(row), Complex());

	auto kernel = sys.nullspace();
	out.solution_dimension = static_cast<int>(kernel.size());
	for (const auto &v : kernel) {
		DiffOp x;
		for (std::size_t j = 0; j < v.size(); ++j)
			if (!v[j].is_zero())
				x += basis[j] * v[j];
		Polynomial p = x.coefficient(Monomial{});
		if (x != DiffOp::multiplication(p) || !p.only_uses(0, model.base)) {
			out.pass = false;
			if (!out.counterexample)
				out.counterexample = x;
			continue;
		}
		out.multipliers.push_back(p);
	}

	std::vector<OperatorSeries> lifts;
	for (const auto &g : generators)
		lifts.push_back(lift_vertical(g, rho, lift_options));
	for (const auto &p : out.multipliers) {
		OperatorSeries r = rho.right_operator(p);
		for (const auto &l : lifts)
			out.commutation.compare(r * l - l * r, {p});
	}
	if (!out.commutation.pass)
		out.pass = false;
	return out;
}

} // namespace dq

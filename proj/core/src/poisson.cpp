#include "dq/star_product.hpp"

namespace dq {

std::vector<SchoutenComponent> schouten_square(const PoissonTensor &theta)
{
	int m = theta.dim();
	auto term = [&](int a, int b, int c) {
		// sum_l theta^{l a} d_l theta^{b c}
		Polynomial out;
		for (int l = 0; l < m; ++l)
			if (!theta(l, a).is_zero())
				out += theta(l, a) * theta(b, c).derivative(Monomial::unit(l));
		return out;
	};
	std::vector<SchoutenComponent> out;
	for (int mu = 0; mu < m; ++mu)
		for (int nu = mu + 1; nu < m; ++nu)
			for (int ka = nu + 1; ka < m; ++ka)
				out.push_back({mu, nu, ka, term(mu, nu, ka) + term(nu, ka, mu) + term(ka, mu, nu)});
	return out;
}

bool is_poisson(const PoissonTensor &theta)
{
	for (const auto &c : schouten_square(theta))
		if (!c.value.is_zero())
			return false;
	return true;
}

Polynomial jacobi_defect(const PoissonTensor &theta, const Polynomial &f, const Polynomial &g,
                         const Polynomial &h)
{
	return theta.bracket(theta.bracket(f, g), h) + theta.bracket(theta.bracket(g, h), f) +
	       theta.bracket(theta.bracket(h, f), g);
}

} // namespace dq

#include "dq/projective_module.hpp"

#include <algorithm>

namespace dq {

SeriesMatrix::SeriesMatrix(int rows, int cols, int order)
    : rows_(rows), cols_(cols), order_(order),
      e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), PolySeries(order))
{}

SeriesMatrix::SeriesMatrix(const PolyMatrix &m, int order)
    : SeriesMatrix(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()),
                   order)
{
	for (int i = 0; i < rows_; ++i) {
		if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != cols_)
			throw DimensionMismatch("ragged matrix");
		for (int j = 0; j < cols_; ++j)
			(*this)(i, j)[0] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
	}
}

SeriesMatrix SeriesMatrix::identity(int n, int order)
{
	SeriesMatrix m(n, n, order);
	for (int i = 0; i < n; ++i)
		m(i, i)[0] = Polynomial(1);
	return m;
}

PolyMatrix SeriesMatrix::classical() const
{
	PolyMatrix m(static_cast<std::size_t>(rows_), std::vector<Polynomial>(static_cast<std::size_t>(cols_)));
	for (int i = 0; i < rows_; ++i)
		for (int j = 0; j < cols_; ++j)
			m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j)[0];
	return m;
}

SeriesMatrix SeriesMatrix::conj_transpose() const
{
	SeriesMatrix m(cols_, rows_, order_);
	for (int i = 0; i < rows_; ++i)
		for (int j = 0; j < cols_; ++j)
			m(j, i) = conj((*this)(i, j));
	return m;
}

bool SeriesMatrix::is_zero() const { return lowest_order() < 0; }

int SeriesMatrix::lowest_order() const
{
	int lo = -1;
	for (const auto &s : e_) {
		int r = s.lowest_order();
		if (r >= 0 && (lo < 0 || r < lo))
			lo = r;
	}
	return lo;
}

SeriesMatrix &SeriesMatrix::operator+=(const SeriesMatrix &o)
{
	if (o.rows_ != rows_ || o.cols_ != cols_)
		throw DimensionMismatch("matrix shapes differ");
	for (std::size_t k = 0; k < e_.size(); ++k)
		e_[k] += o.e_[k];
	return *this;
}

SeriesMatrix &SeriesMatrix::operator-=(const SeriesMatrix &o)
{
	if (o.rows_ != rows_ || o.cols_ != cols_)
		throw DimensionMismatch("matrix shapes differ");
	for (std::size_t k = 0; k < e_.size(); ++k)
		e_[k] -= o.e_[k];
	return *this;
}

SeriesMatrix &SeriesMatrix::operator*=(const Complex &z)
{
	for (auto &s : e_)
		s *= z;
	return *this;
}

SeriesMatrix star_multiply(StarCache &star, const SeriesMatrix &a, const SeriesMatrix &b)
{
	if (a.cols() != b.rows())
		throw DimensionMismatch("matrix shapes do not compose");
	SeriesMatrix out(a.rows(), b.cols(), a.order());
	for (int i = 0; i < a.rows(); ++i)
		for (int j = 0; j < b.cols(); ++j)
			for (int k = 0; k < a.cols(); ++k)
				out(i, j) += star.multiply(a(i, k), b(k, j));
	return out;
}

SeriesVector star_multiply(StarCache &star, const SeriesMatrix &a, const SeriesVector &v)
{
	if (a.cols() != static_cast<int>(v.size()))
		throw DimensionMismatch("matrix and vector shapes differ");
	SeriesVector out(static_cast<std::size_t>(a.rows()), PolySeries(a.order()));
	for (int i = 0; i < a.rows(); ++i)
		for (int k = 0; k < a.cols(); ++k)
			out[static_cast<std::size_t>(i)] += star.multiply(a(i, k), v[static_cast<std::size_t>(k)]);
	return out;
}

PolyMatrix matrix_product(const PolyMatrix &a, const PolyMatrix &b)
{
	std::size_t inner = b.size();
	std::size_t cols = b.empty() ? 0 : b[0].size();
	PolyMatrix out(a.size(), std::vector<Polynomial>(cols));
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i].size() != inner)
			throw DimensionMismatch("matrix shapes do not compose");
		for (std::size_t j = 0; j < cols; ++j)
			for (std::size_t k = 0; k < inner; ++k)
				out[i][j] += a[i][k] * b[k][j];
	}
	return out;
}

bool is_hermitian(const PolyMatrix &m)
{
	for (std::size_t i = 0; i < m.size(); ++i) {
		if (m[i].size() != m.size())
			return false;
		for (std::size_t j = 0; j < m.size(); ++j)
			if (m[i][j] != m[j][i].conj())
				return false;
	}
	return true;
}

SeriesMatrix idempotency_defect(StarCache &star, const SeriesMatrix &e)
{
	return star_multiply(star, e, e) - e;
}

namespace {

int residual_order(StarCache &star, const SeriesMatrix &e)
{
	int r = idempotency_defect(star, e).lowest_order();
	return r < 0 ? e.order() + 1 : r;
}

} // namespace

DeformedIdempotent deform_idempotent(const SeriesMatrix &seed, const StarProduct &star)
{
	if (seed.rows() != seed.cols())
		throw DimensionMismatch("an idempotent must be square");
	if (seed.order() != star.order())
		throw OrderMismatch("seed truncation differs from the star product's");
	PolyMatrix e0 = seed.classical();
	if (matrix_product(e0, e0) != e0)
		throw NotIdempotent("the classical matrix does not satisfy e0 e0 = e0");

	StarCache cache(star);
	DeformedIdempotent out{seed, {}};
	int r = residual_order(cache, out.e);
	for (int step = 1; r <= star.order(); ++step) {
		SeriesMatrix e2 = star_multiply(cache, out.e, out.e);
		SeriesMatrix e3 = star_multiply(cache, e2, out.e);
		out.e = e2 * Complex(3) - e3 * Complex(2);
		r = residual_order(cache, out.e);
		out.steps.push_back({step, r});
	}
	return out;
}

DeformedIdempotent deform_idempotent(const PolyMatrix &e0, const StarProduct &star)
{
	return deform_idempotent(SeriesMatrix(e0, star.order()), star);
}

SeriesVector project(StarCache &star, const SeriesMatrix &e, const SeriesVector &v)
{
	return star_multiply(star, e, v);
}

SeriesVector module_action(StarCache &star, const SeriesMatrix &e, const SeriesVector &phi,
                           const PolySeries &f)
{
	if (project(star, e, phi) != phi)
		throw NotInModule("e * phi != phi");
	SeriesVector out;
	for (const auto &c : phi)
		out.push_back(star.multiply(c, f));
	return out;
}

PolySeries DeformedMetric::operator()(const SeriesVector &phi, const SeriesVector &psi) const
{
	if (phi.size() != psi.size() || static_cast<int>(phi.size()) != e_.rows())
		throw DimensionMismatch("module vectors have the wrong length");
	PolySeries out(star_.order());
	for (std::size_t i = 0; i < phi.size(); ++i)
		out += star_.multiply(conj(phi[i]), psi[i]);
	return out;
}

DeformedMetric deform_metric(const SeriesMatrix &e, const StarProduct &star)
{
	if (!check_hermitian(star, std::max(1, star.max_cochain_order())).pass)
		throw NonHermitianStar("conj(f * g) != conj(g) * conj(f)");
	if (e.conj_transpose() == e)
		return DeformedMetric(e, star);
	PolyMatrix e0 = e.classical();
	if (!is_hermitian(e0))
		throw NonHermitianProjector("classical projector is not Hermitian");
	DeformedIdempotent fresh = deform_idempotent(e0, star);
	if (fresh.e.conj_transpose() != fresh.e)
		throw NonHermitianProjector("Newton iteration lost Hermitian symmetry");
	return DeformedMetric(std::move(fresh.e), star);
}

ModuleTransform::ModuleTransform(std::vector<std::vector<OperatorSeries>> entries)
    : t_(std::move(entries))
{
	for (const auto &row : t_)
		if (row.size() != t_.size())
			throw DimensionMismatch("module transform must be square");
}

ModuleTransform ModuleTransform::identity(int n, int order)
{
	std::vector<std::vector<OperatorSeries>> t(static_cast<std::size_t>(n),
	                                           std::vector<OperatorSeries>(static_cast<std::size_t>(n),
	                                                                       OperatorSeries(order)));
	for (int i = 0; i < n; ++i)
		t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)][0] = DiffOp::identity();
	return ModuleTransform(std::move(t));
}

ModuleTransform ModuleTransform::left_multiplication(const StarProduct &star, const SeriesMatrix &m)
{
	int n = star.order();
	std::vector<std::vector<OperatorSeries>> t;
	for (int i = 0; i < m.rows(); ++i) {
		auto &row = t.emplace_back();
		for (int j = 0; j < m.cols(); ++j) {
			OperatorSeries op(n);
			for (int a = 0; a <= n; ++a) {
				if (m(i, j)[a].is_zero())
					continue;
				OperatorSeries l = star.left_multiplication(m(i, j)[a]);
				for (int r = 0; a + r <= n; ++r)
					op[a + r] += l[r];
			}
			row.push_back(std::move(op));
		}
	}
	return ModuleTransform(std::move(t));
}

SeriesVector ModuleTransform::apply(const SeriesVector &phi) const
{
	if (phi.size() != t_.size())
		throw DimensionMismatch("module vector has the wrong length");
	SeriesVector out;
	for (const auto &row : t_) {
		PolySeries s(phi.empty() ? 0 : phi[0].order());
		for (std::size_t j = 0; j < row.size(); ++j) {
			const OperatorSeries &op = row[j];
			for (int a = 0; a <= s.order(); ++a) {
				if (op[a].is_zero())
					continue;
				for (int b = 0; a + b <= s.order(); ++b)
					if (!phi[j][b].is_zero())
						s[a + b] += op[a](phi[j][b]);
			}
		}
		out.push_back(std::move(s));
	}
	return out;
}

bool ModuleTransform::starts_with_identity() const
{
	for (std::size_t i = 0; i < t_.size(); ++i)
		for (std::size_t j = 0; j < t_.size(); ++j)
			if (t_[i][j][0] != (i == j ? DiffOp::identity() : DiffOp()))
				return false;
	return true;
}

ModuleTransform module_intertwiner(const StarProduct &star, const SeriesMatrix &e,
                                   const SeriesMatrix &e_prime)
{
	StarCache cache(star);
	SeriesMatrix one = SeriesMatrix::identity(e.rows(), e.order());
	SeriesMatrix u = star_multiply(cache, e_prime, e) + star_multiply(cache, one - e_prime, one - e);
	return ModuleTransform::left_multiplication(star, u);
}

ModuleAction star_action(const StarProduct &star)
{
	return [star](const SeriesVector &phi, const PolySeries &f) {
		SeriesVector out;
		for (const auto &c : phi)
			out.push_back(star.multiply(c, f));
		return out;
	};
}

namespace {

void compare_vectors(CheckReport &rep, const SeriesVector &lhs, const SeriesVector &rhs,
                     std::vector<Polynomial> inputs, const std::string &label)
{
	++rep.cases;
	for (std::size_t i = 0; i < lhs.size(); ++i) {
		PolySeries d = lhs[i] - rhs[i];
		int r = d.lowest_order();
		if (r >= 0)
			rep.record(r, Witness{inputs, d[r], label + ", component " + std::to_string(i)});
	}
}

} // namespace

CheckReport check_module_equivalence(const ModuleTransform &t, const ModuleAction &action,
                                     const ModuleAction &action_tilde,
                                     const std::vector<SeriesVector> &elements,
                                     int base_count, int degree_bound)
{
	CheckReport rep;
	rep.property = "module equivalence";
	rep.degree_bound = degree_bound;
	for (std::size_t k = 0; k < elements.size(); ++k) {
		const SeriesVector &phi = elements[k];
		int n = phi.empty() ? 0 : phi[0].order();
		SeriesVector tphi = t.apply(phi);
		for (const auto &m : monomials_up_to(0, base_count, degree_bound)) {
			PolySeries f(n, Polynomial(m));
			compare_vectors(rep, t.apply(action(phi, f)), action_tilde(tphi, f), {Polynomial(m)},
			                "element " + std::to_string(k));
		}
	}
	return rep;
}

CheckReport check_isometry(const ModuleTransform &u, const DeformedMetric &h,
                           const DeformedMetric &h_tilde,
                           const std::vector<SeriesVector> &elements)
{
	CheckReport rep;
	rep.property = "isometry";
	for (std::size_t a = 0; a < elements.size(); ++a) {
		SeriesVector ua = u.apply(elements[a]);
		for (std::size_t b = 0; b < elements.size(); ++b)
			rep.compare(h(elements[a], elements[b]) - h_tilde(ua, u.apply(elements[b])), {},
			            "elements " + std::to_string(a) + ", " + std::to_string(b));
	}
	return rep;
}

} // namespace dq

#include "dq/expression.hpp"

#include <cctype>

namespace dq {

SyntaxError::SyntaxError(const std::string &what, int line, int column)
    : Error("syntax error at line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      line_(line), column_(column)
{}

UnknownIdentifier::UnknownIdentifier(const std::string &name, int line, int column)
    : Error("unknown identifier '" + name + "' at line " + std::to_string(line) + ", column " +
            std::to_string(column)),
      name_(name), line_(line), column_(column)
{}

bool operator==(const Expr &a, const Expr &b)
{
	return a.kind == b.kind && a.number == b.number && a.name == b.name &&
	       a.exponent == b.exponent && a.children == b.children && a.rows == b.rows;
}

namespace {

struct Token
{
	enum class Kind { number, identifier, symbol, end };
	Kind kind;
	std::string text;
	int line;
	int column;
};

std::vector<Token> tokenize(std::string_view s)
{
	std::vector<Token> out;
	int line = 1, col = 1;
	std::size_t i = 0;
	auto advance = [&](std::size_t n) {
		for (std::size_t k = 0; k < n; ++k, ++i) {
			if (s[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
	};
	while (i < s.size()) {
		unsigned char c = static_cast<unsigned char>(s[i]);
		if (std::isspace(c)) {
			advance(1);
			continue;
		}
		std::size_t j = i;
		if (std::isdigit(c)) {
			while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
				++j;
			out.push_back({Token::Kind::number, std::string(s.substr(i, j - i)), line, col});
		} else if (std::isalpha(c) || c == '_') {
			while (j < s.size() &&
			       (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
				++j;
			out.push_back({Token::Kind::identifier, std::string(s.substr(i, j - i)), line, col});
		} else if (std::string_view("+-*/^()[],;").find(static_cast<char>(c)) !=
		           std::string_view::npos) {
			j = i + 1;
			out.push_back({Token::Kind::symbol, std::string(1, static_cast<char>(c)), line, col});
		} else {
			throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'",
			                  line, col);
		}
		advance(j - i);
	}
	out.push_back({Token::Kind::end, "", line, col});
	return out;
}

class Parser
{
public:
	explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

	Expr parse()
	{
		Expr e = expr();
		if (peek().kind != Token::Kind::end)
			fail("unexpected '" + peek().text + "'");
		return e;
	}

private:
	const Token &peek() const { return t_[pos_]; }
	bool is_symbol(const char *s) const
	{
		return peek().kind == Token::Kind::symbol && peek().text == s;
	}
	Token take() { return t_[pos_++]; }
	[[noreturn]] void fail(const std::string &what) const
	{
		const Token &t = peek();
		throw SyntaxError(t.kind == Token::Kind::end ? "unexpected end of input" : what, t.line,
		                  t.column);
	}
	void expect(const char *s)
	{
		if (!is_symbol(s))
			fail(std::string("expected '") + s + "'");
		take();
	}

	static Expr node(Expr::Kind k, const Token &at)
	{
		Expr e;
		e.kind = k;
		e.line = at.line;
		e.column = at.column;
		return e;
	}
	static Expr binary(Expr::Kind k, const Token &at, Expr a, Expr b)
	{
		Expr e = node(k, at);
		e.children.push_back(std::move(a));
		e.children.push_back(std::move(b));
		return e;
	}

	bool starts_atom() const
	{
		const Token &t = peek();
		return t.kind == Token::Kind::number || t.kind == Token::Kind::identifier ||
		       (t.kind == Token::Kind::symbol && (t.text == "(" || t.text == "["));
	}

	Expr expr()
	{
		Expr e = term();
		while (is_symbol("+") || is_symbol("-")) {
			Token op = take();
			e = binary(op.text == "+" ? Expr::Kind::add : Expr::Kind::subtract, op, std::move(e),
			           term());
		}
		return e;
	}

	Expr term()
	{
		Expr e = unary();
		while (true) {
			if (is_symbol("*") || is_symbol("/")) {
				Token op = take();
				e = binary(op.text == "*" ? Expr::Kind::multiply : Expr::Kind::divide, op,
				           std::move(e), unary());
			} else if (starts_atom()) {
				Token at = peek();
				e = binary(Expr::Kind::multiply, at, std::move(e), unary());
			} else {
				return e;
			}
		}
	}

	Expr unary()
	{
		if (is_symbol("-")) {
			Token op = take();
			Expr e = node(Expr::Kind::negate, op);
			e.children.push_back(unary());
			return e;
		}
		return factor();
	}

	Expr factor()
	{
		Expr base = atom();
		if (is_symbol("^")) {
			Token op = take();
			if (peek().kind != Token::Kind::number)
				fail("expected a natural exponent");
			Token n = take();
			if (n.text.size() > 4)
				throw SyntaxError("exponent too large", n.line, n.column);
			Expr e = node(Expr::Kind::power, op);
			e.exponent = std::stoi(n.text);
			e.children.push_back(std::move(base));
			return e;
		}
		return base;
	}

	Expr atom()
	{
		const Token &t = peek();
		if (t.kind == Token::Kind::number) {
			Token n = take();
			Expr e = node(Expr::Kind::number, n);
			e.number = Rational(mpq_class(mpz_class(n.text)));
			return e;
		}
		if (t.kind == Token::Kind::identifier) {
			Token n = take();
			if (n.text == "i")
				return node(Expr::Kind::imaginary, n);
			if (n.text == "lam")
				return node(Expr::Kind::lambda, n);
			Expr e = node(Expr::Kind::identifier, n);
			e.name = n.text;
			return e;
		}
		if (is_symbol("(")) {
			take();
			Expr e = expr();
			expect(")");
			return e;
		}
		if (is_symbol("[")) {
			Token open = take();
			Expr e = node(Expr::Kind::matrix, open);
			e.rows.emplace_back();
			e.rows.back().push_back(expr());
			while (is_symbol(",") || is_symbol(";")) {
				if (take().text == ";")
					e.rows.emplace_back();
				e.rows.back().push_back(expr());
			}
			expect("]");
			return e;
		}
		fail("unexpected '" + t.text + "'");
	}

	std::vector<Token> t_;
	std::size_t pos_ = 0;
};

} // namespace

Expr parse_expression(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string to_string(const Expr &e)
{
	auto bin = [&](const char *op) {
		return "(" + to_string(e.children[0]) + " " + op + " " + to_string(e.children[1]) + ")";
	};
	switch (e.kind) {
	case Expr::Kind::number: return e.number.str();
	case Expr::Kind::imaginary: return "i";
	case Expr::Kind::lambda: return "lam";
	case Expr::Kind::identifier: return e.name;
	case Expr::Kind::negate: return "(-" + to_string(e.children[0]) + ")";
	case Expr::Kind::add: return bin("+");
	case Expr::Kind::subtract: return bin("-");
	case Expr::Kind::multiply: return bin("*");
	case Expr::Kind::divide: return bin("/");
	case Expr::Kind::power: {
		std::string b = to_string(e.children[0]);
		if (e.children[0].kind == Expr::Kind::power)
			b = "(" + b + ")";
		return b + "^" + std::to_string(e.exponent);
	}
	case Expr::Kind::matrix: {
		std::string out = "[";
		for (std::size_t r = 0; r < e.rows.size(); ++r) {
			if (r > 0)
				out += "; ";
			for (std::size_t c = 0; c < e.rows[r].size(); ++c) {
				if (c > 0)
					out += ", ";
				out += to_string(e.rows[r][c]);
			}
		}
		return out + "]";
	}
	}
	return {};
}

namespace {

[[noreturn]] void type_error(const Expr &e, const std::string &what)
{
	throw SyntaxError(what, e.line, e.column);
}

Complex constant_divisor(const Expr &e, const PolySeries &d)
{
	for (int r = 1; r <= d.order(); ++r)
		if (!d[r].is_zero())
			type_error(e, "divisor must be a scalar");
	if (!d[0].is_constant() || d[0].is_zero())
		type_error(e, "divisor must be a nonzero scalar");
	return d[0].constant_term().inverse();
}

PolySeries series(const Expr &e, const Space &space, int order)
{
	auto child = [&](std::size_t k) { return series(e.children[k], space, order); };
	switch (e.kind) {
	case Expr::Kind::number: return PolySeries(order, Polynomial(Complex(e.number)));
	case Expr::Kind::imaginary: return PolySeries(order, Polynomial(Complex::i()));
	case Expr::Kind::lambda: return PolySeries::monomial(order, 1, Polynomial(1));
	case Expr::Kind::identifier: {
		int v = space.index(e.name);
		if (v < 0)
			throw UnknownIdentifier(e.name, e.line, e.column);
		return PolySeries(order, Polynomial::variable(v));
	}
	case Expr::Kind::negate: return -child(0);
	case Expr::Kind::add: return child(0) + child(1);
	case Expr::Kind::subtract: return child(0) - child(1);
	case Expr::Kind::multiply: return child(0) * child(1);
	case Expr::Kind::divide: {
		PolySeries d = child(1);
		return child(0) * constant_divisor(e.children[1], d);
	}
	case Expr::Kind::power: {
		PolySeries b = child(0);
		PolySeries out(order, Polynomial(1));
		for (int k = 0; k < e.exponent; ++k)
			out = out * b;
		return out;
	}
	case Expr::Kind::matrix: type_error(e, "matrix where a scalar was expected");
	}
	return PolySeries(order);
}

struct MatrixValue
{
	bool is_matrix = false;
	PolySeries scalar;
	SeriesMatrix matrix;
};

SeriesMatrix series_product(const SeriesMatrix &a, const SeriesMatrix &b)
{
	SeriesMatrix out(a.rows(), b.cols(), a.order());
	for (int i = 0; i < a.rows(); ++i)
		for (int j = 0; j < b.cols(); ++j)
			for (int k = 0; k < a.cols(); ++k)
				out(i, j) += a(i, k) * b(k, j);
	return out;
}

SeriesMatrix scale(SeriesMatrix m, const PolySeries &s)
{
	for (int i = 0; i < m.rows(); ++i)
		for (int j = 0; j < m.cols(); ++j)
			m(i, j) = m(i, j) * s;
	return m;
}

MatrixValue matrix_value(const Expr &e, const Space &space, int order)
{
	auto child = [&](std::size_t k) { return matrix_value(e.children[k], space, order); };
	auto scalar = [](PolySeries s) {
		MatrixValue v;
		v.scalar = std::move(s);
		return v;
	};
	auto mat = [](SeriesMatrix m) {
		MatrixValue v;
		v.is_matrix = true;
		v.matrix = std::move(m);
		return v;
	};
	switch (e.kind) {
	case Expr::Kind::matrix: {
		int rows = static_cast<int>(e.rows.size());
		int cols = static_cast<int>(e.rows[0].size());
		SeriesMatrix m(rows, cols, order);
		for (int i = 0; i < rows; ++i) {
			if (static_cast<int>(e.rows[static_cast<std::size_t>(i)].size()) != cols)
				type_error(e, "matrix rows have different lengths");
			for (int j = 0; j < cols; ++j)
				m(i, j) = series(e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
				                 space, order);
		}
		return mat(std::move(m));
	}
	case Expr::Kind::negate: {
		MatrixValue v = child(0);
		if (v.is_matrix)
			return mat(v.matrix * Complex(-1));
		return scalar(-v.scalar);
	}
	case Expr::Kind::add:
	case Expr::Kind::subtract: {
		MatrixValue a = child(0), b = child(1);
		if (a.is_matrix != b.is_matrix)
			type_error(e, "cannot add a scalar and a matrix");
		bool add = e.kind == Expr::Kind::add;
		if (!a.is_matrix)
			return scalar(add ? a.scalar + b.scalar : a.scalar - b.scalar);
		if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols())
			type_error(e, "matrix shapes differ");
		return mat(add ? a.matrix + b.matrix : a.matrix - b.matrix);
	}
	case Expr::Kind::multiply: {
		MatrixValue a = child(0), b = child(1);
		if (!a.is_matrix && !b.is_matrix)
			return scalar(a.scalar * b.scalar);
		if (!a.is_matrix)
			return mat(scale(b.matrix, a.scalar));
		if (!b.is_matrix)
			return mat(scale(a.matrix, b.scalar));
		if (a.matrix.cols() != b.matrix.rows())
			type_error(e, "matrix shapes do not compose");
		return mat(series_product(a.matrix, b.matrix));
	}
	case Expr::Kind::divide: {
		MatrixValue a = child(0), b = child(1);
		if (b.is_matrix)
			type_error(e.children[1], "divisor must be a scalar");
		Complex inv = constant_divisor(e.children[1], b.scalar);
		if (a.is_matrix)
			return mat(a.matrix * inv);
		return scalar(a.scalar * inv);
	}
	case Expr::Kind::power: {
		MatrixValue b = child(0);
		if (!b.is_matrix)
			return scalar(series(e, space, order));
		if (b.matrix.rows() != b.matrix.cols())
			type_error(e, "power of a non-square matrix");
		SeriesMatrix out = SeriesMatrix::identity(b.matrix.rows(), order);
		for (int k = 0; k < e.exponent; ++k)
			out = series_product(out, b.matrix);
		return mat(std::move(out));
	}
	default: return scalar(series(e, space, order));
	}
}

OperatorSeries operator_value(const Expr &e, const Space &space, int order)
{
	auto child = [&](std::size_t k) { return operator_value(e.children[k], space, order); };
	switch (e.kind) {
	case Expr::Kind::number: return OperatorSeries(order, DiffOp::identity() * Complex(e.number));
	case Expr::Kind::imaginary: return OperatorSeries(order, DiffOp::identity() * Complex::i());
	case Expr::Kind::lambda: return OperatorSeries::monomial(order, 1, DiffOp::identity());
	case Expr::Kind::identifier: {
		int v = space.index(e.name);
		if (v >= 0)
			return OperatorSeries(order, DiffOp::multiplication(Polynomial::variable(v)));
		if (e.name.size() > 2 && e.name.compare(0, 2, "d_") == 0) {
			int w = space.index(e.name.substr(2));
			if (w >= 0)
				return OperatorSeries(order, DiffOp::partial(w));
		}
		throw UnknownIdentifier(e.name, e.line, e.column);
	}
	case Expr::Kind::negate: return -child(0);
	case Expr::Kind::add: return child(0) + child(1);
	case Expr::Kind::subtract: return child(0) - child(1);
	case Expr::Kind::multiply: return child(0) * child(1);
	case Expr::Kind::divide: {
		PolySeries d = series(e.children[1], space, order);
		return child(0) * constant_divisor(e.children[1], d);
	}
	case Expr::Kind::power: {
		OperatorSeries b = child(0);
		OperatorSeries out(order, DiffOp::identity());
		for (int k = 0; k < e.exponent; ++k)
			out = out * b;
		return out;
	}
	case Expr::Kind::matrix: type_error(e, "matrix where an operator was expected");
	}
	return OperatorSeries(order);
}

} // namespace

PolySeries evaluate_series(const Expr &e, const Space &space, int order)
{
	return series(e, space, order);
}

Polynomial evaluate_polynomial(const Expr &e, const Space &space)
{
	PolySeries s = series(e, space, 1);
	if (!s[1].is_zero())
		type_error(e, "lam is not allowed here");
	return s[0];
}

SeriesMatrix evaluate_matrix(const Expr &e, const Space &space, int order)
{
	MatrixValue v = matrix_value(e, space, order);
	if (v.is_matrix)
		return v.matrix;
	SeriesMatrix m(1, 1, order);
	m(0, 0) = v.scalar;
	return m;
}

OperatorSeries evaluate_operator(const Expr &e, const Space &space, int order)
{
	return operator_value(e, space, order);
}

std::string format(const OperatorSeries &d, const Space &space)
{
	std::string out;
	for (int r = 0; r <= d.order(); ++r) {
		if (d[r].is_zero())
			continue;
		std::string body = format(d[r], space);
		std::string term;
		if (r == 0)
			term = body;
		else
			term = (r == 1 ? "lam" : "lam^" + std::to_string(r)) + "*(" + body + ")";
		if (!out.empty())
			out += " + ";
		out += term;
	}
	return out.empty() ? "0" : out;
}

std::string format(const SeriesMatrix &m, const Space &space)
{
	std::string out = "[";
	for (int i = 0; i < m.rows(); ++i) {
		if (i > 0)
			out += "; ";
		for (int j = 0; j < m.cols(); ++j) {
			if (j > 0)
				out += ", ";
			out += format(m(i, j), space);
		}
	}
	return out + "]";
}

} // namespace dq

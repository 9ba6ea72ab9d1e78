#pragma once

#include "dq/diffop.hpp"
#include "dq/projective_module.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dq {

/// Parse failure; line and column are 1-based.
class SyntaxError : public Error
{
public:
	SyntaxError(const std::string &what, int line, int column);
	int line() const { return line_; }
	int column() const { return column_; }

private:
	int line_, column_;
};

class UnknownIdentifier : public Error
{
public:
	UnknownIdentifier(const std::string &name, int line, int column);
	const std::string &name() const { return name_; }
	int line() const { return line_; }
	int column() const { return column_; }

private:
	std::string name_;
	int line_, column_;
};

/// Expression tree. Grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/')? unary)*     juxtaposition multiplies
///   unary  := '-' unary | factor
///   factor := atom ('^' nat)?
///   atom   := nat | 'i' | 'lam' | ident | '(' expr ')' | '[' rows ']'
///   rows   := expr (',' expr)* (';' expr (',' expr)*)*
///
/// '/' only accepts a nonzero scalar divisor. In operator context an
/// identifier d_<var> is the partial derivative and products compose.
struct Expr
{
	enum class Kind { number, imaginary, lambda, identifier, negate, add, subtract, multiply,
	                  divide, power, matrix };

	Kind kind = Kind::number;
	Rational number;
	std::string name;
	int exponent = 0;
	std::vector<Expr> children;
	/// Matrix literal entries, row by row.
	std::vector<std::vector<Expr>> rows;
	int line = 1;
	int column = 1;

	friend bool operator==(const Expr &a, const Expr &b);
};

Expr parse_expression(std::string_view text);
/// Fully structural printout that parses back to an equal tree.
std::string to_string(const Expr &e);

PolySeries evaluate_series(const Expr &e, const Space &space, int order);
/// Rejects expressions that mention lam.
Polynomial evaluate_polynomial(const Expr &e, const Space &space);
/// A scalar is read as a 1x1 matrix.
SeriesMatrix evaluate_matrix(const Expr &e, const Space &space, int order);
OperatorSeries evaluate_operator(const Expr &e, const Space &space, int order);

inline PolySeries parse_series(std::string_view text, const Space &space, int order)
{
	return evaluate_series(parse_expression(text), space, order);
}
inline Polynomial parse_polynomial(std::string_view text, const Space &space)
{
	return evaluate_polynomial(parse_expression(text), space);
}
inline OperatorSeries parse_operator(std::string_view text, const Space &space, int order)
{
	return evaluate_operator(parse_expression(text), space, order);
}

std::string format(const OperatorSeries &d, const Space &space);
/// "[a, b; c, d]"
std::string format(const SeriesMatrix &m, const Space &space);

} // namespace dq

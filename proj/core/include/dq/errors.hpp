#pragma once

#include <stdexcept>
#include <string>

namespace dq {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

#define DQ_DECLARE_ERROR(Name)                                                 \
	class Name : public Error                                                  \
	{                                                                          \
	public:                                                                    \
		using Error::Error;                                                    \
	}

DQ_DECLARE_ERROR(InvertError);
DQ_DECLARE_ERROR(OrderMismatch);
DQ_DECLARE_ERROR(NonConstantTheta);
DQ_DECLARE_ERROR(UnitalityViolation);
DQ_DECLARE_ERROR(NotIdempotent);
DQ_DECLARE_ERROR(NotInModule);
DQ_DECLARE_ERROR(NonHermitianStar);
DQ_DECLARE_ERROR(NonHermitianProjector);
DQ_DECLARE_ERROR(ArityUnsupported);
DQ_DECLARE_ERROR(NotACocycle);
DQ_DECLARE_ERROR(NotModuleToOrderK);
DQ_DECLARE_ERROR(NotVertical);
DQ_DECLARE_ERROR(DimensionMismatch);

#undef DQ_DECLARE_ERROR

/// The linear system for a coboundary or intertwiner had no solution inside
/// the requested ansatz. This is an inconclusive outcome, not a statement
/// about cohomology.
class NoSolutionInTruncation : public Error
{
public:
	NoSolutionInTruncation(const std::string &what, int order)
	    : Error(what), order_(order)
	{}

	/// lambda-order at which the solve failed, or -1 if not order-indexed.
	int order() const { return order_; }

private:
	int order_;
};

} // namespace dq

#pragma once

#include <stdexcept>

namespace vgf {

/* Base class for every error this library raises on bad input or broken
   preconditions.  Internal invariant violations use std::logic_error. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error { using Error::Error; };
struct NotSquareError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct SizeMismatchError : Error { using Error::Error; };

struct EmptyFacetError : Error { using Error::Error; };
struct VertexOutOfRangeError : Error { using Error::Error; };
struct UnknownSimplexError : Error { using Error::Error; };
struct NotAFaceError : Error { using Error::Error; };

struct IncompatibleZigzagError : Error { using Error::Error; };
struct NotVeryGoodError : Error { using Error::Error; };
struct PosetMismatchError : Error { using Error::Error; };
struct NotNaturalError : Error { using Error::Error; };

struct InvalidPathError : Error { using Error::Error; };
struct EndpointMismatchError : Error { using Error::Error; };
struct NotInComponentError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct NotALoopError : Error { using Error::Error; };
struct InvalidRepError : Error { using Error::Error; };
struct RelationViolatedError : Error { using Error::Error; };

struct NotRankOneError : Error { using Error::Error; };
struct ZeroScaleError : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

}  // namespace vgf

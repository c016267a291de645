#ifndef ZETACOMP_ERRORS_HPP
#define ZETACOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetacomp {

/* Input-level failures: malformed specs, bad labels, cyclic relations.
   All of these indicate a problem with the caller's data, not with the
   library itself, and map to the CLI's usage-error exit status. */
struct PosetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleError : PosetError {
    using PosetError::PosetError;
};

struct DuplicateNameError : PosetError {
    using PosetError::PosetError;
};

struct UnknownLabelError : PosetError {
    using PosetError::PosetError;
};

struct IndexOutOfRange : PosetError {
    using PosetError::PosetError;
};

struct InvalidPermutation : PosetError {
    using PosetError::PosetError;
};

struct SizeGuardError : PosetError {
    using PosetError::PosetError;
};

struct ParseError : PosetError {
    using PosetError::PosetError;
};

/* Matrix contract violations. */
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquare : DimensionMismatch {
    using DimensionMismatch::DimensionMismatch;
};

} // namespace zetacomp

#endif

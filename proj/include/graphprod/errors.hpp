// Error taxonomy shared by the whole library.
//
// The three classes map one-to-one onto CLI exit codes:
//   ValidationError    -> exit 2 (bad input: malformed spec, mixed fields, out-of-range data)
//   TruncationError    -> exit 3 (a computation needed coefficients beyond the configured
//                                 truncation degree; never silently dropped)
//   InternalCheckError -> exit 4 (a structural self-check failed, e.g. d^2 != 0 on a chain
//                                 complex; indicates an implementation fault, not bad input)

#ifndef GRAPHPROD_ERRORS_HPP
#define GRAPHPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphprod {

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalCheckError : std::runtime_error {
    explicit InternalCheckError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace graphprod

#endif

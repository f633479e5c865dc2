#ifndef ZKN_ERRORS_HPP
#define ZKN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zkn {

/// A precondition on caller-supplied data failed (malformed or out-of-range input).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity that must hold exactly did not.  Always an implementation defect.
class ConsistencyFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace zkn

#endif  // ZKN_ERRORS_HPP

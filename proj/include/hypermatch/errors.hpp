#ifndef HYPERMATCH_ERRORS_HPP
#define HYPERMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypermatch {

/// Malformed data: bad edge tuples, unparseable files, mismatched arities.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates an operation's contract
/// (e.g. saturate() on a family that already admits a rainbow matching).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypermatch

#endif  // HYPERMATCH_ERRORS_HPP

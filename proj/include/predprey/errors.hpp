#ifndef PREDPREY_ERRORS_HPP
#define PREDPREY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace predprey {

/// Invalid input: a parameter or configuration value violates a stated invariant.
/// The message names the violated invariant.
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested analysis is undefined in this parameter regime
/// (e.g. threshold curves for E <= 1, wave speed below the bistable range).
class RegimeError : public std::domain_error {
public:
    explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

/// A time step produced a non-finite value; carries the first offending node.
class NumericalBlowup : public std::runtime_error {
public:
    NumericalBlowup(const std::string& what, std::size_t node)
        : std::runtime_error(what + " (node " + std::to_string(node) + ")"), node_(node) {}
    std::size_t node() const noexcept { return node_; }

private:
    std::size_t node_;
};

}  // namespace predprey

#endif  // PREDPREY_ERRORS_HPP

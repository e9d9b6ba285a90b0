#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zsw {

/// Malformed textual input (group literals, length sets, data files).
/// `position()` is the 0-based character offset (or line number for
/// files) where parsing stopped.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A formula was asked to evaluate outside the hypotheses it is stated for.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A search would need more memory or nodes than it is allowed to use.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zsw

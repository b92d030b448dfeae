#pragma once

#include <stdexcept>
#include <string>

namespace sumsets {

// Raised when a computation contradicts one of the implemented theorems
// (classifier/computation disagreement, missing lemma witness, broken
// descent). Distinct from std::invalid_argument so callers can tell a bad
// input from a falsified statement.
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sumsets

#pragma once

#include <stdexcept>
#include <string>

namespace vres {

// Malformed input (bad vertex, bad polynomial text, inconsistent twists).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation applied outside its domain (face not in complex, f = 0, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Hypotheses of a construction do not hold.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EquidimensionalityError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A legitimate negative answer, e.g. a non-irrelevant Ext module blocking a cone.
struct ObstructionError : std::runtime_error {
    int index = -1;
    ObstructionError(const std::string& what, int i) : std::runtime_error(what), index(i) {}
};

// Result that should be impossible; signals a bug.
struct ContradictionError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace vres

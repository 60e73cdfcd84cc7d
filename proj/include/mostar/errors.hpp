#pragma once

#include <stdexcept>
#include <string>

namespace mostar {

/// Input does not describe a valid tree (bad ids, cycle, wrong edge count).
class TreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A family parameter record violates the family's stated range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A transform's precondition does not hold on the given tree.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The structure a transform operates on (legs, paths) is not present.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested work exceeds a configured cap.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace mostar

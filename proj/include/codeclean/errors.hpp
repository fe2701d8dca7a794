#pragma once

#include <stdexcept>
#include <string>

namespace codeclean {

/* Malformed input file or text (bad JSON, bad Pauli string, unknown field). */
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Structurally valid input that violates a code-spec invariant. */
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* A documented operation precondition does not hold for the given inputs. */
class contract_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* A state-space or coset guard would be exceeded. */
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* A postcondition the library itself guarantees failed; signals a bug. */
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace codeclean

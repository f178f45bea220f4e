#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

// Input that is structurally broken or violates a combinatorial invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A theorem or genus was requested on input that does not satisfy its hypotheses.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Always a bug, never a result.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The ring-reduction oracle refuses inputs above its size budget.
class OracleUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact coloring search hit its node budget without a verdict.
class ColoringInconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qtoric

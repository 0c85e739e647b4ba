#pragma once

#include <stdexcept>
#include <string>

namespace lieembed {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LIEEMBED_ERROR(Name)                                   \
    class Name : public Error {                                \
    public:                                                    \
        explicit Name(const std::string& what) : Error(what) {} \
    }

// An irreducible factor of degree >= 3, or a second quadratic extension.
LIEEMBED_ERROR(ExtensionDegreeTooHigh);
LIEEMBED_ERROR(ParseError);
// Antisymmetry or Jacobi failure, or a post-condition that did not hold.
LIEEMBED_ERROR(InvariantViolation);
LIEEMBED_ERROR(NotASubalgebra);
LIEEMBED_ERROR(CenterObstruction);
LIEEMBED_ERROR(NotATorus);
LIEEMBED_ERROR(UnrecognizedBondPattern);
LIEEMBED_ERROR(UnrecognizedDiagram);
LIEEMBED_ERROR(DegenerateRoot);
LIEEMBED_ERROR(NoRealSemisimpleFound);
LIEEMBED_ERROR(NoCompactFound);
LIEEMBED_ERROR(NotAbelianNilpotent);
LIEEMBED_ERROR(NotNilpotent);
LIEEMBED_ERROR(NotSplit);
LIEEMBED_ERROR(VariableMismatch);
LIEEMBED_ERROR(NotClosed);

#undef LIEEMBED_ERROR

}  // namespace lieembed

#pragma once

#include <stdexcept>
#include <string>

namespace limifrob {

// Every failure carries an exit-status category so the CLI can map it without
// knowing the concrete type.
enum class ErrorCategory { Algebra = 1, Input = 2, GeneralPosition = 3, Precision = 4, Verification = 5 };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& what) : std::runtime_error(what), cat_(cat) {}
    ErrorCategory category() const noexcept { return cat_; }

private:
    ErrorCategory cat_;
};

#define LIMIFROB_DEFINE_ERROR(Name, Cat)                                            \
    class Name : public Error {                                                     \
    public:                                                                         \
        explicit Name(const std::string& what) : Error(ErrorCategory::Cat, what) {} \
    };

// exact_algebra
LIMIFROB_DEFINE_ERROR(DimensionMismatch, Algebra)
LIMIFROB_DEFINE_ERROR(NonSquare, Algebra)
LIMIFROB_DEFINE_ERROR(NotRationalSpectrum, Algebra)
LIMIFROB_DEFINE_ERROR(Singular, Algebra)

// padic_arith
LIMIFROB_DEFINE_ERROR(ZeroInput, Input)
LIMIFROB_DEFINE_ERROR(PrecisionExhausted, Precision)

// griffiths_dwork
LIMIFROB_DEFINE_ERROR(NotGeneralPosition, GeneralPosition)
LIMIFROB_DEFINE_ERROR(InvalidFamily, Input)

// connection_normalize
LIMIFROB_DEFINE_ERROR(NoCyclicVectorFound, Algebra)
LIMIFROB_DEFINE_ERROR(NotRegular, Algebra)
LIMIFROB_DEFINE_ERROR(NonIntegerEigenvalue, Algebra)

// frobenius_deformation
LIMIFROB_DEFINE_ERROR(DegreeNotDividing, Input)
LIMIFROB_DEFINE_ERROR(ReconstructionFailed, Precision)
LIMIFROB_DEFINE_ERROR(ResidualCheckFailed, Precision)
LIMIFROB_DEFINE_ERROR(NegativeCoefficientNonzero, Precision)

// limiting_structure
LIMIFROB_DEFINE_ERROR(NotNilpotent, Algebra)
LIMIFROB_DEFINE_ERROR(BoundTooLargeForPrecision, Precision)
LIMIFROB_DEFINE_ERROR(Unrecognized, Precision)

// oracle_counting
LIMIFROB_DEFINE_ERROR(BudgetExceeded, Input)
LIMIFROB_DEFINE_ERROR(InsufficientCounts, Input)
LIMIFROB_DEFINE_ERROR(SymmetryViolation, Verification)
LIMIFROB_DEFINE_ERROR(VerificationMismatch, Verification)

// cli
LIMIFROB_DEFINE_ERROR(HomogeneityError, Input)
LIMIFROB_DEFINE_ERROR(DegreeDividesError, Input)

#undef LIMIFROB_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error(ErrorCategory::Input,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace limifrob

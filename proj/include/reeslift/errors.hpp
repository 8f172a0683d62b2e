#ifndef REESLIFT_ERRORS_HPP
#define REESLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reeslift {

struct ReesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : ReesError {
    DivisionByZero() : ReesError("division by zero") {}
};

struct DimensionMismatch : ReesError {
    explicit DimensionMismatch(const std::string& what) : ReesError("dimension mismatch: " + what) {}
};

struct SpaceMismatch : ReesError {
    SpaceMismatch() : ReesError("operands live in different variable spaces") {}
};

struct NotHomogeneous : ReesError {
    NotHomogeneous() : ReesError("polynomial is not homogeneous for the requested grading") {}
};

struct ZeroPolynomial : ReesError {
    ZeroPolynomial() : ReesError("degree of the zero polynomial is undefined") {}
};

struct DivisorZero : ReesError {
    DivisorZero() : ReesError("division by the zero polynomial") {}
};

struct BothZero : ReesError {
    BothZero() : ReesError("gcd of two zero forms is undefined") {}
};

struct ValidationError : ReesError {
    using ReesError::ReesError;
};

struct CommonFactor : ValidationError {
    std::string factor;
    explicit CommonFactor(std::string f)
        : ValidationError("parametrization has a common factor: " + f), factor(std::move(f)) {}
};

struct LinearlyDependent : ValidationError {
    LinearlyDependent() : ValidationError("the three input forms are linearly dependent") {}
};

struct DegreeTooSmall : ValidationError {
    DegreeTooSmall() : ValidationError("degree must be > 1") {}
};

struct InternalInconsistency : ReesError {
    explicit InternalInconsistency(const std::string& what) : ReesError("internal inconsistency: " + what) {}
};

struct CommonFactorInP : ReesError {
    CommonFactorInP() : ReesError("syzygy p has a common factor; upstream bug") {}
};

struct DecompositionMismatch : ReesError {
    DecompositionMismatch() : ReesError("alpha*A + beta*B != f; normalization bug") {}
};

struct GenerationFailed : ReesError {
    explicit GenerationFailed(const std::string& what) : ReesError("instance generation failed: " + what) {}
};

struct InvalidParameters : ReesError {
    explicit InvalidParameters(const std::string& what) : ReesError("invalid parameters: " + what) {}
};

struct DegreeMismatch : ReesError {
    explicit DegreeMismatch(const std::string& what) : ReesError("degree mismatch: " + what) {}
};

struct NotInPIdeal : ReesError {
    NotInPIdeal() : ReesError("polynomial is not in the ideal generated by p") {}
};

struct NotInPAIdeal : ReesError {
    NotInPAIdeal() : ReesError("polynomial is not in the ideal generated by p^A_1, p^A_2") {}
};

struct SPairNonzero : ReesError {
    explicit SPairNonzero(const std::string& pair) : ReesError("S-polynomial does not reduce to zero: " + pair) {}
};

struct BudgetExceeded : ReesError {
    explicit BudgetExceeded(const std::string& what) : ReesError("oracle budget exceeded: " + what) {}
};

struct CongruenceFailed : ReesError {
    explicit CongruenceFailed(const std::string& member) : ReesError("lift congruence failed for " + member) {}
};

struct ParseError : ReesError {
    explicit ParseError(const std::string& what) : ReesError("parse error: " + what) {}
};

}  // namespace reeslift

#endif

#ifndef RINGKIT_ERRORS_HPP
#define RINGKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringkit
{

// Mathematical failure modes. The enumerator names are part of the CLI
// contract: they are printed verbatim on stderr.
enum class Errc {
    ContextMismatch,
    NotInvertible,
    DivisionByZero,
    NotAField,
    NotADomain,
    NotPrimeCharacteristic,
    InfiniteRing,
    TooLarge,
    InvalidParameters,
    NotAUnit,
    DivisionByZeroPoly,
    NotARoot,
    ZeroPolynomial,
    DuplicateNode,
    MissingVariable,
    VariableCollision,
    ConstantTermNotUnit,
    DenominatorIndistinguishableFromZero,
    ZeroDenominator,
    ContextNotEuclidean,
    NotComaximal,
    EmptySystem,
    FactorsMismatch,
    ZeroInput,
    DegreeOutOfRange,
    NotPrimitive,
    ConstantPolynomial,
    DegreeDrops,
    ShapeMismatch,
    DeterminantNotUnit,
    PrecisionMismatch,
    Unsupported,
};

std::string_view errc_name(Errc code) noexcept;

class MathError : public std::runtime_error
{
public:
    MathError(Errc code, std::string detail = {});

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }
    // Offending payload, e.g. the gcd for NotInvertible.
    const std::string &detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

// Malformed literal or command line.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace ringkit

#endif

#include <ringkit/errors.hpp>

namespace ringkit
{

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAField: return "NotAField";
    case Errc::NotADomain: return "NotADomain";
    case Errc::NotPrimeCharacteristic: return "NotPrimeCharacteristic";
    case Errc::InfiniteRing: return "InfiniteRing";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::NotARoot: return "NotARoot";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DuplicateNode: return "DuplicateNode";
    case Errc::MissingVariable: return "MissingVariable";
    case Errc::VariableCollision: return "VariableCollision";
    case Errc::ConstantTermNotUnit: return "ConstantTermNotUnit";
    case Errc::DenominatorIndistinguishableFromZero: return "DenominatorIndistinguishableFromZero";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ContextNotEuclidean: return "ContextNotEuclidean";
    case Errc::NotComaximal: return "NotComaximal";
    case Errc::EmptySystem: return "EmptySystem";
    case Errc::FactorsMismatch: return "FactorsMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::DegreeDrops: return "DegreeDrops";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DeterminantNotUnit: return "DeterminantNotUnit";
    case Errc::PrecisionMismatch: return "PrecisionMismatch";
    case Errc::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

namespace
{

std::string compose(Errc code, const std::string &detail)
{
    std::string msg(errc_name(code));
    if (!detail.empty()) {
        msg += ' ';
        msg += detail;
    }
    return msg;
}

} // namespace

MathError::MathError(Errc code, std::string detail)
    : std::runtime_error(compose(code, detail)), code_(code), detail_(std::move(detail))
{
}

} // namespace ringkit

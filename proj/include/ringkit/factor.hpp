#ifndef RINGKIT_FACTOR_HPP
#define RINGKIT_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <ringkit/poly.hpp>
#include <ringkit/ring.hpp>

namespace ringkit
{

// unit * prod factor^multiplicity. Factors are canonical associates,
// pairwise non-associate and sorted (integers ascending, polynomials by
// degree then ascending coefficient tuple).
struct Factorization {
    Element unit;
    std::vector<std::pair<Element, unsigned>> factors;

    Element expand() const;
    std::string to_string() const;

    friend bool operator==(const Factorization &a, const Factorization &b);
};

// Trial division; |n| <= 10^12 (TooLarge beyond), ZeroInput for 0.
inline constexpr std::int64_t kTrialDivisionCap = 1'000'000'000'000;
Factorization factor_integer(const Integer &n);

// All monic irreducibles of degree 1..max_degree over F_p, degree then lex.
std::vector<Poly> monic_irreducibles(const Integer &p, unsigned max_degree);

// f over F_p: unit = leading coefficient, monic irreducible factors.
Factorization factor_poly_fp(const Poly &f);

// Positive gcd of the coefficients of f over Z; ZeroInput for f = 0.
Integer content(const Poly &f);
Poly primitive_part(const Poly &f);
// Primitive integer polynomial c*f with positive leading coefficient; f over
// Q or Z, result over Z.
Poly primitive_associate(const Poly &f);

// Rational roots of f over Z or Q, ascending.
std::vector<Rational> rational_roots(const Poly &f);

enum class Verdict { Irreducible, Reducible, Inconclusive };

namespace cert
{
struct None {};
struct PrimeNorm {};
struct LowDegreeNoRoot {};
struct RationalRootFound {
    Element root;
};
struct EisensteinAt {
    Integer p;
    Integer shift;
};
struct ReductionMod {
    Integer p;
};
struct TrialDivisorFound {
    Element divisor;
};
// Irreducibility established by exhausting every candidate divisor.
struct Exhaustive {};
} // namespace cert

using Certificate = std::variant<cert::None, cert::PrimeNorm, cert::LowDegreeNoRoot, cert::RationalRootFound,
                                 cert::EisensteinAt, cert::ReductionMod, cert::TrialDivisorFound, cert::Exhaustive>;

struct IrreducibilityVerdict {
    Verdict status = Verdict::Inconclusive;
    Certificate certificate = cert::None{};

    // Single-line record, e.g. "IRREDUCIBLE cert=eisenstein p=3 shift=0".
    std::string to_string() const;
};

// 2 <= deg f <= 3 over Q (rational roots) or a finite field (exhaustion).
IrreducibilityVerdict low_degree_test(const Poly &f);
// f primitive over Z. Irreducible or Inconclusive, never Reducible.
IrreducibilityVerdict eisenstein_check(const Poly &f, const Integer &p);
// Shifts a = 0, 1, -1, 2, -2, ... with |a| <= shift_bound; primes dividing the
// translated constant term and <= prime_bound.
IrreducibilityVerdict eisenstein_translate_search(const Poly &f, std::uint64_t prime_bound = 50,
                                                  std::uint64_t shift_bound = 10);
// Throws DegreeDrops when p divides the leading coefficient.
IrreducibilityVerdict reduction_mod_p_check(const Poly &f, const Integer &p);
// Exhaustive trial division by monic polynomials over F_p.
IrreducibilityVerdict irreducible_fp(const Poly &f);
// Prime norm or exhaustive norm search in Z[sqrt d], d < 0.
IrreducibilityVerdict quad_irreducibility(const Element &x);

struct IrreducibilityOptions {
    std::uint64_t prime_bound = 50;
    std::uint64_t shift_bound = 10;
    // Reduction is tried at this many primes not dividing the leading
    // coefficient.
    std::size_t reduction_primes = 10;
};

// Full verdict for f over Z, Q or F_p.
IrreducibilityVerdict irreducibility(const Poly &f, const IrreducibilityOptions &opts = {});

// true/false when decidable with the above; nullopt when inconclusive.
std::optional<bool> decide_irreducible(const Poly &f);

// Product of the primes of odd multiplicity (n = u * q^2 * s).
Integer squarefree_part(const Integer &n);
// Same for polynomials over F_p (monic) and over Z/Q (primitive associate,
// returned in f's ring).
Poly squarefree_part(const Poly &f);

// Independent re-check of a verdict's certificate. subject is a polynomial
// element or a quadratic integer.
bool verify_certificate(const Element &subject, const IrreducibilityVerdict &verdict);
bool verify_certificate(const Poly &f, const IrreducibilityVerdict &verdict);

} // namespace ringkit

#endif

#ifndef RINGKIT_RING_HPP
#define RINGKIT_RING_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <ringkit/errors.hpp>
#include <ringkit/integer.hpp>

namespace ringkit
{

// Every element lives in exactly one ring context. Contexts are runtime
// values so that arbitrary towers (Poly over Quot over Fp, ...) can be
// assembled from text.
enum class Kind {
    Integers,
    Rationals,
    Mod,
    QuadInt,
    QuadField,
    Quaternions,
    Poly,
    MultiPoly,
    Series,
    Frac,
    Quotient,
    Matrix,
    Product,
};

class Element;

namespace detail
{
struct RingData;
}

class Ring
{
public:
    // The ring of integers.
    Ring();

    static Ring integers();
    static Ring rationals();
    // Z/(n), n >= 1. Mod(1) is the zero ring.
    static Ring mod(const Integer &n);
    // Z[sqrt d] and Q(sqrt d); d squarefree, d != 1.
    static Ring quad_int(std::int64_t d);
    static Ring quad_field(std::int64_t d);
    static Ring quaternions();
    static Ring poly(const Ring &base);
    static Ring multipoly(const Ring &base);
    static Ring series(const Ring &base, std::size_t precision);
    // Requires an integral domain.
    static Ring frac(const Ring &base);
    // base/(modulus) for the Euclidean bases Z, k[x] and Z[i].
    static Ring quotient(const Ring &base, const Element &modulus);
    static Ring matrix(const Ring &base, std::size_t n);
    static Ring product(std::vector<Ring> components);

    Kind kind() const noexcept;
    const Integer &modulus() const;
    std::int64_t quad_d() const;
    std::size_t precision() const;
    std::size_t dim() const;
    const Ring &base() const;
    const std::vector<Ring> &components() const;
    const Element &quotient_modulus() const;

    // Capability flags; is_field => is_euclidean => is_gcd_domain =>
    // is_domain => is_commutative.
    bool is_commutative() const noexcept;
    bool is_domain() const noexcept;
    bool is_gcd_domain() const noexcept;
    bool is_euclidean() const noexcept;
    bool is_field() const noexcept;
    bool is_finite() const noexcept;

    // Context literal, e.g. "Poly(Fp:7)".
    std::string to_string() const;

    friend bool operator==(const Ring &a, const Ring &b);

private:
    explicit Ring(std::shared_ptr<const detail::RingData> data);

    std::shared_ptr<const detail::RingData> data_;
};

struct Quad {
    Rational a, b; // a + b*sqrt(d)
};

struct Quat {
    Rational a, b, c, d; // a + b*i + c*j + d*k
};

// x1^e1 * ... * xn^en with variables kept sorted by name and no zero
// exponents stored.
class Monomial
{
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);
    static Monomial variable(std::string name, unsigned exponent = 1);

    const std::vector<Factor> &factors() const noexcept { return factors_; }
    unsigned total_degree() const noexcept;
    unsigned degree_in(const std::string &var) const noexcept;
    bool is_one() const noexcept { return factors_.empty(); }

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &a, const Monomial &b) = default;

private:
    std::vector<Factor> factors_;
};

// Graded-lex: higher total degree first, ties broken lexicographically with
// variable names ordered x > y > z (alphabetically earlier is larger).
bool grlex_greater(const Monomial &a, const Monomial &b);

struct Terms {
    // Parallel arrays sorted grlex-descending; coefficients nonzero.
    std::vector<Monomial> monomials;
    std::vector<Element> coeffs;
};

class Element
{
public:
    using Items = std::vector<Element>;
    // Integer: Z and Mod residues. Rational: Q. Quad: QuadInt/QuadField.
    // Quat: H. Items: Poly coefficients (ascending), Series coefficients,
    // Frac [num, den], Quotient [rep], Matrix entries (row-major), Product
    // components. Terms: MultiPoly.
    using Payload = std::variant<Integer, Rational, Quad, Quat, Items, Terms>;

    // Zero of Z.
    Element();
    // Brings the payload into canonical form for the ring.
    Element(Ring ring, Payload value);

    // Skips canonicalization; the caller guarantees canonical form.
    static Element raw(Ring ring, Payload value);

    const Ring &ring() const noexcept { return ring_; }
    const Payload &payload() const noexcept { return value_; }

    const Integer &integer() const;
    const Rational &rational() const;
    const Quad &quad() const;
    const Quat &quat() const;
    const Items &items() const;
    const Terms &terms() const;

private:
    Ring ring_;
    Payload value_;
};

Element zero(const Ring &r);
Element one(const Ring &r);
// n * 1 in r.
Element from_integer(const Ring &r, const Integer &n);
inline Element from_integer(const Ring &r, long n) { return from_integer(r, Integer(n)); }

Element add(const Element &a, const Element &b);
Element sub(const Element &a, const Element &b);
Element neg(const Element &a);
Element mul(const Element &a, const Element &b);

bool equal(const Element &a, const Element &b);
bool is_zero(const Element &a);
bool is_one(const Element &a);

bool is_unit(const Element &a);
// Throws NotInvertible / NotAUnit / DivisionByZero.
Element inverse(const Element &a);
// a * b^{-1} when b is a unit, otherwise exact division in the Euclidean
// instances; throws when the quotient does not exist.
Element divide(const Element &a, const Element &b);

// c viewed in target, where target is built from c's ring by Poly, MPoly,
// Series, Frac, Quot and Mat layers (constants, scalar matrices) or is a
// product whose components all accept c. Throws ContextMismatch.
Element lift(const Element &c, const Ring &target);

// Throws ContextMismatch unless a and b share a ring.
void require_same_ring(const Element &a, const Element &b);

inline Element operator+(const Element &a, const Element &b) { return add(a, b); }
inline Element operator-(const Element &a, const Element &b) { return sub(a, b); }
inline Element operator-(const Element &a) { return neg(a); }
inline Element operator*(const Element &a, const Element &b) { return mul(a, b); }
inline bool operator==(const Element &a, const Element &b) { return equal(a, b); }

// Literal form of the element (see literal.hpp).
std::string to_string(const Element &a);
std::ostream &operator<<(std::ostream &os, const Element &a);
std::ostream &operator<<(std::ostream &os, const Ring &r);

} // namespace ringkit

#endif

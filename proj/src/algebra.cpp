#include <ringkit/algebra.hpp>

#include <algorithm>
#include <map>

#include <ringkit/euclid.hpp>
#include <ringkit/number_rings.hpp>
#include <ringkit/poly.hpp>
#include <ringkit/quotient.hpp>

namespace ringkit
{

Element pow(const Element &a, std::uint64_t n)
{
    Element result = one(a.ring());
    Element b = a;
    while (n) {
        if (n & 1U) {
            result = result * b;
        }
        n >>= 1U;
        if (n) {
            b = b * b;
        }
    }
    return result;
}

Element pow(const Element &a, const Integer &n)
{
    if (n < 0) {
        return pow(inverse(a), Integer(-n));
    }
    Element result = one(a.ring());
    Element b = a;
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(n.get_mpz_t(), i)) {
            result = result * b;
        }
        if (i + 1 < bits) {
            b = b * b;
        }
    }
    return result;
}

Element int_scale(const Integer &n, const Element &a)
{
    if (n < 0) {
        return -int_scale(Integer(-n), a);
    }
    Element result = zero(a.ring());
    Element b = a;
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits && n != 0; ++i) {
        if (mpz_tstbit(n.get_mpz_t(), i)) {
            result = result + b;
        }
        if (i + 1 < bits) {
            b = b + b;
        }
    }
    return result;
}

Integer characteristic(const Ring &r)
{
    switch (r.kind()) {
    case Kind::Mod:
        return r.modulus();
    case Kind::Integers:
    case Kind::Rationals:
    case Kind::QuadInt:
    case Kind::QuadField:
    case Kind::Quaternions:
        return 0;
    case Kind::Poly:
    case Kind::MultiPoly:
    case Kind::Series:
    case Kind::Frac:
    case Kind::Matrix:
        return characteristic(r.base());
    case Kind::Quotient: {
        const Element &m = r.quotient_modulus();
        switch (r.base().kind()) {
        case Kind::Integers:
            return abs(m.integer());
        case Kind::QuadInt: {
            // (m) meets Z in N(m)/g Z, g the content of m.
            Integer g = gcd(m.quad().a.get_num(), m.quad().b.get_num());
            return abs(quad_norm_int(m)) / g;
        }
        default:
            return characteristic(r.base().base());
        }
    }
    case Kind::Product: {
        Integer c = 1;
        for (const auto &comp : r.components()) {
            Integer k = characteristic(comp);
            if (k == 0) {
                return 0;
            }
            c = lcm(c, k);
        }
        return c;
    }
    }
    return 0;
}

Element frobenius(const Element &a)
{
    Integer p = characteristic(a.ring());
    if (!a.ring().is_commutative() || p == 0 || !is_prime(p)) {
        throw MathError(Errc::NotPrimeCharacteristic, "char=" + to_string(p));
    }
    return pow(a, p);
}

std::optional<Integer> cardinality(const Ring &r)
{
    switch (r.kind()) {
    case Kind::Mod:
        return r.modulus();
    case Kind::Quotient:
        return q_cardinality(r);
    case Kind::Frac:
        return r.is_finite() ? cardinality(r.base()) : std::nullopt;
    case Kind::Series:
    case Kind::Matrix: {
        auto b = cardinality(r.base());
        if (!b) {
            return std::nullopt;
        }
        unsigned long e = r.kind() == Kind::Series ? r.precision() : r.dim() * r.dim();
        Integer n;
        mpz_pow_ui(n.get_mpz_t(), b->get_mpz_t(), e);
        return n;
    }
    case Kind::Product: {
        Integer n = 1;
        for (const auto &c : r.components()) {
            auto k = cardinality(c);
            if (!k) {
                return std::nullopt;
            }
            n *= *k;
        }
        return n;
    }
    default:
        return std::nullopt;
    }
}

namespace
{

// Every tuple drawn from the given lists; the first position varies slowest.
std::vector<std::vector<Element>> tuples(const std::vector<std::vector<Element>> &lists)
{
    std::vector<std::vector<Element>> out{{}};
    for (const auto &list : lists) {
        std::vector<std::vector<Element>> next;
        next.reserve(out.size() * list.size());
        for (const auto &prefix : out) {
            for (const auto &e : list) {
                next.push_back(prefix);
                next.back().push_back(e);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Element> enumerate_gaussian_quotient(const Ring &r)
{
    const Ring &base = r.base();
    const Element &m = r.quotient_modulus();
    Integer bound = isqrt(abs(quad_norm_int(m))) + 1;
    std::map<std::pair<Integer, Integer>, Element> seen;
    for (Integer a = -bound; a <= bound; ++a) {
        for (Integer b = -bound; b <= bound; ++b) {
            Element rep = canonical_remainder(quad_make(base, Rational(a), Rational(b)), m);
            std::pair<Integer, Integer> key{rep.quad().a.get_num(), rep.quad().b.get_num()};
            seen.emplace(std::move(key), rep);
        }
    }
    std::vector<Element> out;
    for (auto &[k, rep] : seen) {
        out.push_back(Element::raw(r, Element::Items{rep}));
    }
    return out;
}

} // namespace

std::vector<Element> enumerate(const Ring &r)
{
    auto n = cardinality(r);
    if (!r.is_finite() || !n) {
        throw MathError(Errc::InfiniteRing, r.to_string());
    }
    if (*n > kEnumerationCap) {
        throw MathError(Errc::TooLarge, r.to_string() + " has " + to_string(*n) + " elements");
    }
    std::vector<Element> out;
    switch (r.kind()) {
    case Kind::Mod:
        for (Integer i = 0; i < *n; ++i) {
            out.push_back(Element::raw(r, i));
        }
        return out;
    case Kind::Frac:
        for (const auto &a : enumerate(r.base())) {
            out.push_back(Element(r, Element::Items{a, one(r.base())}));
        }
        return out;
    case Kind::Quotient: {
        const Ring &base = r.base();
        if (base.kind() == Kind::Integers) {
            for (Integer i = 0; i < *n; ++i) {
                out.push_back(Element::raw(r, Element::Items{Element::raw(base, i)}));
            }
            return out;
        }
        if (base.kind() == Kind::QuadInt) {
            return enumerate_gaussian_quotient(r);
        }
        // Remainders of degree < deg m, counting with c0 least significant.
        std::size_t d = Poly::from_element(r.quotient_modulus()).degree().value();
        std::vector<std::vector<Element>> lists(d, enumerate(base.base()));
        for (auto &t : tuples(lists)) {
            std::reverse(t.begin(), t.end());
            out.push_back(Element::raw(r, Element::Items{Poly(base.base(), std::move(t)).to_element(base)}));
        }
        return out;
    }
    case Kind::Series:
    case Kind::Matrix: {
        std::size_t len = r.kind() == Kind::Series ? r.precision() : r.dim() * r.dim();
        std::vector<std::vector<Element>> lists(len, enumerate(r.base()));
        for (auto &t : tuples(lists)) {
            out.push_back(Element::raw(r, std::move(t)));
        }
        return out;
    }
    case Kind::Product: {
        std::vector<std::vector<Element>> lists;
        for (const auto &c : r.components()) {
            lists.push_back(enumerate(c));
        }
        for (auto &t : tuples(lists)) {
            out.push_back(Element::raw(r, std::move(t)));
        }
        return out;
    }
    default:
        throw MathError(Errc::InfiniteRing, r.to_string());
    }
}

bool is_nilpotent(const Element &a)
{
    const Ring &r = a.ring();
    if (r.is_domain() || r.kind() == Kind::Quaternions) {
        return is_zero(a);
    }
    auto bits = [](const Integer &n) {
        return static_cast<std::uint64_t>(mpz_sizeinbase(n.get_mpz_t(), 2));
    };
    switch (r.kind()) {
    case Kind::Mod:
        // Every prime exponent of n is below its bit length.
        return is_zero(pow(a, bits(r.modulus())));
    case Kind::Quotient: {
        const Element &m = r.quotient_modulus();
        std::uint64_t bound = 0;
        switch (r.base().kind()) {
        case Kind::Integers:
            bound = bits(m.integer());
            break;
        case Kind::QuadInt:
            bound = bits(quad_norm_int(m));
            break;
        default:
            bound = Poly::from_element(m).degree().value();
        }
        return is_zero(pow(a, std::max<std::uint64_t>(bound, 1)));
    }
    case Kind::Poly:
    case Kind::Series:
    case Kind::Product:
        return std::all_of(a.items().begin(), a.items().end(), [](const Element &c) {
            return is_nilpotent(c);
        });
    case Kind::MultiPoly:
        return std::all_of(a.terms().coeffs.begin(), a.terms().coeffs.end(), [](const Element &c) {
            return is_nilpotent(c);
        });
    case Kind::Matrix:
        if (r.base().is_domain()) {
            return is_zero(pow(a, static_cast<std::uint64_t>(r.dim())));
        }
        break;
    default:
        break;
    }
    if (auto n = cardinality(r)) {
        // The nilpotency index never exceeds |R|.
        Element p = a;
        for (std::uint64_t i = 0; i < bits(*n); ++i) {
            p = p * p;
        }
        return is_zero(p);
    }
    throw MathError(Errc::Unsupported, "nilpotency in " + r.to_string());
}

bool is_idempotent(const Element &a)
{
    return a * a == a;
}

namespace
{

bool is_zero_divisor(const Element &a, const std::vector<Element> &all)
{
    if (is_zero(a)) {
        return false;
    }
    return std::any_of(all.begin(), all.end(), [&](const Element &b) {
        return !is_zero(b) && (is_zero(a * b) || is_zero(b * a));
    });
}

} // namespace

Classification classify(const Ring &r)
{
    std::vector<Element> all = enumerate(r);
    Classification c;
    bool trivial = is_one(zero(r));
    for (const auto &a : all) {
        if (!trivial && is_unit(a)) {
            c.units.push_back(a);
        } else if (is_zero_divisor(a, all)) {
            c.zero_divisors.push_back(a);
        }
        if (is_nilpotent(a)) {
            c.nilpotents.push_back(a);
        }
        if (is_idempotent(a)) {
            c.idempotents.push_back(a);
        }
    }
    return c;
}

std::vector<Element> units(const Ring &r)
{
    std::vector<Element> out;
    if (is_one(zero(r))) {
        return out;
    }
    for (const auto &a : enumerate(r)) {
        if (is_unit(a)) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<Element> zero_divisors(const Ring &r)
{
    std::vector<Element> all = enumerate(r);
    std::vector<Element> out;
    bool trivial = is_one(zero(r));
    for (const auto &a : all) {
        if ((trivial || !is_unit(a)) && is_zero_divisor(a, all)) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<Element> nilpotents(const Ring &r)
{
    std::vector<Element> out;
    for (const auto &a : enumerate(r)) {
        if (is_nilpotent(a)) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<Element> idempotents(const Ring &r)
{
    std::vector<Element> out;
    for (const auto &a : enumerate(r)) {
        if (is_idempotent(a)) {
            out.push_back(a);
        }
    }
    return out;
}

Ring product_ring(std::vector<Ring> rings)
{
    return Ring::product(std::move(rings));
}

} // namespace ringkit

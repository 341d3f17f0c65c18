#ifndef RINGKIT_TESTS_SUPPORT_HPP
#define RINGKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <ringkit/algebra.hpp>
#include <ringkit/literal.hpp>
#include <ringkit/number_rings.hpp>
#include <ringkit/poly.hpp>
#include <ringkit/quotient.hpp>
#include <ringkit/ring.hpp>

namespace support
{

using namespace ringkit;

inline Ring R(const std::string &s)
{
    return parse_ring(s);
}

inline Element E(const Ring &r, const std::string &s)
{
    return parse_element(r, s);
}

inline Element E(const std::string &ring, const std::string &s)
{
    return parse_element(parse_ring(ring), s);
}

inline Poly P(const std::string &ring, const std::string &s)
{
    Ring r = parse_ring(ring);
    if (r.kind() != Kind::Poly) {
        r = Ring::poly(r);
    }
    return Poly::from_element(parse_element(r, s));
}

inline std::mt19937_64 &rng()
{
    static std::mt19937_64 g(0x5eed2026ULL);
    return g;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Integer random_integer(long bound)
{
    return Integer(uniform(-bound, bound));
}

inline Rational random_rational(long bound)
{
    Rational q(random_integer(bound), Integer(uniform(1, bound)));
    q.canonicalize();
    return q;
}

// A random element with small entries; `size` bounds integers, degrees and
// precisions of the layers below.
inline Element random_element(const Ring &r, long size = 9)
{
    switch (r.kind()) {
    case Kind::Integers:
        return Element(r, random_integer(size));
    case Kind::Rationals:
        return Element(r, random_rational(size));
    case Kind::Mod:
        return Element(r, Integer(Integer(uniform(0, 1L << 30)) % r.modulus()));
    case Kind::QuadInt:
        return quad_make(r, Rational(random_integer(size)), Rational(random_integer(size)));
    case Kind::QuadField:
        return quad_make(r, random_rational(size), random_rational(size));
    case Kind::Quaternions:
        return quat_make(random_rational(size), random_rational(size), random_rational(size), random_rational(size));
    case Kind::Poly: {
        std::vector<Element> c;
        long deg = uniform(-1, 4);
        for (long i = 0; i <= deg; ++i) {
            c.push_back(random_element(r.base(), size));
        }
        return Poly(r.base(), std::move(c)).to_element(r);
    }
    case Kind::Series:
    case Kind::Matrix:
    case Kind::Product: {
        Element::Items items;
        if (r.kind() == Kind::Product) {
            for (const auto &c : r.components()) {
                items.push_back(random_element(c, size));
            }
        } else {
            std::size_t n = r.kind() == Kind::Series ? r.precision() : r.dim() * r.dim();
            for (std::size_t i = 0; i < n; ++i) {
                items.push_back(random_element(r.base(), size));
            }
        }
        return Element(r, std::move(items));
    }
    case Kind::Frac: {
        Element den = random_element(r.base(), size);
        while (is_zero(den)) {
            den = random_element(r.base(), size);
        }
        return Element(r, Element::Items{random_element(r.base(), size), den});
    }
    case Kind::Quotient:
        return Element(r, Element::Items{random_element(r.base(), size)});
    case Kind::MultiPoly: {
        static const char *const vars[] = {"x", "y", "z"};
        Element s = zero(r);
        long terms = uniform(0, 4);
        for (long t = 0; t < terms; ++t) {
            Element m = lift(random_element(r.base(), size), r);
            for (const char *v : vars) {
                long e = uniform(0, 2);
                for (long k = 0; k < e; ++k) {
                    m = m * parse_element(r, v);
                }
            }
            s = s + m;
        }
        return s;
    }
    }
    return zero(r);
}

inline Element random_nonzero(const Ring &r, long size = 9)
{
    Element a = random_element(r, size);
    while (is_zero(a)) {
        a = random_element(r, size);
    }
    return a;
}

} // namespace support

#endif

#include <ringkit/quotient.hpp>

#include <algorithm>
#include <set>

#include <ringkit/algebra.hpp>
#include <ringkit/euclid.hpp>
#include <ringkit/literal.hpp>
#include <ringkit/number_rings.hpp>
#include <ringkit/poly.hpp>

namespace ringkit
{

namespace
{

void require_quotient(const Element &a)
{
    if (a.ring().kind() != Kind::Quotient) {
        throw MathError(Errc::ContextMismatch, "quotient element expected, got " + a.ring().to_string());
    }
}

} // namespace

Element q_reduce(const Ring &quot, const Element &x)
{
    return Element(quot, Element::Items{x});
}

Element q_add(const Element &a, const Element &b)
{
    require_quotient(a);
    return add(a, b);
}

Element q_mul(const Element &a, const Element &b)
{
    require_quotient(a);
    return mul(a, b);
}

const Element &q_rep(const Element &coset)
{
    require_quotient(coset);
    return coset.items().front();
}

bool q_is_unit(const Element &a)
{
    return is_unit(euclid_gcd(q_rep(a), a.ring().quotient_modulus()));
}

Element q_inverse(const Element &a)
{
    const Element &m = a.ring().quotient_modulus();
    BezoutCert c = extended_gcd(q_rep(a), m);
    if (!is_unit(c.g)) {
        throw MathError(Errc::NotInvertible, "gcd=" + format(c.g));
    }
    return q_reduce(a.ring(), c.x * inverse(c.g));
}

std::optional<Integer> q_cardinality(const Ring &quot)
{
    if (quot.kind() != Kind::Quotient) {
        throw MathError(Errc::ContextMismatch, "quotient ring expected, got " + quot.to_string());
    }
    const Element &m = quot.quotient_modulus();
    switch (quot.base().kind()) {
    case Kind::Integers:
        return abs(m.integer());
    case Kind::QuadInt:
        return abs(quad_norm_int(m));
    case Kind::Poly: {
        auto k = cardinality(quot.base().base());
        if (!k) {
            return std::nullopt;
        }
        Integer n;
        mpz_pow_ui(n.get_mpz_t(), k->get_mpz_t(), Poly::from_element(m).degree().value());
        return n;
    }
    default:
        return std::nullopt;
    }
}

bool iso_check_crt(const Integer &n, const std::vector<Integer> &factors)
{
    Integer prod = 1;
    for (const auto &m : factors) {
        prod *= m;
    }
    if (factors.empty() || prod != n) {
        throw MathError(Errc::FactorsMismatch, "product " + to_string(prod) + " != " + to_string(n));
    }
    if (n > 10000) {
        throw MathError(Errc::TooLarge, to_string(n));
    }
    if (n < 1 || std::any_of(factors.begin(), factors.end(), [](const Integer &m) {
            return m < 1;
        })) {
        throw MathError(Errc::InvalidParameters, "moduli must be positive");
    }
    const long nn = n.get_si();
    std::vector<long> ms;
    for (const auto &m : factors) {
        ms.push_back(m.get_si());
    }
    auto image = [&](long r) {
        std::vector<long> v;
        for (long m : ms) {
            v.push_back(r % m);
        }
        return v;
    };

    std::set<std::vector<long>> seen;
    for (long r = 0; r < nn; ++r) {
        if (!seen.insert(image(r)).second) {
            return false;
        }
    }

    // Homomorphism on all pairs for small n, otherwise against every b below
    // a fixed budget.
    const long bmax = nn <= 2000 ? nn : 128;
    for (long a = 0; a < nn; ++a) {
        for (long b = 0; b < bmax; ++b) {
            for (long m : ms) {
                long s = ((a + b) % nn) % m;
                long p = ((a * b) % nn) % m;
                if (s != (a % m + b % m) % m || p != ((a % m) * (b % m)) % m) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<IdealEntry> ideal_divisor_lattice(const Integer &n)
{
    if (n < 1) {
        throw MathError(Errc::InvalidParameters, "n must be positive");
    }
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    std::vector<IdealEntry> out;
    for (const auto &d : small) {
        bool p = is_prime(d);
        out.push_back({d, p, p});
    }
    return out;
}

} // namespace ringkit

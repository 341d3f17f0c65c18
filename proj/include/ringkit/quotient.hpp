#ifndef RINGKIT_QUOTIENT_HPP
#define RINGKIT_QUOTIENT_HPP

#include <optional>
#include <vector>

#include <ringkit/ring.hpp>

namespace ringkit
{

// Coset of x in quot = base/(m), represented by the canonical remainder.
Element q_reduce(const Ring &quot, const Element &x);
Element q_add(const Element &a, const Element &b);
Element q_mul(const Element &a, const Element &b);
// Coset representative as an element of the base ring.
const Element &q_rep(const Element &coset);

bool q_is_unit(const Element &a);
// Throws NotInvertible carrying gcd(rep, modulus).
Element q_inverse(const Element &a);

// Number of cosets; nullopt when infinite.
std::optional<Integer> q_cardinality(const Ring &quot);

// Checks by enumeration that r -> (r mod m_1, ..., r mod m_k) is a bijective
// ring homomorphism Z_n -> Z_{m_1} x ... x Z_{m_k}. Throws FactorsMismatch
// when the product differs from n, TooLarge beyond n = 10^4.
bool iso_check_crt(const Integer &n, const std::vector<Integer> &factors);

struct IdealEntry {
    Integer divisor;
    bool is_prime;
    bool is_maximal;
};

// The ideals (d) of Z_n, one per positive divisor d of n in ascending order.
std::vector<IdealEntry> ideal_divisor_lattice(const Integer &n);

} // namespace ringkit

#endif

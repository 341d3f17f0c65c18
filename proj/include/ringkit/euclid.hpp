#ifndef RINGKIT_EUCLID_HPP
#define RINGKIT_EUCLID_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <ringkit/ring.hpp>

namespace ringkit
{

// The Euclidean instances with an implemented division: Z (absolute value),
// k[x] over a field (degree) and Z[i] (norm).
bool is_euclidean_instance(const Ring &r);

struct EuclideanDivision {
    Element q;
    Element r;
};

// a = q*b + r with r = 0 or size(r) < size(b). The remainder is the
// canonical coset representative: [0, |b|) in Z, deg r < deg b in k[x],
// nearest-integer rounding (ties up) in Z[i]. Throws DivisionByZero.
EuclideanDivision euclid_divmod(const Element &a, const Element &b);
Element canonical_remainder(const Element &a, const Element &m);

// Unit u such that u*a is the canonical associate of a (nonnegative /
// monic / real part > 0 and imaginary part >= 0). One for a = 0.
Element normalizing_unit(const Element &a);
Element canonical_associate(const Element &a);

bool divides(const Element &a, const Element &b);
bool are_associates(const Element &a, const Element &b);

// Remainder sequence a, b, r1, r2, ..., ending in 0.
std::vector<Element> remainder_sequence(const Element &a, const Element &b);

Element euclid_gcd(const Element &a, const Element &b);

struct BezoutCert {
    Element g; // canonical gcd
    Element x;
    Element y; // g = a*x + b*y
};

BezoutCert extended_gcd(const Element &a, const Element &b);
Element euclid_lcm(const Element &a, const Element &b);

// Pairwise unit gcds.
bool are_comaximal(const std::vector<Element> &moduli);

struct Congruence {
    Element residue;
    Element modulus;
};

struct CrtSolution {
    Element x;       // canonical representative modulo `modulus`
    Element modulus; // product of the moduli
};

// Throws NotComaximal (first offending pair and their gcd), EmptySystem.
CrtSolution crt_solve(const std::vector<Congruence> &system);

// e_k = prod_{j != k} t_j with t_j in (m_j), t_j = 1 mod m_k, reduced
// modulo the product of the moduli.
std::vector<Element> crt_idempotents(const std::vector<Element> &moduli);

} // namespace ringkit

#endif

#ifndef RINGKIT_NUMBER_RINGS_HPP
#define RINGKIT_NUMBER_RINGS_HPP

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include <ringkit/ring.hpp>

namespace ringkit
{

// ---- residues -------------------------------------------------------------

// Inverse in Z_n via extended Euclid; throws NotInvertible with the gcd.
Element mod_inv(const Element &x);
// x * y^{-1} in F_p; throws DivisionByZero, NotAField.
Element field_div(const Element &x, const Element &y);

// Number of units of Z_n, from the prime factorization of n.
Integer euler_phi(const Integer &n);

// ---- quadratic rings ------------------------------------------------------

Element quad_make(const Ring &r, const Rational &a, const Rational &b);
Element quad_conj(const Element &x);
// a^2 - b^2 d
Rational quad_norm(const Element &x);
// Norm of an element of Z[sqrt d].
Integer quad_norm_int(const Element &x);

bool quad_is_unit(const Element &x);
// conj(x) / N(x); throws NotAUnit.
Element quad_inverse(const Element &x);

// Units of Z[sqrt d], d < 0, in the order 1, -1, then the rest ascending.
std::vector<Element> imaginary_unit_group(std::int64_t d);

// Smallest unit a + b sqrt d > 1 with a, b in [0, bound].
std::optional<Element> fundamental_unit_search(std::int64_t d, std::uint64_t bound);

// Exact comparison of real quadratic numbers (d > 0): -1, 0, 1.
int quad_compare(const Element &x, const Element &y);

struct GaussianDivision {
    Element q;
    Element r;
};

// a = q*b + r, q = a/b rounded componentwise to the nearest integer (ties
// up), so N(r) < N(b). Throws DivisionByZero.
GaussianDivision gaussian_divmod(const Element &a, const Element &b);

// a + b i with a^2 + b^2 = p, 0 < a and 0 <= b, by search over a <= sqrt p.
std::optional<Element> sum_of_two_squares(const Integer &p);

// Exact divisibility x | y in Z[sqrt d].
bool quad_divides(const Element &x, const Element &y);
bool quad_associates(const Element &x, const Element &y);
// d < 0: irreducible iff non-unit, nonzero and no element with norm strictly
// between 1 and N(x) divides x.
bool quad_irreducible_by_norm(const Element &x);

// ---- quaternions ----------------------------------------------------------

Element quat_make(const Rational &a, const Rational &b, const Rational &c, const Rational &d);
Element quat_mul(const Element &x, const Element &y);
Element quat_conj(const Element &q);
Rational quat_norm_sq(const Element &q);
// conj(q) / |q|^2; throws DivisionByZero.
Element quat_inverse(const Element &q);

// (m^2 - n^2, 2mn, m^2 + n^2); throws InvalidParameters unless m > n > 0.
std::tuple<Integer, Integer, Integer> pythagorean_triple(const Integer &m, const Integer &n);

} // namespace ringkit

#endif

#ifndef RINGKIT_INTEGER_HPP
#define RINGKIT_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ringkit
{

using Integer = mpz_class;
using Rational = mpq_class;

// Least nonnegative residue of a modulo |n|.
Integer mod_floor(const Integer &a, const Integer &n);
// Quotient rounded towards -infinity.
Integer floor_div(const Integer &a, const Integer &b);
// floor(q + 1/2): nearest integer, ties rounded up.
Integer round_nearest(const Rational &q);

Integer gcd(const Integer &a, const Integer &b);
Integer lcm(const Integer &a, const Integer &b);
Integer isqrt(const Integer &n);

bool is_prime(const Integer &n);
bool is_squarefree(std::int64_t d);
// Primes p <= bound in ascending order.
std::vector<Integer> primes_up_to(std::uint64_t bound);

std::string to_string(const Integer &n);
std::string to_string(const Rational &q);
Integer parse_integer(std::string_view text);

Rational make_rational(const Integer &num, const Integer &den);
bool is_integral(const Rational &q);

} // namespace ringkit

#endif

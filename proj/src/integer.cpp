#include <ringkit/integer.hpp>

#include <cctype>
#include <cstdlib>

#include <ringkit/errors.hpp>

namespace ringkit
{

Integer mod_floor(const Integer &a, const Integer &n)
{
    Integer r;
    Integer m = abs(n);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer floor_div(const Integer &a, const Integer &b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer round_nearest(const Rational &q)
{
    // floor((2*num + den) / (2*den)) with den > 0
    Integer num = 2 * q.get_num() + q.get_den();
    Integer den = 2 * q.get_den();
    return floor_div(num, den);
}

Integer gcd(const Integer &a, const Integer &b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer &a, const Integer &b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer isqrt(const Integer &n)
{
    if (sgn(n) < 0) {
        throw MathError(Errc::InvalidParameters, "isqrt of negative");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_prime(const Integer &n)
{
    if (n < 2) {
        return false;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_squarefree(std::int64_t d)
{
    if (d == 0) {
        return false;
    }
    std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Integer> primes_up_to(std::uint64_t bound)
{
    std::vector<Integer> out;
    if (bound < 2) {
        return out;
    }
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p]) {
            continue;
        }
        out.emplace_back(static_cast<unsigned long>(p));
        for (std::uint64_t q = p * p; q <= bound; q += p) {
            composite[q] = true;
        }
    }
    return out;
}

std::string to_string(const Integer &n)
{
    return n.get_str();
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        throw ParseError("expected integer, got '" + std::string(text) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("expected integer, got '" + std::string(text) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw MathError(Errc::DivisionByZero);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace ringkit

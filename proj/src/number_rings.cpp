#include <ringkit/number_rings.hpp>

#include <algorithm>

#include <ringkit/factor.hpp>
#include <ringkit/literal.hpp>

namespace ringkit
{

namespace
{

Ring quaternion_ring()
{
    static const Ring h = Ring::quaternions();
    return h;
}

void require_kind(const Element &x, Kind k, const char *what)
{
    if (x.ring().kind() != k) {
        throw MathError(Errc::ContextMismatch, std::string(what) + " expected, got " + x.ring().to_string());
    }
}

void require_quad(const Element &x)
{
    if (x.ring().kind() != Kind::QuadInt && x.ring().kind() != Kind::QuadField) {
        throw MathError(Errc::ContextMismatch, "quadratic element expected, got " + x.ring().to_string());
    }
}

bool is_square(const Integer &n, Integer &root)
{
    if (n < 0) {
        return false;
    }
    root = isqrt(n);
    return root * root == n;
}

} // namespace

// ---- residues -------------------------------------------------------------

Element mod_inv(const Element &x)
{
    require_kind(x, Kind::Mod, "residue");
    const Integer &n = x.ring().modulus();
    Integer g = gcd(x.integer(), n);
    if (g != 1) {
        throw MathError(Errc::NotInvertible, "gcd=" + to_string(g));
    }
    if (n == 1) {
        return x;
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), x.integer().get_mpz_t(), n.get_mpz_t());
    return Element::raw(x.ring(), std::move(inv));
}

Element field_div(const Element &x, const Element &y)
{
    require_same_ring(x, y);
    require_kind(x, Kind::Mod, "residue");
    if (!x.ring().is_field()) {
        throw MathError(Errc::NotAField, x.ring().to_string());
    }
    if (is_zero(y)) {
        throw MathError(Errc::DivisionByZero);
    }
    return x * mod_inv(y);
}

Integer euler_phi(const Integer &n)
{
    if (n < 1) {
        throw MathError(Errc::InvalidParameters, "phi of " + to_string(n));
    }
    if (n == 1) {
        return 1;
    }
    Integer phi = 1;
    for (const auto &[p, e] : factor_integer(n).factors) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.integer().get_mpz_t(), e - 1);
        phi *= pk * (p.integer() - 1);
    }
    return phi;
}

// ---- quadratic rings ------------------------------------------------------

Element quad_make(const Ring &r, const Rational &a, const Rational &b)
{
    return Element(r, Quad{a, b});
}

Element quad_conj(const Element &x)
{
    require_quad(x);
    return Element::raw(x.ring(), Quad{x.quad().a, -x.quad().b});
}

Rational quad_norm(const Element &x)
{
    require_quad(x);
    const Quad &q = x.quad();
    return q.a * q.a - Rational(x.ring().quad_d()) * q.b * q.b;
}

Integer quad_norm_int(const Element &x)
{
    Rational n = quad_norm(x);
    if (!is_integral(n)) {
        throw MathError(Errc::InvalidParameters, "non-integral norm " + to_string(n));
    }
    return n.get_num();
}

bool quad_is_unit(const Element &x)
{
    require_quad(x);
    if (x.ring().kind() == Kind::QuadField) {
        return !is_zero(x);
    }
    return abs(quad_norm_int(x)) == 1;
}

Element quad_inverse(const Element &x)
{
    require_quad(x);
    if (is_zero(x)) {
        throw MathError(x.ring().kind() == Kind::QuadField ? Errc::DivisionByZero : Errc::NotAUnit, "0");
    }
    if (!quad_is_unit(x)) {
        throw MathError(Errc::NotAUnit, format(x));
    }
    Rational n = quad_norm(x);
    const Quad &q = x.quad();
    return Element::raw(x.ring(), Quad{q.a / n, -q.b / n});
}

std::vector<Element> imaginary_unit_group(std::int64_t d)
{
    if (d >= 0) {
        throw MathError(Errc::InvalidParameters, "imaginary unit group needs d < 0");
    }
    Ring r = Ring::quad_int(d);
    std::vector<Element> units{quad_make(r, 1, 0), quad_make(r, -1, 0)};
    if (d == -1) {
        units.push_back(quad_make(r, 0, -1));
        units.push_back(quad_make(r, 0, 1));
    }
    return units;
}

std::optional<Element> fundamental_unit_search(std::int64_t d, std::uint64_t bound)
{
    if (d <= 1) {
        throw MathError(Errc::InvalidParameters, "fundamental unit needs d > 1");
    }
    Ring r = Ring::quad_int(d);
    // Units above 1 are powers of the fundamental one, so the least b wins.
    for (std::uint64_t b = 1; b <= bound; ++b) {
        Integer db2 = Integer(static_cast<long>(d)) * Integer(static_cast<unsigned long>(b)) *
                      Integer(static_cast<unsigned long>(b));
        Integer a;
        for (int sign : {-1, 1}) {
            if (is_square(db2 + sign, a) && a <= Integer(static_cast<unsigned long>(bound))) {
                return quad_make(r, Rational(a), Rational(static_cast<unsigned long>(b)));
            }
        }
    }
    return std::nullopt;
}

int quad_compare(const Element &x, const Element &y)
{
    require_same_ring(x, y);
    require_quad(x);
    if (x.ring().quad_d() < 0) {
        throw MathError(Errc::Unsupported, "order on " + x.ring().to_string());
    }
    Rational a = x.quad().a - y.quad().a;
    Rational b = x.quad().b - y.quad().b;
    int sa = sgn(a);
    int sb = sgn(b);
    if (sa >= 0 && sb >= 0) {
        return (sa || sb) ? 1 : 0;
    }
    if (sa <= 0 && sb <= 0) {
        return -1;
    }
    Rational diff = a * a - Rational(x.ring().quad_d()) * b * b;
    int s = sgn(diff);
    return sa > 0 ? s : -s;
}

GaussianDivision gaussian_divmod(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    if (a.ring().kind() != Kind::QuadInt || a.ring().quad_d() != -1) {
        throw MathError(Errc::ContextNotEuclidean, a.ring().to_string());
    }
    if (is_zero(b)) {
        throw MathError(Errc::DivisionByZero);
    }
    Rational n = quad_norm(b);
    Element p = a * quad_conj(b);
    Element q = quad_make(a.ring(), Rational(round_nearest(p.quad().a / n)), Rational(round_nearest(p.quad().b / n)));
    return {q, a - q * b};
}

std::optional<Element> sum_of_two_squares(const Integer &p)
{
    if (p < 1) {
        return std::nullopt;
    }
    Ring r = Ring::quad_int(-1);
    Integer lim = isqrt(p);
    Integer b;
    for (Integer a = 1; a <= lim; ++a) {
        if (is_square(p - a * a, b)) {
            return quad_make(r, Rational(a), Rational(b));
        }
    }
    return std::nullopt;
}

bool quad_divides(const Element &x, const Element &y)
{
    require_same_ring(x, y);
    require_quad(x);
    if (is_zero(x)) {
        return is_zero(y);
    }
    if (x.ring().kind() == Kind::QuadField) {
        return true;
    }
    Rational n = quad_norm(x);
    Element p = y * quad_conj(x);
    return is_integral(p.quad().a / n) && is_integral(p.quad().b / n);
}

bool quad_associates(const Element &x, const Element &y)
{
    return quad_divides(x, y) && quad_divides(y, x);
}

bool quad_irreducible_by_norm(const Element &x)
{
    require_quad(x);
    std::int64_t d = x.ring().quad_d();
    if (x.ring().kind() != Kind::QuadInt || d >= 0) {
        throw MathError(Errc::Unsupported, "norm search in " + x.ring().to_string());
    }
    if (is_zero(x) || quad_is_unit(x)) {
        return false;
    }
    Integer n = quad_norm_int(x);
    Integer ad(-d);
    Integer bmax = isqrt(n / ad);
    for (Integer b = 0; b <= bmax; ++b) {
        Integer rest = n - ad * b * b;
        Integer amax = isqrt(rest);
        for (Integer a = -amax; a <= amax; ++a) {
            Integer nz = a * a + ad * b * b;
            if (nz <= 1 || nz >= n || n % nz != 0) {
                continue;
            }
            if (quad_divides(quad_make(x.ring(), Rational(a), Rational(b)), x)) {
                return false;
            }
        }
    }
    return true;
}

// ---- quaternions ----------------------------------------------------------

Element quat_make(const Rational &a, const Rational &b, const Rational &c, const Rational &d)
{
    return Element(quaternion_ring(), Quat{a, b, c, d});
}

Element quat_mul(const Element &x, const Element &y)
{
    require_same_ring(x, y);
    require_kind(x, Kind::Quaternions, "quaternion");
    const Quat &p = x.quat();
    const Quat &q = y.quat();
    return Element::raw(x.ring(), Quat{p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
                                       p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
                                       p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
                                       p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a});
}

Element quat_conj(const Element &q)
{
    require_kind(q, Kind::Quaternions, "quaternion");
    const Quat &v = q.quat();
    return Element::raw(q.ring(), Quat{v.a, -v.b, -v.c, -v.d});
}

Rational quat_norm_sq(const Element &q)
{
    require_kind(q, Kind::Quaternions, "quaternion");
    const Quat &v = q.quat();
    return v.a * v.a + v.b * v.b + v.c * v.c + v.d * v.d;
}

Element quat_inverse(const Element &q)
{
    Rational n = quat_norm_sq(q);
    if (n == 0) {
        throw MathError(Errc::DivisionByZero);
    }
    const Quat &v = q.quat();
    return Element::raw(q.ring(), Quat{v.a / n, -v.b / n, -v.c / n, -v.d / n});
}

std::tuple<Integer, Integer, Integer> pythagorean_triple(const Integer &m, const Integer &n)
{
    if (!(m > n && n > 0)) {
        throw MathError(Errc::InvalidParameters, "need m > n > 0");
    }
    return {m * m - n * n, 2 * m * n, m * m + n * n};
}

} // namespace ringkit

#include <doctest.h>

#include "support.hpp"

using namespace support;

namespace
{

Poly random_poly(const Ring &base, long max_degree, long size = 9)
{
    std::vector<Element> c;
    long deg = uniform(-1, max_degree);
    for (long i = 0; i <= deg; ++i) {
        c.push_back(random_element(base, size));
    }
    return Poly(base, std::move(c));
}

// Plain O(n^2) product on integer coefficients modulo n (n = 0 means Z).
std::vector<long> naive_mul(const std::vector<long> &a, const std::vector<long> &b, long n)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
            if (n) {
                c[i + j] %= n;
            }
        }
    }
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
    return c;
}

std::vector<long> longs(const Poly &p)
{
    std::vector<long> v;
    for (const auto &c : p.coeffs()) {
        v.push_back(c.integer().get_si());
    }
    return v;
}

} // namespace

TEST_CASE("arithmetic fixtures")
{
    Poly p = P("Zn:6", "2*x^2+1") * P("Zn:6", "4+3*x^3");
    CHECK(p == P("Zn:6", "3*x^3+2*x^2+4"));
    CHECK(p.degree() == Degree(3));
    CHECK(p.degree() < Degree(2) + Degree(3));
    CHECK(P("Z", "3*x-1") * Poly::constant(E("Z", "1")) == P("Z", "3*x-1"));

    Ring f3 = R("Fp:3");
    Poly a = P("Fp:3", "x^2+1");
    Poly b = P("Fp:3", "x^3+x^2+2*x+1");
    const char *values[] = {"1", "2", "2"};
    for (long r = 0; r < 3; ++r) {
        CHECK(poly_eval(a, from_integer(f3, r)) == E(f3, values[r]));
        CHECK(poly_eval(b, from_integer(f3, r)) == E(f3, values[r]));
    }
    CHECK_FALSE(a == b);
    CHECK_THROWS_AS(P("Zn:6", "x") + P("Zn:5", "x"), MathError);
}

TEST_CASE("multiplication against a naive oracle")
{
    for (long n : {0L, 6L, 7L, 8L}) {
        Ring base = n ? Ring::mod(n) : Ring::integers();
        for (int t = 0; t < 300; ++t) {
            Poly f = random_poly(base, 6);
            Poly g = random_poly(base, 6);
            CHECK(longs(f * g) == naive_mul(longs(f), longs(g), n));
        }
    }
}

TEST_CASE("degree")
{
    CHECK(Poly(R("Z")).degree().is_neg_infinity());
    CHECK(Poly(R("Z")).degree() < Degree(0));
    CHECK(Poly(R("Z")).degree().to_string() == "-inf");
    CHECK_THROWS_AS(Poly(R("Z")).degree().value(), MathError);
    CHECK(P("Z", "5").degree() == Degree(0));
    CHECK((Degree::neg_infinity() + Degree(4)).is_neg_infinity());

    for (const char *base : {"Z", "Q", "Fp:5", "Quad:-1", "Poly(Z)"}) {
        Ring b = R(base);
        for (int t = 0; t < 200; ++t) {
            Poly f = random_poly(b, 5);
            Poly g = random_poly(b, 5);
            CHECK((f * g).degree() == f.degree() + g.degree());
        }
    }
    // Z_6 has zero divisors, so additivity fails.
    CHECK((P("Zn:6", "2*x+1") * P("Zn:6", "3*x+1")).degree() == Degree(1));
}

TEST_CASE("evaluation is a homomorphism")
{
    for (const char *base : {"Z", "Fp:7", "Zn:12", "Quad:-2"}) {
        Ring b = R(base);
        for (int t = 0; t < 200; ++t) {
            Poly f = random_poly(b, 5);
            Poly g = random_poly(b, 5);
            Element r = random_element(b);
            CHECK(poly_eval(f + g, r) == poly_eval(f, r) + poly_eval(g, r));
            CHECK(poly_eval(f * g, r) == poly_eval(f, r) * poly_eval(g, r));
        }
    }
}

TEST_CASE("scaled division")
{
    ScaledDivision d = divrem_scaled(P("Z", "3*x^3+2*x^2+x-1"), P("Z", "2*x^2+x+1"));
    CHECK(d.m == 2);
    CHECK(d.q == P("Z", "6*x+1"));
    CHECK(d.r == P("Z", "-3*x-5"));
    CHECK(P("Z", "[-1,1,2,3]") == P("Z", "3*x^3+2*x^2+x-1"));

    ScaledDivision small = divrem_scaled(P("Z", "x+1"), P("Z", "x^3"));
    CHECK(small.m == 0);
    CHECK(small.q.is_zero());
    CHECK(small.r == P("Z", "x+1"));

    Poly g = P("Z", "3*x^2-2");
    ScaledDivision self = divrem_scaled(g, g);
    CHECK(self.r.is_zero());
    CHECK(scale(g, pow(E("Z", "3"), self.m)) == self.q * g);

    CHECK_THROWS_AS(divrem_scaled(g, Poly(R("Z"))), MathError);

    for (const char *base : {"Z", "Zn:6", "Zn:9", "Zn:12", "Poly(Z)"}) {
        Ring b = R(base);
        for (int t = 0; t < 1000 / 5; ++t) {
            Poly f = random_poly(b, 7, 20);
            Poly h = random_poly(b, 4, 20);
            if (h.is_zero()) {
                continue;
            }
            ScaledDivision s = divrem_scaled(f, h);
            Element bm = pow(h.leading(), s.m);
            CHECK(scale(f, bm) - s.q * h - s.r == Poly(b));
            CHECK(s.r.degree() < h.degree());
            std::size_t bound = f.is_zero() || f.degree() < h.degree()
                                    ? 0
                                    : f.degree().value() - h.degree().value() + 1;
            CHECK(s.m <= bound);
        }
    }
}

TEST_CASE("division over a field")
{
    Ring gi = R("QuadF:-1");
    Division d = divrem_field(P("QuadF:-1", "x^2+1"), P("QuadF:-1", "x-s"));
    CHECK(d.r.is_zero());
    (void)gi;
    Division f2 = divrem_field(P("Fp:2", "x^4+x+1"), P("Fp:2", "x^2+x+1"));
    CHECK(f2.r == P("Fp:2", "1"));
    Poly q = P("Q", "x^2/3-1");
    Poly g = P("Q", "2*x+5");
    CHECK(divrem_field(q * g, g).r.is_zero());
    CHECK(divrem_field(q * g, g).q == q);
    CHECK_THROWS_AS(divrem_field(P("Z", "x^2"), P("Z", "x")), MathError);
    CHECK_THROWS_AS(divrem_field(P("Q", "x^2"), Poly(R("Q"))), MathError);

    for (const char *base : {"Fp:2", "Fp:5", "Fp:7", "Q"}) {
        Ring b = R(base);
        for (int t = 0; t < 300; ++t) {
            Poly f = random_poly(b, 7);
            Poly h = random_poly(b, 4);
            if (h.is_zero()) {
                continue;
            }
            Division qr = divrem_field(f, h);
            CHECK(qr.q * h + qr.r == f);
            CHECK(qr.r.degree() < h.degree());
            // Any other quotient leaves a remainder of degree >= deg h.
            Poly other = qr.q + Poly::constant(random_nonzero(b)) * shift_up(Poly::constant(one(b)), uniform(0, 3));
            CHECK_FALSE((f - other * h).degree() < h.degree());
        }
    }
}

TEST_CASE("factor theorem")
{
    Ring q2 = R("Quad:2");
    Poly p = P("Quad:2", "x^4-2*x^3-3*x^2+4*x+2");
    Poly t = factor_theorem_split(p, E(q2, "s"));
    CHECK(P("Quad:2", "x-s") * t == p);
    for (const char *r : {"-s", "1+s", "1-s"}) {
        CHECK(is_zero(poly_eval(t, E(q2, r))));
    }
    CHECK(t.degree() == Degree(3));
    CHECK(factor_theorem_split(P("Z", "x-7"), E("Z", "7")) == P("Z", "1"));
    CHECK_THROWS_AS(factor_theorem_split(P("Z", "x-7"), E("Z", "6")), MathError);

    for (int i = 0; i < 200; ++i) {
        Ring b = R("Zn:12");
        Poly f = random_poly(b, 5);
        Element a = random_element(b);
        Poly g = P("Zn:12", "x") - Poly::constant(a);
        Poly h = f * g;
        CHECK(g * factor_theorem_split(h, a) == h);
    }
}

TEST_CASE("roots over finite rings")
{
    auto roots = roots_over_finite(P("Zn:8", "x^2+7"));
    REQUIRE(roots.size() == 4);
    CHECK(format(roots[0]) == "1");
    CHECK(format(roots[1]) == "3");
    CHECK(format(roots[2]) == "5");
    CHECK(format(roots[3]) == "7");
    CHECK(roots_over_finite(P("Fp:3", "x^2+1")).empty());
    CHECK(roots_over_finite(P("Zn:10", "x")).size() == 1);
    CHECK_THROWS_AS(roots_over_finite(Poly(R("Fp:3"))), MathError);

    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        Ring b = Ring::mod(p);
        for (int t = 0; t < 100; ++t) {
            Poly f = random_poly(b, 6);
            if (f.is_zero()) {
                continue;
            }
            CHECK(roots_over_finite(f).size() <= f.degree().value());
        }
    }
}

TEST_CASE("lagrange interpolation")
{
    Ring f7 = R("Fp:7");
    CHECK(lagrange_interpolate(f7, {{E(f7, "3"), E(f7, "5")}}) == P("Fp:7", "5"));

    std::vector<std::pair<Element, Element>> pts = {
        {E(f7, "0"), E(f7, "1")}, {E(f7, "1"), E(f7, "3")}, {E(f7, "2"), E(f7, "2")}, {E(f7, "3"), E(f7, "6")}};
    Poly p = lagrange_interpolate(f7, pts);
    // Exhaustive search over every polynomial of degree < 4.
    int matches = 0;
    std::vector<long> found;
    for (long c = 0; c < 7 * 7 * 7 * 7; ++c) {
        long k[4] = {c % 7, c / 7 % 7, c / 49 % 7, c / 343};
        bool ok = true;
        for (long x = 0; x < 4 && ok; ++x) {
            long y = (k[0] + k[1] * x + k[2] * x * x + k[3] * x * x * x) % 7;
            long want[] = {1, 3, 2, 6};
            ok = y == want[x];
        }
        if (ok) {
            ++matches;
            found.assign(k, k + 4);
        }
    }
    CHECK(matches == 1);
    while (!found.empty() && found.back() == 0) {
        found.pop_back();
    }
    CHECK(longs(p) == found);

    CHECK_THROWS_AS(lagrange_interpolate(f7, {{E(f7, "1"), E(f7, "2")}, {E(f7, "1"), E(f7, "3")}}), MathError);
    Ring z = R("Z");
    CHECK_THROWS_AS(lagrange_interpolate(z, {{E(z, "1"), E(z, "2")}}), MathError);

    for (long prime : {5L, 7L, 11L, 13L}) {
        Ring b = Ring::mod(prime);
        for (int t = 0; t < 50; ++t) {
            long n = uniform(1, prime - 1);
            Poly q = random_poly(b, n - 1);
            std::vector<std::pair<Element, Element>> nodes;
            for (long x = 0; x < n; ++x) {
                Element a = from_integer(b, x);
                nodes.emplace_back(a, poly_eval(q, a));
            }
            CHECK(lagrange_interpolate(b, nodes) == q);
        }
    }
}

TEST_CASE("derivative")
{
    CHECK(derivative(P("Z", "17")).is_zero());
    CHECK(derivative(P("Z", "x^3")) == P("Z", "3*x^2"));
    CHECK(derivative(P("Fp:3", "x^3+x")) == P("Fp:3", "1"));
    for (const char *base : {"Z", "Fp:5", "Q"}) {
        Ring b = R(base);
        for (int t = 0; t < 200; ++t) {
            Poly f = random_poly(b, 6);
            Poly g = random_poly(b, 6);
            CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
            CHECK(derivative(f + g) == derivative(f) + derivative(g));
        }
    }
}

TEST_CASE("printing and parsing")
{
    CHECK(format(P("Z", "[-1,1,2,3]").to_element()) == "3*x^3+2*x^2+x-1");
    CHECK(format(P("Z", "-x^2").to_element()) == "-x^2");
    CHECK(format(Poly(R("Z")).to_element()) == "0");
    CHECK(format(P("Quad:-1", "(1+i)*x+2").to_element()) == "(1+i)*x+2");
    CHECK(P("Z", "[‑1,1,2,3]") == P("Z", "[-1,1,2,3]"));
    for (const char *ring : {"Poly(Z)", "Poly(Q)", "Poly(Quad:-1)", "Poly(Poly(Z))", "Poly(Fp:7)", "Poly(H)"}) {
        Ring r = R(ring);
        for (int t = 0; t < 200; ++t) {
            Element x = random_element(r, 12);
            CHECK(E(r, format(x)) == x);
        }
    }
}

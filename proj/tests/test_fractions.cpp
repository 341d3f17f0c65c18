#include <doctest.h>

#include <ringkit/fraction.hpp>

#include "support.hpp"

using namespace support;

namespace
{

Frac F(const std::string &ring, const std::string &s)
{
    return Frac::from_element(E(ring, s));
}

Frac random_frac(const Ring &base, long size = 9)
{
    return frac_make(random_element(base, size), random_nonzero(base, size));
}

} // namespace

TEST_CASE("construction")
{
    Ring z = R("Z");
    Frac f = frac_make(E(z, "4"), E(z, "6"));
    CHECK(f.num() == E(z, "2"));
    CHECK(f.den() == E(z, "3"));
    Frac neg = frac_make(E(z, "4"), E(z, "-6"));
    CHECK(neg.num() == E(z, "-2"));
    CHECK(neg.den() == E(z, "3"));
    Frac a = frac_make(E(z, "7"), one(z));
    CHECK(a.num() == E(z, "7"));
    CHECK(is_one(a.den()));
    CHECK(frac_make(zero(z), E(z, "-5")).den() == one(z));

    Ring qx = R("Poly(Q)");
    Frac r = frac_make(E(qx, "x^2+x"), E(qx, "x^3+x"));
    CHECK(r.num() == E(qx, "x+1"));
    CHECK(r.den() == E(qx, "x^2+1"));
    Frac m = frac_make(E(qx, "2*x"), E(qx, "4*x^2-2"));
    CHECK(m.den() == E(qx, "x^2-1/2"));
    CHECK(m.num() == E(qx, "1/2*x"));

    CHECK_THROWS_AS(frac_make(E(z, "1"), zero(z)), MathError);
    CHECK_THROWS_AS(frac_make(E("Zn:6", "1"), E("Zn:6", "5")), MathError);
    CHECK(has_canonical_fractions(z));
    CHECK(has_canonical_fractions(qx));
    CHECK_FALSE(has_canonical_fractions(R("MPoly(Q)")));
}

TEST_CASE("arithmetic over Z matches Q")
{
    CHECK(frac_eq(frac_add(F("Frac(Z)", "2/3"), F("Frac(Z)", "1/6")), F("Frac(Z)", "5/6")));
    CHECK(format(E("Frac(Z)", "2/3+1/6")) == "5/6");
    Frac f = F("Frac(Z)", "-7/12");
    CHECK(frac_eq(frac_add(f, F("Frac(Z)", "0")), f));

    Ring z = R("Z");
    Ring q = R("Q");
    auto to_q = [&](const Frac &x) {
        return Rational(x.num().integer(), x.den().integer());
    };
    for (int t = 0; t < 1000; ++t) {
        Frac a = random_frac(z, 40);
        Frac b = random_frac(z, 40);
        Rational qa = to_q(a);
        Rational qb = to_q(b);
        CHECK(to_q(frac_add(a, b)) == qa + qb);
        CHECK(to_q(frac_sub(a, b)) == qa - qb);
        CHECK(to_q(frac_mul(a, b)) == qa * qb);
        if (!is_zero(b.num())) {
            CHECK(to_q(frac_div(a, b)) == qa / qb);
        }
        // Canonical form: positive denominator, lowest terms.
        Frac s = frac_add(a, b);
        CHECK(s.den().integer() > 0);
        CHECK(gcd(s.num().integer(), s.den().integer()) == 1);
    }
    (void)q;
    CHECK_THROWS_AS(frac_div(F("Frac(Z)", "1/2"), F("Frac(Z)", "0")), MathError);
}

TEST_CASE("multivariate fractions over F_5")
{
    std::string ring = "Frac(MPoly(Fp:5))";
    Frac lhs = frac_add(F(ring, "(2*y+2)/(x+3*y)"), F(ring, "(4*x*y+3)/x"));
    Frac rhs = F(ring, "(4*x^2*y+2*x*y^2+2*x*y+4*y)/(x^2+3*x*y)");
    CHECK(frac_eq(lhs, rhs));
    CHECK(E(ring, "(2*y+2)/(x+3*y)+(4*x*y+3)/x") == E(ring, "(4*x^2*y+2*x*y^2+2*x*y+4*y)/(x^2+3*x*y)"));
    CHECK_FALSE(frac_eq(lhs, F(ring, "(4*x^2*y+2*x*y^2+2*x*y+3*y)/(x^2+3*x*y)")));
}

TEST_CASE("equivalence relation and representative independence")
{
    for (const char *base : {"Z", "Poly(Q)", "MPoly(Z)", "Quad:-5", "Poly(Fp:3)"}) {
        Ring b = R(base);
        for (int t = 0; t < 1000 / 5; ++t) {
            Frac x = random_frac(b, 4);
            Frac y = random_frac(b, 4);
            Frac w = random_frac(b, 4);
            CHECK(frac_eq(x, x));
            CHECK(frac_eq(x, y) == frac_eq(y, x));
            CHECK(frac_eq(x, y) == (x.num() * y.den() == y.num() * x.den()));
            if (frac_eq(x, y) && frac_eq(y, w)) {
                CHECK(frac_eq(x, w));
            }

            // a'/b' = (ca)/(cb) with c nonzero.
            Element c = random_nonzero(b, 4);
            Frac x2 = Frac(x.num() * c, x.den() * c);
            CHECK(frac_eq(x, x2));
            CHECK(frac_eq(frac_add(x, y), frac_add(x2, y)));
            CHECK(frac_eq(frac_sub(x, y), frac_sub(x2, y)));
            CHECK(frac_eq(frac_mul(x, y), frac_mul(x2, y)));
            if (!is_zero(y.num())) {
                CHECK(frac_eq(frac_div(x, y), frac_div(x2, y)));
            }
        }
    }
}

TEST_CASE("embedding is a homomorphism")
{
    for (const char *base : {"Z", "Poly(Z)", "Quad:-1"}) {
        Ring b = R(base);
        Ring fr = Ring::frac(b);
        for (int t = 0; t < 200; ++t) {
            Element x = random_element(b);
            Element y = random_element(b);
            CHECK(frac_eq(Frac::embed(x + y), frac_add(Frac::embed(x), Frac::embed(y))));
            CHECK(frac_eq(Frac::embed(x * y), frac_mul(Frac::embed(x), Frac::embed(y))));
            CHECK(lift(x, fr) == Frac::embed(x).to_element(fr));
            if (!(x == y)) {
                CHECK_FALSE(frac_eq(Frac::embed(x), Frac::embed(y)));
            }
        }
    }
}

TEST_CASE("inverses")
{
    for (const char *base : {"Z", "Poly(Q)", "MPoly(Fp:5)"}) {
        Ring b = R(base);
        Ring fr = Ring::frac(b);
        for (int t = 0; t < 200; ++t) {
            Frac x = random_frac(b, 5);
            if (is_zero(x.num())) {
                CHECK_THROWS_AS(frac_inverse(x), MathError);
                continue;
            }
            Frac inv = frac_inverse(x);
            CHECK(frac_eq(inv, Frac(x.den(), x.num())));
            CHECK(is_one(x.to_element(fr) * inv.to_element(fr)));
        }
    }
}

TEST_CASE("literals")
{
    CHECK(format(E("Frac(Z)", "6/-4")) == "-3/2");
    CHECK(format(E("Frac(Z)", "8/4")) == "2");
    CHECK(format(E("Frac(Poly(Q))", "(x^2-1)/(2*x+2)")) == "1/2*x-1/2");
    CHECK(format(E("Frac(Poly(Q))", "1/(x+1)+1")) == "(x+2)/(x+1)");
    for (const char *ring : {"Frac(Z)", "Frac(Poly(Q))", "Frac(Poly(Fp:5))", "Frac(Quad:-1)"}) {
        Ring r = R(ring);
        for (int t = 0; t < 200; ++t) {
            Element a = random_element(r, 6);
            CHECK(E(r, format(a)) == a);
        }
    }
}

#include <doctest.h>

#include <ringkit/euclid.hpp>

#include "support.hpp"

using namespace support;

namespace
{

const char *const kInstances[] = {"Z", "Poly(Q)", "Poly(Fp:2)", "Poly(Fp:7)", "Quad:-1"};

Element sample(const Ring &r)
{
    return random_element(r, r.kind() == Kind::Integers ? 100000 : 12);
}

bool canonical(const Element &g)
{
    return is_zero(g) || is_one(normalizing_unit(g));
}

} // namespace

TEST_CASE("gcd fixtures")
{
    Ring z = R("Z");
    CHECK(euclid_gcd(E(z, "252"), E(z, "198")) == E(z, "18"));
    CHECK(euclid_gcd(E(z, "-12"), zero(z)) == E(z, "12"));
    CHECK(is_zero(euclid_gcd(zero(z), zero(z))));
    Ring qx = R("Poly(Q)");
    CHECK(euclid_gcd(E(qx, "x^2+x"), E(qx, "x^3+x")) == E(qx, "x"));
    CHECK(euclid_gcd(E(qx, "3*x-6"), zero(qx)) == E(qx, "x-2"));
    Ring gi = R("Quad:-1");
    CHECK(euclid_gcd(E(gi, "-2*i"), zero(gi)) == E(gi, "2"));
    CHECK(euclid_gcd(E(gi, "1-i"), zero(gi)) == E(gi, "1+i"));
    CHECK_THROWS_AS(euclid_gcd(E("Poly(Z)", "x"), E("Poly(Z)", "2")), MathError);
    CHECK_THROWS_AS(euclid_gcd(E("Quad:-5", "2"), E("Quad:-5", "3")), MathError);
}

TEST_CASE("extended gcd fixtures")
{
    Ring z = R("Z");
    BezoutCert c = extended_gcd(E(z, "252"), E(z, "198"));
    CHECK(c.g == E(z, "18"));
    CHECK(c.x == E(z, "4"));
    CHECK(c.y == E(z, "-5"));

    BezoutCert a0 = extended_gcd(E(z, "-9"), zero(z));
    CHECK(a0.g == E(z, "9"));
    CHECK(is_unit(a0.x));
    CHECK(is_zero(a0.y));

    Ring gi = R("Quad:-1");
    Element a = E(gi, "3+2*i");
    Element b = E(gi, "4+i");
    CHECK(E(gi, "1+2*i") * a + E(gi, "-2*i") * b == one(gi));
    BezoutCert g = extended_gcd(a, b);
    CHECK(is_one(g.g));
    CHECK(a * g.x + b * g.y == g.g);
}

TEST_CASE("gcd properties")
{
    for (const char *name : kInstances) {
        Ring r = R(name);
        for (int t = 0; t < 1000; ++t) {
            Element a = sample(r);
            Element b = sample(r);
            BezoutCert c = extended_gcd(a, b);
            CHECK(a * c.x + b * c.y == c.g);
            CHECK(c.g == euclid_gcd(a, b));
            CHECK(canonical(c.g));
            if (!is_zero(c.g)) {
                CHECK(divides(c.g, a));
                CHECK(divides(c.g, b));
            }
            if (t % 10 == 0) {
                // A constructed common divisor divides the gcd.
                Element d = random_nonzero(r, 5);
                Element g2 = euclid_gcd(a * d, b * d);
                CHECK(divides(d, g2));
                // gcd(s a, s b) ~ s gcd(a, b)
                CHECK(are_associates(g2, d * euclid_gcd(a, b)));
            }
        }
    }
}

TEST_CASE("remainder sequence invariant")
{
    for (const char *name : kInstances) {
        Ring r = R(name);
        for (int t = 0; t < 100; ++t) {
            Element a = sample(r);
            Element b = random_nonzero(r, 40);
            auto seq = remainder_sequence(a, b);
            Element g = euclid_gcd(a, b);
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                CHECK(euclid_gcd(seq[i], seq[i + 1]) == g);
            }
            EuclideanDivision d = euclid_divmod(a, b);
            CHECK(d.q * b + d.r == a);
            CHECK(euclid_gcd(d.q * b + d.r, b) == euclid_gcd(b, d.r));
        }
    }
}

TEST_CASE("division contract")
{
    Ring z = R("Z");
    for (long a = -30; a <= 30; ++a) {
        for (long b = -7; b <= 7; ++b) {
            if (b == 0) {
                continue;
            }
            EuclideanDivision d = euclid_divmod(from_integer(z, a), from_integer(z, b));
            long r = d.r.integer().get_si();
            CHECK(d.q.integer().get_si() * b + r == a);
            CHECK(r >= 0);
            CHECK(r < std::abs(b));
        }
    }
    Ring gi = R("Quad:-1");
    for (int t = 0; t < 500; ++t) {
        Element a = random_element(gi, 100);
        Element b = random_nonzero(gi, 20);
        EuclideanDivision d = euclid_divmod(a, b);
        CHECK(d.q * b + d.r == a);
        CHECK(quad_norm(d.r) < quad_norm(b));
    }
    CHECK_THROWS_AS(euclid_divmod(E(z, "3"), zero(z)), MathError);
}

TEST_CASE("lcm")
{
    Ring z = R("Z");
    CHECK(euclid_lcm(E(z, "4"), E(z, "6")) == E(z, "12"));
    CHECK(euclid_lcm(E(z, "-5"), one(z)) == E(z, "5"));
    CHECK(euclid_lcm(E("Poly(Fp:3)", "x"), E("Poly(Fp:3)", "x^2")) == E("Poly(Fp:3)", "x^2"));
    for (long a = 1; a <= 40; ++a) {
        for (long b = 1; b <= 40; ++b) {
            long m = a;
            while (m % b != 0) {
                m += a;
            }
            CHECK(euclid_lcm(from_integer(z, a), from_integer(z, -b)) == from_integer(z, m));
        }
    }
    for (const char *name : kInstances) {
        Ring r = R(name);
        for (int t = 0; t < 100; ++t) {
            Element a = random_nonzero(r, 20);
            Element b = random_nonzero(r, 20);
            Element l = euclid_lcm(a, b);
            CHECK(divides(a, l));
            CHECK(divides(b, l));
            CHECK(are_associates(l * euclid_gcd(a, b), a * b));
        }
    }
}

TEST_CASE("euclid's lemma")
{
    for (const char *name : kInstances) {
        Ring r = R(name);
        int tested = 0;
        for (int t = 0; t < 2000 && tested < 200; ++t) {
            Element a = random_nonzero(r, 20);
            Element b = random_nonzero(r, 20);
            if (!is_unit(euclid_gcd(a, b))) {
                continue;
            }
            Element c = a * random_element(r, 20);
            Element bc = b * c;
            if (divides(a, bc)) {
                ++tested;
                CHECK(divides(a, c));
            }
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("comaximality")
{
    Ring z = R("Z");
    CHECK(are_comaximal({E(z, "4"), E(z, "13")}));
    CHECK_FALSE(are_comaximal({E(z, "4"), E(z, "6")}));
    CHECK(are_comaximal({E("Poly(Fp:3)", "x"), E("Poly(Fp:3)", "x+1")}));
    CHECK(are_comaximal({E(z, "3"), E(z, "5"), E(z, "7")}));
    CHECK_FALSE(are_comaximal({E(z, "3"), E(z, "5"), E(z, "9")}));
}

TEST_CASE("crt")
{
    Ring z = R("Z");
    CrtSolution s = crt_solve({{E(z, "3"), E(z, "4")}, {E(z, "8"), E(z, "13")}});
    CHECK(s.x == E(z, "47"));
    CHECK(s.modulus == E(z, "52"));

    CrtSolution one_eq = crt_solve({{E(z, "-17"), E(z, "5")}});
    CHECK(one_eq.x == E(z, "3"));

    CrtSolution three = crt_solve({{E(z, "1"), E(z, "5")}, {E(z, "2"), E(z, "6")}, {E(z, "3"), E(z, "7")}});
    long found = -1;
    for (long x = 0; x < 210; ++x) {
        if (x % 5 == 1 && x % 6 == 2 && x % 7 == 3) {
            CHECK(found == -1);
            found = x;
        }
    }
    CHECK(three.x == from_integer(z, found));
    CHECK(three.modulus == E(z, "210"));

    try {
        crt_solve({{E(z, "2"), E(z, "4")}, {E(z, "3"), E(z, "6")}});
        FAIL("expected NotComaximal");
    } catch (const MathError &e) {
        CHECK(e.code() == Errc::NotComaximal);
        CHECK(e.detail().find("gcd=2") != std::string::npos);
    }
    CHECK_THROWS_AS(crt_solve({}), MathError);

    // Exhaustive: every residue pair for moduli with product <= 10^4.
    for (long m1 : {4L, 9L, 25L}) {
        for (long m2 : {7L, 11L, 13L}) {
            std::vector<int> hit(m1 * m2, 0);
            for (long b1 = 0; b1 < m1; ++b1) {
                for (long b2 = 0; b2 < m2; ++b2) {
                    CrtSolution c = crt_solve({{from_integer(z, b1), from_integer(z, m1)},
                                               {from_integer(z, b2 - 3 * m2), from_integer(z, m2)}});
                    long x = c.x.integer().get_si();
                    REQUIRE(x >= 0);
                    REQUIRE(x < m1 * m2);
                    CHECK(x % m1 == b1);
                    CHECK(x % m2 == b2);
                    ++hit[x];
                }
            }
            for (int h : hit) {
                CHECK(h == 1);
            }
        }
    }

    Ring f5 = R("Poly(Fp:5)");
    CrtSolution p = crt_solve({{E(f5, "2"), E(f5, "x")}, {E(f5, "x+3"), E(f5, "x^2+2")}});
    CHECK(divides(E(f5, "x"), p.x - E(f5, "2")));
    CHECK(divides(E(f5, "x^2+2"), p.x - E(f5, "x+3")));
    CHECK(p.modulus == E(f5, "x^3+2*x"));

    Ring gi = R("Quad:-1");
    CrtSolution g = crt_solve({{E(gi, "1"), E(gi, "2+i")}, {E(gi, "i"), E(gi, "3")}});
    CHECK(divides(E(gi, "2+i"), g.x - E(gi, "1")));
    CHECK(divides(E(gi, "3"), g.x - E(gi, "i")));
}

TEST_CASE("idempotents")
{
    Ring z = R("Z");
    auto e = crt_idempotents({E(z, "4"), E(z, "13")});
    REQUIRE(e.size() == 2);
    CHECK(e[0] == E(z, "13"));
    CHECK(e[1] == E(z, "40"));
    auto single = crt_idempotents({E(z, "9")});
    CHECK(divides(E(z, "9"), single[0] - one(z)));

    std::vector<Element> moduli = {E(z, "3"), E(z, "5"), E(z, "7"), E(z, "8")};
    auto ek = crt_idempotents(moduli);
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            CHECK(divides(moduli[j], ek[k] - (j == k ? one(z) : zero(z))));
        }
    }

    Ring f7 = R("Poly(Fp:7)");
    Ring b = R("Fp:7");
    std::vector<Element> lin;
    for (int a = 0; a < 4; ++a) {
        lin.push_back(E(f7, "x-" + std::to_string(a)));
    }
    auto basis = crt_idempotents(lin);
    for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < 4; ++j) {
            Element v = poly_eval(Poly::from_element(basis[k]), from_integer(b, j));
            CHECK(v == (j == k ? one(b) : zero(b)));
        }
    }
    CHECK_THROWS_AS(crt_idempotents({E(z, "4"), E(z, "6")}), MathError);
}

#include <ringkit/factor.hpp>

#include <algorithm>
#include <cstdint>

#include <ringkit/algebra.hpp>
#include <ringkit/euclid.hpp>
#include <ringkit/literal.hpp>
#include <ringkit/number_rings.hpp>

namespace ringkit
{

namespace
{

// ---- dense F_p polynomials on machine words -------------------------------

using Word = std::uint64_t;
using Vec = std::vector<Word>; // ascending coefficients, no trailing zeros

constexpr Word kMaxTrialCandidates = 2'000'000;

Word mulmod(Word a, Word b, Word p)
{
    return static_cast<Word>(static_cast<unsigned __int128>(a) * b % p);
}

Word powmod(Word a, Word e, Word p)
{
    Word r = 1 % p;
    while (e) {
        if (e & 1U) {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

void trim(Vec &v)
{
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

// a = q*g + r with g monic; a is overwritten by r.
Vec divmod_monic(Vec &a, const Vec &g, Word p)
{
    std::size_t dg = g.size() - 1;
    if (a.size() < g.size()) {
        return {};
    }
    Vec q(a.size() - dg, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        Word t = a[k + dg];
        q[k] = t;
        if (t == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dg; ++j) {
            a[k + j] = (a[k + j] + p - mulmod(t, g[j], p)) % p;
        }
    }
    a.resize(dg);
    trim(a);
    return q;
}

bool divides_monic(const Vec &g, const Vec &f, Word p)
{
    Vec r = f;
    divmod_monic(r, g, p);
    return r.empty();
}

Word small_prime(const Ring &base)
{
    if (base.kind() != Kind::Mod || !base.is_field()) {
        throw MathError(Errc::NotAField, base.to_string());
    }
    if (!base.modulus().fits_ulong_p() || base.modulus() > 0xFFFFFFFFUL) {
        throw MathError(Errc::TooLarge, "prime " + to_string(base.modulus()));
    }
    return base.modulus().get_ui();
}

Vec to_vec(const Poly &f)
{
    Vec v;
    for (const auto &c : f.coeffs()) {
        v.push_back(c.integer().get_ui());
    }
    return v;
}

Poly from_vec(const Ring &base, const Vec &v)
{
    std::vector<Element> c;
    for (Word w : v) {
        c.push_back(Element::raw(base, Integer(static_cast<unsigned long>(w))));
    }
    return Poly(base, std::move(c));
}

// Monic polynomials of degree d in lex order of (c_{d-1}, ..., c_0).
class MonicCounter
{
public:
    MonicCounter(std::size_t d, Word p) : p_(p), v_(d + 1, 0) { v_[d] = 1; }

    const Vec &current() const { return v_; }

    bool next()
    {
        for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
            if (++v_[i] < p_) {
                return true;
            }
            v_[i] = 0;
        }
        return false;
    }

private:
    Word p_;
    Vec v_;
};

void check_budget(Word p, std::size_t d)
{
    Word count = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (count > kMaxTrialCandidates / p) {
            throw MathError(Errc::TooLarge, "trial division over F_" + std::to_string(p) + " in degree " +
                                                std::to_string(d));
        }
        count *= p;
    }
}

// Smallest-degree, lex-first monic divisor of f with 1 <= deg < deg f.
std::optional<Vec> smallest_monic_divisor(const Vec &f, Word p)
{
    std::size_t n = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        check_budget(p, d);
        MonicCounter c(d, p);
        do {
            if (divides_monic(c.current(), f, p)) {
                return c.current();
            }
        } while (c.next());
    }
    return std::nullopt;
}

Vec make_monic(Vec f, Word p, Word &lead)
{
    lead = f.back();
    Word inv = powmod(lead, p - 2, p);
    for (auto &c : f) {
        c = mulmod(c, inv, p);
    }
    return f;
}

// ---- conversions ----------------------------------------------------------

const Ring &ring_z()
{
    static const Ring z = Ring::integers();
    return z;
}

const Ring &ring_q()
{
    static const Ring q = Ring::rationals();
    return q;
}

bool over_z_or_q(const Poly &f)
{
    return f.base().kind() == Kind::Integers || f.base().kind() == Kind::Rationals;
}

Rational coeff_q(const Element &c)
{
    return c.ring().kind() == Kind::Integers ? Rational(c.integer()) : c.rational();
}

std::vector<Integer> integer_coeffs(const Poly &f)
{
    std::vector<Integer> out;
    for (const auto &c : f.coeffs()) {
        Rational q = coeff_q(c);
        if (!is_integral(q)) {
            throw MathError(Errc::InvalidParameters, "non-integral coefficient " + to_string(q));
        }
        out.push_back(q.get_num());
    }
    return out;
}

Poly to_q(const Poly &f)
{
    std::vector<Element> c;
    for (const auto &a : f.coeffs()) {
        c.push_back(Element::raw(ring_q(), coeff_q(a)));
    }
    return Poly(ring_q(), std::move(c));
}

Poly to_z(const std::vector<Integer> &c)
{
    return Poly::from_integers(ring_z(), c);
}

Integer content_of(const std::vector<Integer> &c)
{
    Integer g = 0;
    for (const auto &a : c) {
        g = gcd(g, a);
    }
    return g;
}

void require_primitive(const std::vector<Integer> &c)
{
    if (c.size() <= 1) {
        throw MathError(Errc::ConstantPolynomial);
    }
    if (content_of(c) != 1) {
        throw MathError(Errc::NotPrimitive, "content " + to_string(content_of(c)));
    }
}

std::vector<Integer> positive_divisors(const Integer &n)
{
    Integer m = abs(n);
    std::vector<Integer> divs{1};
    for (const auto &[p, e] : factor_integer(m).factors) {
        std::size_t existing = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p.integer();
            for (std::size_t i = 0; i < existing; ++i) {
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Rational eval_q(const std::vector<Integer> &c, const Rational &x)
{
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x + c[i];
    }
    return acc;
}

bool poly_less(const Poly &a, const Poly &b)
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const Integer &x = a.coeffs()[i].integer();
        const Integer &y = b.coeffs()[i].integer();
        if (x != y) {
            return x < y;
        }
    }
    return false;
}

IrreducibilityVerdict verdict(Verdict s, Certificate c)
{
    return {s, std::move(c)};
}

} // namespace

// ---- Factorization --------------------------------------------------------

Element Factorization::expand() const
{
    Element acc = unit;
    for (const auto &[f, e] : factors) {
        acc = acc * pow(f, static_cast<std::uint64_t>(e));
    }
    return acc;
}

std::string Factorization::to_string() const
{
    std::vector<std::string> parts;
    if (!is_one(unit) || factors.empty()) {
        parts.push_back(format(unit));
    }
    bool several = parts.size() + factors.size() > 1;
    for (const auto &[f, e] : factors) {
        std::string s = format(f);
        if (e > 1) {
            s = parenthesize(s) + "^" + std::to_string(e);
        } else if (several && !is_atomic_literal(s)) {
            s = parenthesize(s);
        }
        parts.push_back(s);
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? " * " : "") + parts[i];
    }
    return out;
}

bool operator==(const Factorization &a, const Factorization &b)
{
    if (!(a.unit == b.unit) || a.factors.size() != b.factors.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (!(a.factors[i].first == b.factors[i].first) || a.factors[i].second != b.factors[i].second) {
            return false;
        }
    }
    return true;
}

Factorization factor_integer(const Integer &n)
{
    if (n == 0) {
        throw MathError(Errc::ZeroInput);
    }
    if (abs(n) > Integer(static_cast<long>(kTrialDivisionCap))) {
        throw MathError(Errc::TooLarge, to_string(n));
    }
    const Ring &z = ring_z();
    Factorization out{from_integer(z, n < 0 ? -1 : 1), {}};
    std::uint64_t m = Integer(abs(n)).get_ui();
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) {
            out.factors.emplace_back(from_integer(z, static_cast<long>(p)), e);
        }
    };
    take(2);
    for (std::uint64_t p = 3; p * p <= m; p += 2) {
        take(p);
    }
    if (m > 1) {
        out.factors.emplace_back(from_integer(z, static_cast<long>(m)), 1U);
    }
    return out;
}

std::vector<Poly> monic_irreducibles(const Integer &p, unsigned max_degree)
{
    Ring fp = Ring::mod(p);
    Word q = small_prime(fp);
    std::vector<Vec> found;
    std::vector<Poly> out;
    for (unsigned n = 1; n <= max_degree; ++n) {
        check_budget(q, n);
        MonicCounter c(n, q);
        do {
            const Vec &f = c.current();
            bool irreducible = std::none_of(found.begin(), found.end(), [&](const Vec &g) {
                return 2 * (g.size() - 1) <= n && divides_monic(g, f, q);
            });
            if (irreducible) {
                found.push_back(f);
                out.push_back(from_vec(fp, f));
            }
        } while (c.next());
    }
    return out;
}

Factorization factor_poly_fp(const Poly &f)
{
    Word p = small_prime(f.base());
    if (f.is_zero()) {
        throw MathError(Errc::ZeroInput);
    }
    Ring pr = Ring::poly(f.base());
    Word lead = 0;
    Vec rest = make_monic(to_vec(f), p, lead);
    Factorization out{Poly::constant(Element::raw(f.base(), Integer(static_cast<unsigned long>(lead))))
                          .to_element(pr),
                      {}};
    for (std::size_t d = 1; 2 * d <= rest.size() - 1; ++d) {
        check_budget(p, d);
        MonicCounter c(d, p);
        do {
            unsigned e = 0;
            while (rest.size() > 1) {
                Vec r = rest;
                Vec q = divmod_monic(r, c.current(), p);
                if (!r.empty()) {
                    break;
                }
                rest = std::move(q);
                ++e;
            }
            if (e) {
                out.factors.emplace_back(from_vec(f.base(), c.current()).to_element(pr), e);
            }
        } while (2 * d <= rest.size() - 1 && c.next());
    }
    if (rest.size() > 1) {
        out.factors.emplace_back(from_vec(f.base(), rest).to_element(pr), 1U);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto &a, const auto &b) {
        return poly_less(Poly::from_element(a.first), Poly::from_element(b.first));
    });
    return out;
}

Integer content(const Poly &f)
{
    if (f.is_zero()) {
        throw MathError(Errc::ZeroInput);
    }
    return content_of(integer_coeffs(f));
}

Poly primitive_part(const Poly &f)
{
    std::vector<Integer> c = integer_coeffs(f);
    Integer g = content_of(c);
    if (g == 0) {
        throw MathError(Errc::ZeroInput);
    }
    for (auto &a : c) {
        a /= g;
    }
    return Poly::from_integers(f.base(), c);
}

Poly primitive_associate(const Poly &f)
{
    if (f.is_zero()) {
        throw MathError(Errc::ZeroInput);
    }
    if (!over_z_or_q(f)) {
        throw MathError(Errc::Unsupported, "primitive associate over " + f.base().to_string());
    }
    Integer l = 1;
    for (const auto &c : f.coeffs()) {
        l = lcm(l, coeff_q(c).get_den());
    }
    std::vector<Integer> z;
    for (const auto &c : f.coeffs()) {
        Rational q = coeff_q(c) * l;
        z.push_back(q.get_num());
    }
    Integer g = content_of(z);
    if (z.back() < 0) {
        g = -g;
    }
    for (auto &a : z) {
        a /= g;
    }
    return to_z(z);
}

std::vector<Rational> rational_roots(const Poly &f)
{
    if (f.is_zero()) {
        throw MathError(Errc::ZeroInput);
    }
    std::vector<Integer> c = integer_coeffs(primitive_associate(f));
    std::vector<Rational> roots;
    std::size_t k = 0;
    while (c[k] == 0) {
        ++k;
    }
    if (k > 0) {
        roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<long>(k));
    }
    if (c.size() > 1) {
        std::vector<Integer> num = positive_divisors(c.front());
        std::vector<Integer> den = positive_divisors(c.back());
        for (const auto &a : num) {
            for (const auto &b : den) {
                if (gcd(a, b) != 1) {
                    continue;
                }
                for (int s : {1, -1}) {
                    Rational x = make_rational(s * a, b);
                    if (eval_q(c, x) == 0) {
                        roots.push_back(x);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---- verdicts -------------------------------------------------------------

std::string IrreducibilityVerdict::to_string() const
{
    std::string s = status == Verdict::Irreducible ? "IRREDUCIBLE" : status == Verdict::Reducible ? "REDUCIBLE"
                                                                                                   : "INCONCLUSIVE";
    struct Printer {
        std::string operator()(const cert::None &) const { return ""; }
        std::string operator()(const cert::PrimeNorm &) const { return " cert=prime-norm"; }
        std::string operator()(const cert::LowDegreeNoRoot &) const { return " cert=lowdeg"; }
        std::string operator()(const cert::RationalRootFound &c) const { return " cert=root r=" + format(c.root); }
        std::string operator()(const cert::EisensteinAt &c) const
        {
            return " cert=eisenstein p=" + ringkit::to_string(c.p) + " shift=" + ringkit::to_string(c.shift);
        }
        std::string operator()(const cert::ReductionMod &c) const
        {
            return " cert=reduction p=" + ringkit::to_string(c.p);
        }
        std::string operator()(const cert::TrialDivisorFound &c) const
        {
            return " cert=divisor g=" + format(c.divisor);
        }
        std::string operator()(const cert::Exhaustive &) const { return " cert=exhaustive"; }
    };
    return s + std::visit(Printer{}, certificate);
}

IrreducibilityVerdict low_degree_test(const Poly &f)
{
    if (f.is_zero() || f.degree() < Degree(2) || f.degree() > Degree(3)) {
        throw MathError(Errc::DegreeOutOfRange, "degree " + f.degree().to_string());
    }
    if (over_z_or_q(f)) {
        std::vector<Rational> roots = rational_roots(f);
        if (roots.empty()) {
            return verdict(Verdict::Irreducible, cert::LowDegreeNoRoot{});
        }
        // Report the root of least absolute value, positive first.
        auto best = std::min_element(roots.begin(), roots.end(), [](const Rational &a, const Rational &b) {
            Rational x = abs(a);
            Rational y = abs(b);
            return x != y ? x < y : a > b;
        });
        return verdict(Verdict::Reducible, cert::RationalRootFound{Element::raw(ring_q(), *best)});
    }
    if (!f.base().is_field() || !f.base().is_finite()) {
        throw MathError(Errc::Unsupported, "low-degree test over " + f.base().to_string());
    }
    std::vector<Element> roots = roots_over_finite(f);
    if (roots.empty()) {
        return verdict(Verdict::Irreducible, cert::LowDegreeNoRoot{});
    }
    return verdict(Verdict::Reducible, cert::RationalRootFound{roots.front()});
}

IrreducibilityVerdict eisenstein_check(const Poly &f, const Integer &p)
{
    if (!is_prime(p)) {
        throw MathError(Errc::InvalidParameters, to_string(p) + " is not prime");
    }
    std::vector<Integer> c = integer_coeffs(f);
    require_primitive(c);
    bool ok = c.back() % p != 0 && c.front() % (p * p) != 0;
    for (std::size_t i = 0; ok && i + 1 < c.size(); ++i) {
        ok = c[i] % p == 0;
    }
    if (ok) {
        return verdict(Verdict::Irreducible, cert::EisensteinAt{p, 0});
    }
    return {};
}

IrreducibilityVerdict eisenstein_translate_search(const Poly &f, std::uint64_t prime_bound, std::uint64_t shift_bound)
{
    require_primitive(integer_coeffs(f));
    Poly g = to_z(integer_coeffs(f));
    std::vector<Integer> primes = primes_up_to(prime_bound);
    for (std::uint64_t k = 0; k <= 2 * shift_bound; ++k) {
        long a = k == 0 ? 0 : (k % 2 == 1 ? static_cast<long>((k + 1) / 2) : -static_cast<long>(k / 2));
        Poly t = translate(g, from_integer(ring_z(), a));
        const Integer &c0 = t.coeffs().front().integer();
        if (c0 == 0) {
            continue;
        }
        for (const auto &p : primes) {
            if (c0 % p != 0) {
                continue;
            }
            if (eisenstein_check(t, p).status == Verdict::Irreducible) {
                return verdict(Verdict::Irreducible, cert::EisensteinAt{p, a});
            }
        }
    }
    return {};
}

IrreducibilityVerdict irreducible_fp(const Poly &f)
{
    Word p = small_prime(f.base());
    if (f.is_zero()) {
        throw MathError(Errc::ZeroInput);
    }
    if (f.is_constant()) {
        throw MathError(Errc::ConstantPolynomial);
    }
    Word lead = 0;
    Vec m = make_monic(to_vec(f), p, lead);
    if (auto g = smallest_monic_divisor(m, p)) {
        return verdict(Verdict::Reducible, cert::TrialDivisorFound{from_vec(f.base(), *g).to_element()});
    }
    return verdict(Verdict::Irreducible, cert::Exhaustive{});
}

IrreducibilityVerdict reduction_mod_p_check(const Poly &f, const Integer &p)
{
    if (!is_prime(p)) {
        throw MathError(Errc::InvalidParameters, to_string(p) + " is not prime");
    }
    std::vector<Integer> c = integer_coeffs(f);
    require_primitive(c);
    if (c.back() % p == 0) {
        throw MathError(Errc::DegreeDrops, "p=" + to_string(p));
    }
    Poly reduced = Poly::from_integers(Ring::mod(p), c);
    if (irreducible_fp(reduced).status == Verdict::Irreducible) {
        return verdict(Verdict::Irreducible, cert::ReductionMod{p});
    }
    return {};
}

IrreducibilityVerdict quad_irreducibility(const Element &x)
{
    if (x.ring().kind() != Kind::QuadInt) {
        throw MathError(Errc::ContextMismatch, "quadratic integer expected, got " + x.ring().to_string());
    }
    if (is_zero(x) || quad_is_unit(x)) {
        return verdict(Verdict::Reducible, cert::None{});
    }
    Integer n = abs(quad_norm_int(x));
    if (is_prime(n)) {
        return verdict(Verdict::Irreducible, cert::PrimeNorm{});
    }
    std::int64_t d = x.ring().quad_d();
    if (d > 0) {
        return {};
    }
    Integer ad(static_cast<long>(-d));
    Integer bmax = isqrt(n / ad);
    for (Integer b = 0; b <= bmax; ++b) {
        Integer amax = isqrt(n - ad * b * b);
        for (Integer a = -amax; a <= amax; ++a) {
            Integer nz = a * a + ad * b * b;
            if (nz <= 1 || nz >= n || n % nz != 0) {
                continue;
            }
            Element z = quad_make(x.ring(), Rational(a), Rational(b));
            if (quad_divides(z, x)) {
                return verdict(Verdict::Reducible, cert::TrialDivisorFound{z});
            }
        }
    }
    return verdict(Verdict::Irreducible, cert::Exhaustive{});
}

IrreducibilityVerdict irreducibility(const Poly &f, const IrreducibilityOptions &opts)
{
    if (f.is_zero()) {
        throw MathError(Errc::ZeroInput);
    }
    if (f.is_constant()) {
        throw MathError(Errc::ConstantPolynomial);
    }
    std::size_t n = f.degree().value();
    if (f.base().kind() == Kind::Mod && f.base().is_field()) {
        if (n == 1) {
            return verdict(Verdict::Irreducible, cert::Exhaustive{});
        }
        if (n <= 3) {
            return low_degree_test(f);
        }
        try {
            return irreducible_fp(f);
        } catch (const MathError &e) {
            if (e.code() != Errc::TooLarge) {
                throw;
            }
            return {};
        }
    }
    if (!over_z_or_q(f)) {
        throw MathError(Errc::Unsupported, "irreducibility over " + f.base().to_string());
    }
    if (f.base().kind() == Kind::Integers) {
        Integer c = content(f);
        if (c > 1) {
            return verdict(Verdict::Reducible, cert::TrialDivisorFound{from_integer(ring_z(), c)});
        }
    }
    if (n == 1) {
        return verdict(Verdict::Irreducible, cert::Exhaustive{});
    }
    if (n <= 3) {
        return low_degree_test(f);
    }
    Poly g = primitive_associate(f);
    std::vector<Rational> roots = rational_roots(g);
    if (!roots.empty()) {
        return verdict(Verdict::Reducible, cert::RationalRootFound{Element::raw(ring_q(), roots.front())});
    }
    IrreducibilityVerdict v = eisenstein_translate_search(g, opts.prime_bound, opts.shift_bound);
    if (v.status == Verdict::Irreducible) {
        return v;
    }
    const Integer &lead = g.leading().integer();
    std::size_t tried = 0;
    for (Integer p = 2; tried < opts.reduction_primes; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (lead % p == 0) {
            continue;
        }
        ++tried;
        try {
            v = reduction_mod_p_check(g, p);
        } catch (const MathError &e) {
            if (e.code() != Errc::TooLarge) {
                throw;
            }
            continue;
        }
        if (v.status == Verdict::Irreducible) {
            return v;
        }
    }
    return {};
}

std::optional<bool> decide_irreducible(const Poly &f)
{
    if (!f.is_zero() && f.degree() == Degree(1) && f.base().is_field()) {
        return true;
    }
    try {
        IrreducibilityVerdict v = irreducibility(f);
        if (v.status == Verdict::Inconclusive) {
            return std::nullopt;
        }
        return v.status == Verdict::Irreducible;
    } catch (const MathError &) {
        return std::nullopt;
    }
}

// ---- squarefree parts -----------------------------------------------------

Integer squarefree_part(const Integer &n)
{
    Integer s = 1;
    for (const auto &[p, e] : factor_integer(n).factors) {
        if (e % 2 == 1) {
            s *= p.integer();
        }
    }
    return s;
}

Poly squarefree_part(const Poly &f)
{
    if (f.is_zero()) {
        throw MathError(Errc::ZeroInput);
    }
    if (f.base().kind() == Kind::Mod && f.base().is_field()) {
        Poly s = Poly::constant(one(f.base()));
        for (const auto &[g, e] : factor_poly_fp(f).factors) {
            if (e % 2 == 1) {
                s = s * Poly::from_element(g);
            }
        }
        return s;
    }
    if (!over_z_or_q(f)) {
        throw MathError(Errc::Unsupported, "squarefree part over " + f.base().to_string());
    }
    // Yun's decomposition f = c * a1 * a2^2 * a3^3 * ...; keep the odd a_i.
    Ring qx = Ring::poly(ring_q());
    Element b = to_q(f).to_element(qx);
    Element fd = derivative(to_q(f)).to_element(qx);
    Element a0 = euclid_gcd(b, fd);
    b = euclid_divmod(b, a0).q;
    Element c = euclid_divmod(fd, a0).q;
    Element s = one(qx);
    for (unsigned i = 1; Poly::from_element(b).degree() > Degree(0); ++i) {
        Element d = c - derivative(Poly::from_element(b)).to_element(qx);
        Element a = euclid_gcd(b, d);
        if (i % 2 == 1) {
            s = s * a;
        }
        b = euclid_divmod(b, a).q;
        c = euclid_divmod(d, a).q;
    }
    Poly z = primitive_associate(Poly::from_element(s));
    return f.base().kind() == Kind::Integers ? z : to_q(z);
}

// ---- certificate checks ---------------------------------------------------

namespace
{

bool verify_poly(const Poly &f, const IrreducibilityVerdict &v)
{
    using namespace cert;
    bool fp = f.base().kind() == Kind::Mod && f.base().is_field();
    bool zq = over_z_or_q(f);
    if (f.is_constant() || (!fp && !zq)) {
        return false;
    }
    std::size_t n = f.degree().value();
    bool z_primitive = f.base().kind() != Kind::Integers || content(f) == 1;

    if (auto *c = std::get_if<EisensteinAt>(&v.certificate)) {
        if (v.status != Verdict::Irreducible || !zq || !z_primitive) {
            return false;
        }
        Poly t = primitive_associate(translate(to_q(f), Element::raw(ring_q(), Rational(c->shift))));
        return eisenstein_check(t, c->p).status == Verdict::Irreducible;
    }
    if (auto *c = std::get_if<ReductionMod>(&v.certificate)) {
        if (v.status != Verdict::Irreducible || !zq || !z_primitive) {
            return false;
        }
        return reduction_mod_p_check(primitive_associate(f), c->p).status == Verdict::Irreducible;
    }
    if (std::holds_alternative<LowDegreeNoRoot>(v.certificate)) {
        if (v.status != Verdict::Irreducible || n < 2 || n > 3 || !z_primitive) {
            return false;
        }
        return fp ? roots_over_finite(f).empty() : rational_roots(f).empty();
    }
    if (auto *c = std::get_if<RationalRootFound>(&v.certificate)) {
        if (v.status != Verdict::Reducible || n < 2) {
            return false;
        }
        if (fp) {
            return c->root.ring() == f.base() && is_zero(poly_eval(f, c->root));
        }
        if (c->root.ring().kind() != Kind::Rationals) {
            return false;
        }
        return is_zero(poly_eval(to_q(f), c->root));
    }
    if (auto *c = std::get_if<TrialDivisorFound>(&v.certificate)) {
        if (v.status != Verdict::Reducible) {
            return false;
        }
        if (c->divisor.ring().kind() == Kind::Integers) {
            // A non-unit constant dividing every coefficient over Z.
            const Integer &g = c->divisor.integer();
            return f.base().kind() == Kind::Integers && abs(g) > 1 && content(f) % g == 0;
        }
        Poly g = Poly::from_element(c->divisor);
        if (!(g.base() == f.base()) || g.degree() < Degree(1) || g.degree() >= f.degree()) {
            return false;
        }
        try {
            exact_divide(fp ? f : to_q(f), fp ? g : to_q(g));
            return true;
        } catch (const MathError &) {
            return false;
        }
    }
    if (std::holds_alternative<Exhaustive>(v.certificate)) {
        if (v.status != Verdict::Irreducible) {
            return false;
        }
        if (n == 1) {
            return z_primitive;
        }
        return fp && irreducible_fp(f).status == Verdict::Irreducible;
    }
    return false;
}

bool verify_quad(const Element &x, const IrreducibilityVerdict &v)
{
    if (is_zero(x) || quad_is_unit(x)) {
        return false;
    }
    Integer n = abs(quad_norm_int(x));
    if (std::holds_alternative<cert::PrimeNorm>(v.certificate)) {
        return v.status == Verdict::Irreducible && is_prime(n);
    }
    if (auto *c = std::get_if<cert::TrialDivisorFound>(&v.certificate)) {
        if (v.status != Verdict::Reducible || !(c->divisor.ring() == x.ring())) {
            return false;
        }
        Integer nz = abs(quad_norm_int(c->divisor));
        return nz > 1 && nz < n && quad_divides(c->divisor, x);
    }
    if (std::holds_alternative<cert::Exhaustive>(v.certificate)) {
        return v.status == Verdict::Irreducible && quad_irreducible_by_norm(x);
    }
    return false;
}

} // namespace

bool verify_certificate(const Poly &f, const IrreducibilityVerdict &v)
{
    try {
        return verify_poly(f, v);
    } catch (const MathError &) {
        return false;
    }
}

bool verify_certificate(const Element &subject, const IrreducibilityVerdict &v)
{
    try {
        switch (subject.ring().kind()) {
        case Kind::Poly:
            return verify_poly(Poly::from_element(subject), v);
        case Kind::QuadInt:
            return verify_quad(subject, v);
        default:
            return false;
        }
    } catch (const MathError &) {
        return false;
    }
}

} // namespace ringkit

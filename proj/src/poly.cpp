#include <ringkit/poly.hpp>

#include <algorithm>

#include <ringkit/algebra.hpp>
#include <ringkit/literal.hpp>

namespace ringkit
{

std::size_t Degree::value() const
{
    if (!finite_) {
        throw MathError(Errc::ZeroPolynomial, "degree is -infinity");
    }
    return value_;
}

std::string Degree::to_string() const
{
    return finite_ ? std::to_string(value_) : "-inf";
}

Poly::Poly(Ring base) : base_(std::move(base)) {}

Poly::Poly(Ring base, std::vector<Element> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs))
{
    strip();
}

void Poly::strip()
{
    while (!coeffs_.empty() && ringkit::is_zero(coeffs_.back())) {
        coeffs_.pop_back();
    }
}

Poly Poly::from_element(const Element &e)
{
    if (e.ring().kind() != Kind::Poly) {
        throw MathError(Errc::ContextMismatch, "not a polynomial: " + e.ring().to_string());
    }
    return Poly(e.ring().base(), e.items());
}

Poly Poly::constant(const Element &c)
{
    return Poly(c.ring(), {c});
}

Poly Poly::monomial(const Element &c, std::size_t k)
{
    std::vector<Element> v(k + 1, zero(c.ring()));
    v[k] = c;
    return Poly(c.ring(), std::move(v));
}

Poly Poly::variable(const Ring &base)
{
    return monomial(one(base), 1);
}

Poly Poly::from_integers(const Ring &base, std::initializer_list<long> ascending)
{
    std::vector<Element> v;
    for (long c : ascending) {
        v.push_back(from_integer(base, c));
    }
    return Poly(base, std::move(v));
}

Poly Poly::from_integers(const Ring &base, const std::vector<Integer> &ascending)
{
    std::vector<Element> v;
    for (const auto &c : ascending) {
        v.push_back(from_integer(base, c));
    }
    return Poly(base, std::move(v));
}

Degree Poly::degree() const noexcept
{
    return coeffs_.empty() ? Degree() : Degree(coeffs_.size() - 1);
}

Element Poly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : zero(base_);
}

const Element &Poly::leading() const
{
    if (coeffs_.empty()) {
        throw MathError(Errc::ZeroPolynomial, "leading coefficient of 0");
    }
    return coeffs_.back();
}

bool Poly::is_monic() const
{
    return !coeffs_.empty() && is_one(coeffs_.back());
}

Element Poly::to_element() const
{
    return Element::raw(Ring::poly(base_), coeffs_);
}

Element Poly::to_element(const Ring &poly_ring) const
{
    return Element::raw(poly_ring, coeffs_);
}

bool operator==(const Poly &a, const Poly &b)
{
    return a.base_ == b.base_ && a.coeffs_ == b.coeffs_;
}

namespace
{

void same_base(const Poly &a, const Poly &b)
{
    if (!(a.base() == b.base())) {
        throw MathError(Errc::ContextMismatch, a.base().to_string() + " vs " + b.base().to_string());
    }
}

} // namespace

Poly operator+(const Poly &a, const Poly &b)
{
    same_base(a, b);
    const auto &x = a.coeffs();
    const auto &y = b.coeffs();
    std::vector<Element> out(std::max(x.size(), y.size()), zero(a.base()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < x.size() && i < y.size()) {
            out[i] = x[i] + y[i];
        } else {
            out[i] = i < x.size() ? x[i] : y[i];
        }
    }
    return Poly(a.base(), std::move(out));
}

Poly operator-(const Poly &a)
{
    std::vector<Element> out;
    out.reserve(a.coeffs().size());
    for (const auto &c : a.coeffs()) {
        out.push_back(-c);
    }
    return Poly(a.base(), std::move(out));
}

Poly operator-(const Poly &a, const Poly &b)
{
    return a + (-b);
}

Poly operator*(const Poly &a, const Poly &b)
{
    same_base(a, b);
    if (a.is_zero() || b.is_zero()) {
        return Poly(a.base());
    }
    const auto &x = a.coeffs();
    const auto &y = b.coeffs();
    std::vector<Element> out(x.size() + y.size() - 1, zero(a.base()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) {
            continue;
        }
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] = out[i + j] + x[i] * y[j];
        }
    }
    return Poly(a.base(), std::move(out));
}

Poly scale(const Poly &p, const Element &c)
{
    std::vector<Element> out;
    out.reserve(p.coeffs().size());
    for (const auto &a : p.coeffs()) {
        out.push_back(c * a);
    }
    return Poly(p.base(), std::move(out));
}

Poly shift_up(const Poly &p, std::size_t k)
{
    if (p.is_zero()) {
        return p;
    }
    std::vector<Element> out(k, zero(p.base()));
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly(p.base(), std::move(out));
}

Poly pow(const Poly &p, unsigned n)
{
    Poly result = Poly::constant(one(p.base()));
    Poly b = p;
    while (n) {
        if (n & 1U) {
            result = result * b;
        }
        n >>= 1U;
        if (n) {
            b = b * b;
        }
    }
    return result;
}

Element poly_eval(const Poly &p, const Element &r)
{
    const Ring &target = r.ring();
    if (p.is_zero()) {
        return zero(target);
    }
    const auto &c = p.coeffs();
    Element acc = lift(c.back(), target);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * r + lift(c[i], target);
    }
    return acc;
}

Poly translate(const Poly &p, const Element &a)
{
    Ring pr = Ring::poly(p.base());
    Poly shifted = Poly::variable(p.base()) + Poly::constant(a);
    return Poly::from_element(poly_eval(p, shifted.to_element(pr)));
}

ScaledDivision divrem_scaled(const Poly &f, const Poly &g)
{
    same_base(f, g);
    if (g.is_zero()) {
        throw MathError(Errc::DivisionByZeroPoly);
    }
    const Ring &base = f.base();
    if (!base.is_commutative()) {
        throw MathError(Errc::Unsupported, "scaled division over " + base.to_string());
    }
    const Element &b = g.leading();
    std::size_t dg = g.degree().value();
    ScaledDivision out{0, Poly(base), f};
    while (!out.r.is_zero() && out.r.degree().value() >= dg) {
        std::size_t k = out.r.degree().value() - dg;
        Element a = out.r.leading();
        out.r = scale(out.r, b) - shift_up(scale(g, a), k);
        out.q = scale(out.q, b) + Poly::monomial(a, k);
        ++out.m;
    }
    return out;
}

Division divrem_field(const Poly &f, const Poly &g)
{
    same_base(f, g);
    if (g.is_zero()) {
        throw MathError(Errc::DivisionByZeroPoly);
    }
    const Ring &base = f.base();
    if (!base.is_field()) {
        throw MathError(Errc::NotAField, base.to_string());
    }
    Element inv = inverse(g.leading());
    std::size_t dg = g.degree().value();
    std::vector<Element> r = f.coeffs();
    std::size_t qlen = r.size() >= dg + 1 ? r.size() - dg : 0;
    std::vector<Element> q(qlen, zero(base));
    const auto &gc = g.coeffs();
    for (std::size_t k = qlen; k-- > 0;) {
        const Element &lead = r[k + dg];
        if (is_zero(lead)) {
            continue;
        }
        Element t = lead * inv;
        q[k] = t;
        for (std::size_t j = 0; j <= dg; ++j) {
            r[k + j] = r[k + j] - t * gc[j];
        }
    }
    return {Poly(base, std::move(q)), Poly(base, std::move(r))};
}

Poly factor_theorem_split(const Poly &p, const Element &a)
{
    if (!is_zero(poly_eval(p, a))) {
        throw MathError(Errc::NotARoot, format(a));
    }
    if (p.is_zero()) {
        return p;
    }
    // Synthetic division by x - a.
    const auto &c = p.coeffs();
    std::size_t n = c.size() - 1;
    std::vector<Element> t(n, zero(p.base()));
    Element carry = zero(p.base());
    for (std::size_t i = n; i-- > 0;) {
        carry = c[i + 1] + carry * a;
        t[i] = carry;
    }
    return Poly(p.base(), std::move(t));
}

std::vector<Element> roots_over_finite(const Poly &p)
{
    if (p.is_zero()) {
        throw MathError(Errc::ZeroPolynomial, "every element is a root of 0");
    }
    std::vector<Element> roots;
    for (const auto &a : enumerate(p.base())) {
        if (is_zero(poly_eval(p, a))) {
            roots.push_back(a);
        }
    }
    return roots;
}

Poly lagrange_interpolate(const Ring &field, const std::vector<std::pair<Element, Element>> &points)
{
    if (!field.is_field()) {
        throw MathError(Errc::NotAField, field.to_string());
    }
    if (points.empty()) {
        throw MathError(Errc::InvalidParameters, "no interpolation nodes");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw MathError(Errc::DuplicateNode, format(points[i].first));
            }
        }
    }
    Poly result(field);
    for (std::size_t k = 0; k < points.size(); ++k) {
        Poly basis = Poly::constant(one(field));
        Element denom = one(field);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == k) {
                continue;
            }
            basis = basis * Poly(field, {-points[j].first, one(field)});
            denom = denom * (points[k].first - points[j].first);
        }
        result = result + scale(basis, points[k].second * inverse(denom));
    }
    return result;
}

Poly derivative(const Poly &p)
{
    if (p.coeffs().size() <= 1) {
        return Poly(p.base());
    }
    std::vector<Element> out;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        out.push_back(int_scale(Integer(static_cast<unsigned long>(i)), p.coeffs()[i]));
    }
    return Poly(p.base(), std::move(out));
}

Poly exact_divide(const Poly &f, const Poly &g)
{
    same_base(f, g);
    if (g.is_zero()) {
        throw MathError(Errc::DivisionByZeroPoly);
    }
    const Ring &base = f.base();
    if (base.is_field()) {
        Division d = divrem_field(f, g);
        if (!d.r.is_zero()) {
            throw MathError(Errc::NotInvertible, to_string(g) + " does not divide " + to_string(f));
        }
        return d.q;
    }
    if (!base.is_domain()) {
        throw MathError(Errc::NotADomain, base.to_string());
    }
    std::size_t dg = g.degree().value();
    Poly r = f;
    std::vector<Element> q(f.coeffs().size() >= dg + 1 ? f.coeffs().size() - dg : 0, zero(base));
    while (!r.is_zero()) {
        if (r.degree().value() < dg) {
            throw MathError(Errc::NotInvertible, to_string(g) + " does not divide " + to_string(f));
        }
        std::size_t k = r.degree().value() - dg;
        Element t;
        try {
            t = divide(r.leading(), g.leading());
        } catch (const MathError &) {
            throw MathError(Errc::NotInvertible, to_string(g) + " does not divide " + to_string(f));
        }
        q[k] = t;
        r = r - shift_up(scale(g, t), k);
    }
    return Poly(base, std::move(q));
}

std::string to_string(const Poly &p)
{
    return format(p.to_element());
}

} // namespace ringkit

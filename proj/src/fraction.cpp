#include <ringkit/fraction.hpp>

#include <ringkit/euclid.hpp>
#include <ringkit/literal.hpp>
#include <ringkit/poly.hpp>

namespace ringkit
{

Frac::Frac(Element num, Element den) : Frac(frac_make(num, den)) {}

Frac::Frac(Element num, Element den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

Frac Frac::from_element(const Element &e)
{
    if (e.ring().kind() != Kind::Frac) {
        throw MathError(Errc::ContextMismatch, "not a fraction: " + e.ring().to_string());
    }
    return Frac(e.items()[0], e.items()[1], Canonical{});
}

Frac Frac::embed(const Element &a)
{
    return frac_make(a, one(a.ring()));
}

Element Frac::to_element() const
{
    return Element::raw(Ring::frac(base()), Element::Items{num_, den_});
}

Element Frac::to_element(const Ring &frac_ring) const
{
    return Element::raw(frac_ring, Element::Items{num_, den_});
}

bool has_canonical_fractions(const Ring &base)
{
    return base.kind() == Kind::Integers || base.is_field() ||
           (base.kind() == Kind::Poly && base.base().is_field());
}

Frac frac_make(const Element &num, const Element &den)
{
    require_same_ring(num, den);
    const Ring &base = num.ring();
    if (!base.is_domain()) {
        throw MathError(Errc::NotADomain, base.to_string());
    }
    if (is_zero(den)) {
        throw MathError(Errc::ZeroDenominator);
    }
    if (is_zero(num)) {
        return Frac(num, one(base), Frac::Canonical{});
    }
    if (base.is_field()) {
        return Frac(divide(num, den), one(base), Frac::Canonical{});
    }
    if (base.kind() == Kind::Integers) {
        Integer g = gcd(num.integer(), den.integer());
        if (den.integer() < 0) {
            g = -g;
        }
        return Frac(Element::raw(base, Integer(num.integer() / g)), Element::raw(base, Integer(den.integer() / g)),
                    Frac::Canonical{});
    }
    if (base.kind() == Kind::Poly && base.base().is_field()) {
        Element g = euclid_gcd(num, den);
        Element n = euclid_divmod(num, g).q;
        Element d = euclid_divmod(den, g).q;
        Element u = normalizing_unit(d);
        return Frac(n * u, d * u, Frac::Canonical{});
    }
    return Frac(num, den, Frac::Canonical{});
}

Frac frac_add(const Frac &f, const Frac &g)
{
    return frac_make(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

Frac frac_neg(const Frac &f)
{
    return frac_make(-f.num(), f.den());
}

Frac frac_sub(const Frac &f, const Frac &g)
{
    return frac_add(f, frac_neg(g));
}

Frac frac_mul(const Frac &f, const Frac &g)
{
    return frac_make(f.num() * g.num(), f.den() * g.den());
}

Frac frac_inverse(const Frac &f)
{
    if (is_zero(f.num())) {
        throw MathError(Errc::DivisionByZero);
    }
    return frac_make(f.den(), f.num());
}

Frac frac_div(const Frac &f, const Frac &g)
{
    return frac_mul(f, frac_inverse(g));
}

bool frac_eq(const Frac &f, const Frac &g)
{
    return f.base() == g.base() && f.num() * g.den() == g.num() * f.den();
}

std::string to_string(const Frac &f)
{
    return format(f.to_element());
}

} // namespace ringkit

#ifndef RINGKIT_FRACTION_HPP
#define RINGKIT_FRACTION_HPP

#include <string>

#include <ringkit/ring.hpp>

namespace ringkit
{

// num/den over an integral domain. Over Z the denominator is positive and
// the fraction is in lowest terms; over k[x] the denominator is monic and
// coprime to the numerator. Other bases store the pair as given (zero
// numerators are normalized to 0/1) and compare by cross-multiplication.
class Frac
{
public:
    Frac(Element num, Element den);

    static Frac from_element(const Element &e);
    // a/1
    static Frac embed(const Element &a);

    const Ring &base() const noexcept { return num_.ring(); }
    const Element &num() const noexcept { return num_; }
    const Element &den() const noexcept { return den_; }

    Element to_element() const;
    Element to_element(const Ring &frac_ring) const;

private:
    struct Canonical {};
    Frac(Element num, Element den, Canonical);

    Element num_;
    Element den_;

    friend Frac frac_make(const Element &num, const Element &den);
};

// Whether frac_make reduces to a canonical representative over this base.
bool has_canonical_fractions(const Ring &base);

// Throws ZeroDenominator, NotADomain.
Frac frac_make(const Element &num, const Element &den);

Frac frac_add(const Frac &f, const Frac &g);
Frac frac_sub(const Frac &f, const Frac &g);
Frac frac_neg(const Frac &f);
Frac frac_mul(const Frac &f, const Frac &g);
// Throws DivisionByZero.
Frac frac_div(const Frac &f, const Frac &g);
Frac frac_inverse(const Frac &f);
// a/b == c/d iff ad == bc.
bool frac_eq(const Frac &f, const Frac &g);

std::string to_string(const Frac &f);

} // namespace ringkit

#endif

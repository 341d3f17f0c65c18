#ifndef RINGKIT_POLY_HPP
#define RINGKIT_POLY_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <ringkit/ring.hpp>

namespace ringkit
{

// Natural number or -infinity; the zero polynomial has degree -infinity and
// -infinity absorbs addition.
class Degree
{
public:
    constexpr Degree() noexcept = default;
    constexpr explicit Degree(std::size_t value) noexcept : finite_(true), value_(value) {}

    static constexpr Degree neg_infinity() noexcept { return Degree(); }

    constexpr bool is_neg_infinity() const noexcept { return !finite_; }
    std::size_t value() const;

    friend constexpr Degree operator+(Degree a, Degree b) noexcept
    {
        if (!a.finite_ || !b.finite_) {
            return Degree();
        }
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) noexcept
    {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept
    {
        if (a.finite_ != b.finite_) {
            return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (!a.finite_) {
            return std::strong_ordering::equal;
        }
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    bool finite_ = false;
    std::size_t value_ = 0;
};

// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i and the
// last stored coefficient is nonzero.
class Poly
{
public:
    explicit Poly(Ring base);
    Poly(Ring base, std::vector<Element> coeffs);

    // e must belong to a Poly ring.
    static Poly from_element(const Element &e);
    static Poly constant(const Element &c);
    static Poly monomial(const Element &c, std::size_t k);
    static Poly variable(const Ring &base);
    static Poly from_integers(const Ring &base, std::initializer_list<long> ascending);
    static Poly from_integers(const Ring &base, const std::vector<Integer> &ascending);

    const Ring &base() const noexcept { return base_; }
    const std::vector<Element> &coeffs() const noexcept { return coeffs_; }
    std::vector<Element> release() && { return std::move(coeffs_); }

    Degree degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    Element coeff(std::size_t i) const;
    const Element &leading() const;
    bool is_monic() const;

    Element to_element() const;
    Element to_element(const Ring &poly_ring) const;

    friend bool operator==(const Poly &a, const Poly &b);

private:
    void strip();

    Ring base_;
    std::vector<Element> coeffs_;
};

Poly operator+(const Poly &a, const Poly &b);
Poly operator-(const Poly &a, const Poly &b);
Poly operator-(const Poly &a);
Poly operator*(const Poly &a, const Poly &b);
Poly scale(const Poly &p, const Element &c);
Poly shift_up(const Poly &p, std::size_t k); // p * x^k
Poly pow(const Poly &p, unsigned n);

inline Degree degree(const Poly &p) { return p.degree(); }

// Substitution x -> r; left substitution over noncommutative bases.
Element poly_eval(const Poly &p, const Element &r);
// p(x + a)
Poly translate(const Poly &p, const Element &a);

struct ScaledDivision {
    std::size_t m; // b^m * f = q*g + r, b = leading coefficient of g
    Poly q;
    Poly r;
};

// Division with remainder over any commutative ring, scaling f by powers of
// the leading coefficient of g instead of dividing by it.
ScaledDivision divrem_scaled(const Poly &f, const Poly &g);

struct Division {
    Poly q;
    Poly r;
};

// Division algorithm over a field; (q, r) is unique.
Division divrem_field(const Poly &f, const Poly &g);

// t with p = (x - a) * t; throws NotARoot when p(a) != 0.
Poly factor_theorem_split(const Poly &p, const Element &a);

// Exhaustive roots over a finite base, in enumeration order.
std::vector<Element> roots_over_finite(const Poly &p);

// Unique p with deg p < n and p(a_k) = b_k.
Poly lagrange_interpolate(const Ring &field, const std::vector<std::pair<Element, Element>> &points);

Poly derivative(const Poly &p);

// Exact quotient f / g over an integral domain; throws NotInvertible when g
// does not divide f.
Poly exact_divide(const Poly &f, const Poly &g);

std::string to_string(const Poly &p);

} // namespace ringkit

#endif

#ifndef RINGKIT_SERIES_HPP
#define RINGKIT_SERIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <ringkit/poly.hpp>
#include <ringkit/ring.hpp>

namespace ringkit
{

// Power series known up to O(x^N); exactly N coefficients are stored,
// trailing zeros included.
class TruncSeries
{
public:
    TruncSeries(Ring base, std::vector<Element> coeffs);
    // Zero series of the given precision.
    TruncSeries(Ring base, std::size_t precision);

    static TruncSeries from_element(const Element &e);
    static TruncSeries from_poly(const Poly &p, std::size_t precision);

    const Ring &base() const noexcept { return base_; }
    const std::vector<Element> &coeffs() const noexcept { return coeffs_; }
    std::vector<Element> release() && { return std::move(coeffs_); }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    const Element &operator[](std::size_t i) const { return coeffs_.at(i); }

    TruncSeries truncate(std::size_t precision) const;
    Element to_element() const;

    friend bool operator==(const TruncSeries &a, const TruncSeries &b);

private:
    Ring base_;
    std::vector<Element> coeffs_;
};

// Results carry the smaller operand precision.
TruncSeries ts_add(const TruncSeries &f, const TruncSeries &g);
TruncSeries ts_sub(const TruncSeries &f, const TruncSeries &g);
TruncSeries ts_neg(const TruncSeries &f);
TruncSeries ts_mul(const TruncSeries &f, const TruncSeries &g);

// Inverse via b_0 = a_0^{-1}, b_n = -a_0^{-1} * sum_{i=1}^{n} a_i b_{n-i}.
// Throws ConstantTermNotUnit.
TruncSeries ts_invert(const TruncSeries &f);

// ord f: Known(n) when coefficient n is the first nonzero one; AtLeast(N)
// when every stored coefficient vanishes.
class OrderVal
{
public:
    static OrderVal known(std::size_t n) { return OrderVal(true, n); }
    static OrderVal at_least(std::size_t n) { return OrderVal(false, n); }

    bool is_known() const noexcept { return known_; }
    std::size_t value() const noexcept { return value_; }
    std::string to_string() const;

    friend bool operator==(const OrderVal &a, const OrderVal &b) = default;

private:
    OrderVal(bool known, std::size_t value) : known_(known), value_(value) {}

    bool known_;
    std::size_t value_;
};

OrderVal ts_ord(const TruncSeries &f);

struct LaurentSeries {
    Ring base;
    // (exponent < 0, nonzero coefficient), ascending exponents.
    std::vector<std::pair<long, Element>> principal;
    TruncSeries tail;

    // Coefficient of x^e, e below the tail precision.
    Element coeff(long e) const;
    std::string to_string() const;
};

// p/q written as x^{-n} * p * r^{-1} where q = x^n * r and r(0) is a unit.
LaurentSeries laurent_from_fraction(const TruncSeries &p, const TruncSeries &q);

// Defined only for equal tail precision; throws PrecisionMismatch otherwise.
bool laurent_equal(const LaurentSeries &a, const LaurentSeries &b);

std::string to_string(const TruncSeries &f);

} // namespace ringkit

#endif

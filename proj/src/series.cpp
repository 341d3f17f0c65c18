#include <ringkit/series.hpp>

#include <algorithm>

#include <ringkit/literal.hpp>

namespace ringkit
{

TruncSeries::TruncSeries(Ring base, std::vector<Element> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {}

TruncSeries::TruncSeries(Ring base, std::size_t precision)
    : base_(std::move(base)), coeffs_(precision, zero(base_))
{
}

TruncSeries TruncSeries::from_element(const Element &e)
{
    if (e.ring().kind() != Kind::Series) {
        throw MathError(Errc::ContextMismatch, "not a series: " + e.ring().to_string());
    }
    return TruncSeries(e.ring().base(), e.items());
}

TruncSeries TruncSeries::from_poly(const Poly &p, std::size_t precision)
{
    std::vector<Element> c(precision, zero(p.base()));
    for (std::size_t i = 0; i < precision && i < p.coeffs().size(); ++i) {
        c[i] = p.coeffs()[i];
    }
    return TruncSeries(p.base(), std::move(c));
}

TruncSeries TruncSeries::truncate(std::size_t precision) const
{
    std::vector<Element> c(coeffs_.begin(), coeffs_.begin() + std::min(precision, coeffs_.size()));
    return TruncSeries(base_, std::move(c));
}

Element TruncSeries::to_element() const
{
    return Element::raw(Ring::series(base_, coeffs_.size()), coeffs_);
}

bool operator==(const TruncSeries &a, const TruncSeries &b)
{
    return a.base_ == b.base_ && a.coeffs_ == b.coeffs_;
}

namespace
{

void same_base(const TruncSeries &f, const TruncSeries &g)
{
    if (!(f.base() == g.base())) {
        throw MathError(Errc::ContextMismatch, f.base().to_string() + " vs " + g.base().to_string());
    }
}

} // namespace

TruncSeries ts_add(const TruncSeries &f, const TruncSeries &g)
{
    same_base(f, g);
    std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Element> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(f[i] + g[i]);
    }
    return TruncSeries(f.base(), std::move(c));
}

TruncSeries ts_neg(const TruncSeries &f)
{
    std::vector<Element> c;
    c.reserve(f.precision());
    for (const auto &a : f.coeffs()) {
        c.push_back(-a);
    }
    return TruncSeries(f.base(), std::move(c));
}

TruncSeries ts_sub(const TruncSeries &f, const TruncSeries &g)
{
    return ts_add(f, ts_neg(g));
}

TruncSeries ts_mul(const TruncSeries &f, const TruncSeries &g)
{
    same_base(f, g);
    std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Element> c(n, zero(f.base()));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(f[i])) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            c[i + j] = c[i + j] + f[i] * g[j];
        }
    }
    return TruncSeries(f.base(), std::move(c));
}

TruncSeries ts_invert(const TruncSeries &f)
{
    if (f.precision() == 0 || !is_unit(f[0])) {
        throw MathError(Errc::ConstantTermNotUnit, f.precision() ? format(f[0]) : std::string("empty series"));
    }
    Element a0inv = inverse(f[0]);
    std::vector<Element> b(f.precision(), zero(f.base()));
    b[0] = a0inv;
    for (std::size_t n = 1; n < f.precision(); ++n) {
        Element s = zero(f.base());
        for (std::size_t i = 1; i <= n; ++i) {
            s = s + f[i] * b[n - i];
        }
        b[n] = -(a0inv * s);
    }
    return TruncSeries(f.base(), std::move(b));
}

std::string OrderVal::to_string() const
{
    return known_ ? std::to_string(value_) : ">=" + std::to_string(value_);
}

OrderVal ts_ord(const TruncSeries &f)
{
    for (std::size_t i = 0; i < f.precision(); ++i) {
        if (!is_zero(f[i])) {
            return OrderVal::known(i);
        }
    }
    return OrderVal::at_least(f.precision());
}

Element LaurentSeries::coeff(long e) const
{
    if (e < 0) {
        for (const auto &[k, c] : principal) {
            if (k == e) {
                return c;
            }
        }
        return zero(base);
    }
    if (static_cast<std::size_t>(e) >= tail.precision()) {
        throw MathError(Errc::PrecisionMismatch, "coefficient " + std::to_string(e) + " beyond O(x^" +
                                                     std::to_string(tail.precision()) + ")");
    }
    return tail[static_cast<std::size_t>(e)];
}

std::string LaurentSeries::to_string() const
{
    std::string var = variable_name(Ring::series(base, std::max<std::size_t>(tail.precision(), 1)));
    std::vector<std::pair<Element, std::string>> terms;
    auto mono = [&](long e) -> std::string {
        if (e == 0) {
            return "";
        }
        if (e == 1) {
            return var;
        }
        return var + "^" + std::to_string(e);
    };
    for (const auto &[e, c] : principal) {
        terms.emplace_back(c, mono(e));
    }
    for (std::size_t i = 0; i < tail.precision(); ++i) {
        terms.emplace_back(tail[i], mono(static_cast<long>(i)));
    }
    std::string s = format_sum(terms);
    if (s == "0") {
        s.clear();
    } else {
        s += "+";
    }
    return s + "O(" + var + "^" + std::to_string(tail.precision()) + ")";
}

LaurentSeries laurent_from_fraction(const TruncSeries &p, const TruncSeries &q)
{
    same_base(p, q);
    OrderVal ord = ts_ord(q);
    if (!ord.is_known()) {
        throw MathError(Errc::DenominatorIndistinguishableFromZero, "O(x^" + std::to_string(q.precision()) + ")");
    }
    std::size_t n = ord.value();
    std::vector<Element> rc(q.coeffs().begin() + static_cast<long>(n), q.coeffs().end());
    TruncSeries r(q.base(), std::move(rc));
    TruncSeries s = ts_mul(p.truncate(std::min(p.precision(), r.precision())), ts_invert(r));

    LaurentSeries out{p.base(), {}, TruncSeries(p.base(), std::size_t{0})};
    std::vector<Element> tail;
    for (std::size_t i = 0; i < s.precision(); ++i) {
        long e = static_cast<long>(i) - static_cast<long>(n);
        if (e < 0) {
            if (!is_zero(s[i])) {
                out.principal.emplace_back(e, s[i]);
            }
        } else {
            tail.push_back(s[i]);
        }
    }
    out.tail = TruncSeries(p.base(), std::move(tail));
    return out;
}

bool laurent_equal(const LaurentSeries &a, const LaurentSeries &b)
{
    if (a.tail.precision() != b.tail.precision()) {
        throw MathError(Errc::PrecisionMismatch,
                        std::to_string(a.tail.precision()) + " vs " + std::to_string(b.tail.precision()));
    }
    if (a.principal.size() != b.principal.size() || !(a.tail == b.tail)) {
        return false;
    }
    for (std::size_t i = 0; i < a.principal.size(); ++i) {
        if (a.principal[i].first != b.principal[i].first || !(a.principal[i].second == b.principal[i].second)) {
            return false;
        }
    }
    return true;
}

std::string to_string(const TruncSeries &f)
{
    return format(f.to_element());
}

} // namespace ringkit

#include <ringkit/ring.hpp>

#include <algorithm>
#include <ostream>

#include <ringkit/algebra.hpp>
#include <ringkit/euclid.hpp>
#include <ringkit/factor.hpp>
#include <ringkit/fraction.hpp>
#include <ringkit/literal.hpp>
#include <ringkit/matrix.hpp>
#include <ringkit/multivar.hpp>
#include <ringkit/number_rings.hpp>
#include <ringkit/poly.hpp>
#include <ringkit/quotient.hpp>
#include <ringkit/series.hpp>

namespace ringkit
{

namespace detail
{

struct RingData {
    Kind kind = Kind::Integers;
    Integer n;
    std::int64_t d = 0;
    std::size_t size = 0;
    std::vector<Ring> children;
    std::vector<Element> modulus;

    bool commutative = false;
    bool domain = false;
    bool gcd_domain = false;
    bool euclidean = false;
    bool field = false;
    bool finite = false;
};

} // namespace detail

namespace
{

using detail::RingData;

void set_flags(RingData &d, bool comm, bool domain, bool gcd, bool euclid, bool field)
{
    d.commutative = comm;
    d.domain = domain && comm;
    d.gcd_domain = gcd && d.domain;
    d.euclidean = euclid && d.gcd_domain;
    d.field = field && d.euclidean;
}

void copy_flags(RingData &d, const Ring &r)
{
    set_flags(d, r.is_commutative(), r.is_domain(), r.is_gcd_domain(), r.is_euclidean(), r.is_field());
    d.finite = r.is_finite();
}

// Whether base/(m) is a field, decided per Euclidean instance.
bool quotient_is_field(const Ring &base, const Element &m)
{
    switch (base.kind()) {
    case Kind::Integers:
        return is_prime(m.integer());
    case Kind::QuadInt: {
        // Gaussian primes: prime norm, or an associate of a rational prime
        // q = 3 mod 4.
        Integer norm = quad_norm_int(m);
        if (is_prime(norm)) {
            return true;
        }
        const Quad &q = m.quad();
        Integer a = abs(q.a.get_num());
        Integer b = abs(q.b.get_num());
        Integer p = a == 0 ? b : (b == 0 ? a : Integer(0));
        return p != 0 && is_prime(p) && mod_floor(p, 4) == 3;
    }
    case Kind::Poly: {
        auto verdict = decide_irreducible(Poly::from_element(m));
        return verdict.value_or(false);
    }
    default:
        return false;
    }
}

const Ring &shared_integers()
{
    static const Ring z = [] {
        return Ring::integers();
    }();
    return z;
}

} // namespace

// ---- Ring -----------------------------------------------------------------

Ring::Ring() : Ring(shared_integers()) {}

Ring::Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}

Ring Ring::integers()
{
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Integers;
    set_flags(*d, true, true, true, true, false);
    return Ring(std::move(d));
}

Ring Ring::rationals()
{
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Rationals;
    set_flags(*d, true, true, true, true, true);
    return Ring(std::move(d));
}

Ring Ring::mod(const Integer &n)
{
    if (n < 1) {
        throw MathError(Errc::InvalidParameters, "modulus must be positive: " + ringkit::to_string(n));
    }
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Mod;
    d->n = n;
    bool prime = is_prime(n);
    set_flags(*d, true, prime, prime, prime, prime);
    d->finite = true;
    return Ring(std::move(d));
}

namespace
{

void check_quad_d(std::int64_t dval)
{
    if (dval == 1 || !is_squarefree(dval)) {
        throw MathError(Errc::InvalidParameters, "d must be squarefree and != 1: " + std::to_string(dval));
    }
}

} // namespace

Ring Ring::quad_int(std::int64_t dval)
{
    check_quad_d(dval);
    auto d = std::make_shared<RingData>();
    d->kind = Kind::QuadInt;
    d->d = dval;
    // Division with remainder is implemented for the Gaussian integers only.
    bool gaussian = dval == -1;
    set_flags(*d, true, true, gaussian, gaussian, false);
    return Ring(std::move(d));
}

Ring Ring::quad_field(std::int64_t dval)
{
    check_quad_d(dval);
    auto d = std::make_shared<RingData>();
    d->kind = Kind::QuadField;
    d->d = dval;
    set_flags(*d, true, true, true, true, true);
    return Ring(std::move(d));
}

Ring Ring::quaternions()
{
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Quaternions;
    set_flags(*d, false, false, false, false, false);
    return Ring(std::move(d));
}

Ring Ring::poly(const Ring &base)
{
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Poly;
    d->children = {base};
    set_flags(*d, base.is_commutative(), base.is_domain(), base.is_gcd_domain(), base.is_field(), false);
    return Ring(std::move(d));
}

Ring Ring::multipoly(const Ring &base)
{
    auto d = std::make_shared<RingData>();
    d->kind = Kind::MultiPoly;
    d->children = {base};
    set_flags(*d, base.is_commutative(), base.is_domain(), base.is_gcd_domain(), false, false);
    return Ring(std::move(d));
}

Ring Ring::series(const Ring &base, std::size_t precision)
{
    if (precision == 0) {
        throw MathError(Errc::InvalidParameters, "series precision must be positive");
    }
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Series;
    d->children = {base};
    d->size = precision;
    // k[[x]] is a discrete valuation ring, hence Euclidean.
    bool f = base.is_field();
    set_flags(*d, base.is_commutative(), base.is_domain(), f, f, false);
    d->finite = base.is_finite();
    return Ring(std::move(d));
}

Ring Ring::frac(const Ring &base)
{
    if (!base.is_domain()) {
        throw MathError(Errc::NotADomain, base.to_string());
    }
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Frac;
    d->children = {base};
    set_flags(*d, true, true, true, true, true);
    d->finite = base.is_finite();
    return Ring(std::move(d));
}

Ring Ring::quotient(const Ring &base, const Element &modulus)
{
    if (!is_euclidean_instance(base)) {
        throw MathError(Errc::ContextNotEuclidean, base.to_string());
    }
    require_same_ring(zero(base), modulus);
    if (is_zero(modulus) || is_unit(modulus)) {
        throw MathError(Errc::InvalidParameters, "quotient modulus must be a nonzero non-unit");
    }
    Element m = canonical_associate(modulus);
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Quotient;
    d->children = {base};
    bool field = quotient_is_field(base, m);
    d->modulus = {std::move(m)};
    set_flags(*d, true, field, field, field, field);
    switch (base.kind()) {
    case Kind::Integers:
    case Kind::QuadInt:
        d->finite = true;
        break;
    case Kind::Poly:
        d->finite = base.base().is_finite();
        break;
    default:
        d->finite = false;
    }
    return Ring(std::move(d));
}

Ring Ring::matrix(const Ring &base, std::size_t n)
{
    if (n == 0) {
        throw MathError(Errc::InvalidParameters, "matrix size must be positive");
    }
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Matrix;
    d->children = {base};
    d->size = n;
    if (n == 1) {
        copy_flags(*d, base);
    } else {
        set_flags(*d, false, false, false, false, false);
        d->finite = base.is_finite();
    }
    return Ring(std::move(d));
}

Ring Ring::product(std::vector<Ring> components)
{
    if (components.empty()) {
        throw MathError(Errc::InvalidParameters, "product of no rings");
    }
    auto d = std::make_shared<RingData>();
    d->kind = Kind::Product;
    if (components.size() == 1) {
        copy_flags(*d, components.front());
    } else {
        bool comm = std::all_of(components.begin(), components.end(), [](const Ring &r) {
            return r.is_commutative();
        });
        set_flags(*d, comm, false, false, false, false);
        d->finite = std::all_of(components.begin(), components.end(), [](const Ring &r) {
            return r.is_finite();
        });
    }
    d->children = std::move(components);
    return Ring(std::move(d));
}

Kind Ring::kind() const noexcept { return data_->kind; }

const Integer &Ring::modulus() const
{
    if (kind() != Kind::Mod) {
        throw MathError(Errc::Unsupported, "modulus of " + to_string());
    }
    return data_->n;
}

std::int64_t Ring::quad_d() const
{
    if (kind() != Kind::QuadInt && kind() != Kind::QuadField) {
        throw MathError(Errc::Unsupported, "d of " + to_string());
    }
    return data_->d;
}

std::size_t Ring::precision() const
{
    if (kind() != Kind::Series) {
        throw MathError(Errc::Unsupported, "precision of " + to_string());
    }
    return data_->size;
}

std::size_t Ring::dim() const
{
    if (kind() != Kind::Matrix) {
        throw MathError(Errc::Unsupported, "dimension of " + to_string());
    }
    return data_->size;
}

const Ring &Ring::base() const
{
    switch (kind()) {
    case Kind::Poly:
    case Kind::MultiPoly:
    case Kind::Series:
    case Kind::Frac:
    case Kind::Quotient:
    case Kind::Matrix:
        return data_->children.front();
    default:
        throw MathError(Errc::Unsupported, "base of " + to_string());
    }
}

const std::vector<Ring> &Ring::components() const
{
    if (kind() != Kind::Product) {
        throw MathError(Errc::Unsupported, "components of " + to_string());
    }
    return data_->children;
}

const Element &Ring::quotient_modulus() const
{
    if (kind() != Kind::Quotient) {
        throw MathError(Errc::Unsupported, "quotient modulus of " + to_string());
    }
    return data_->modulus.front();
}

bool Ring::is_commutative() const noexcept { return data_->commutative; }
bool Ring::is_domain() const noexcept { return data_->domain; }
bool Ring::is_gcd_domain() const noexcept { return data_->gcd_domain; }
bool Ring::is_euclidean() const noexcept { return data_->euclidean; }
bool Ring::is_field() const noexcept { return data_->field; }
bool Ring::is_finite() const noexcept { return data_->finite; }

std::string Ring::to_string() const
{
    switch (kind()) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Mod: return (is_field() ? "Fp:" : "Zn:") + ringkit::to_string(data_->n);
    case Kind::QuadInt: return "Quad:" + std::to_string(data_->d);
    case Kind::QuadField: return "QuadF:" + std::to_string(data_->d);
    case Kind::Quaternions: return "H";
    case Kind::Poly: return "Poly(" + base().to_string() + ")";
    case Kind::MultiPoly: return "MPoly(" + base().to_string() + ")";
    case Kind::Series: return "Series(" + base().to_string() + "," + std::to_string(data_->size) + ")";
    case Kind::Frac: return "Frac(" + base().to_string() + ")";
    case Kind::Quotient: return "Quot(" + base().to_string() + "," + format(quotient_modulus()) + ")";
    case Kind::Matrix: return "Mat(" + base().to_string() + "," + std::to_string(data_->size) + ")";
    case Kind::Product: {
        std::string s = "Prod(";
        for (std::size_t i = 0; i < data_->children.size(); ++i) {
            s += (i ? "," : "") + data_->children[i].to_string();
        }
        return s + ")";
    }
    }
    return "?";
}

bool operator==(const Ring &a, const Ring &b)
{
    if (a.data_ == b.data_) {
        return true;
    }
    const RingData &x = *a.data_;
    const RingData &y = *b.data_;
    if (x.kind != y.kind || x.n != y.n || x.d != y.d || x.size != y.size || x.children != y.children) {
        return false;
    }
    if (x.kind == Kind::Quotient) {
        return equal(x.modulus.front(), y.modulus.front());
    }
    return true;
}

// ---- Monomial -------------------------------------------------------------

Monomial::Monomial(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end());
    for (auto &f : factors) {
        if (f.second == 0) {
            continue;
        }
        if (!factors_.empty() && factors_.back().first == f.first) {
            factors_.back().second += f.second;
        } else {
            factors_.push_back(std::move(f));
        }
    }
}

Monomial Monomial::variable(std::string name, unsigned exponent)
{
    return Monomial({{std::move(name), exponent}});
}

unsigned Monomial::total_degree() const noexcept
{
    unsigned d = 0;
    for (const auto &f : factors_) {
        d += f.second;
    }
    return d;
}

unsigned Monomial::degree_in(const std::string &var) const noexcept
{
    for (const auto &f : factors_) {
        if (f.first == var) {
            return f.second;
        }
    }
    return 0;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    std::vector<Monomial::Factor> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return Monomial(std::move(all));
}

bool grlex_greater(const Monomial &a, const Monomial &b)
{
    unsigned da = a.total_degree();
    unsigned db = b.total_degree();
    if (da != db) {
        return da > db;
    }
    // Walk both sorted factor lists; the first variable (alphabetically)
    // with differing exponent decides.
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            return true; // a has a variable that b lacks
        }
        if (i == fa.size() || fb[j].first < fa[i].first) {
            return false;
        }
        if (fa[i].second != fb[j].second) {
            return fa[i].second > fb[j].second;
        }
        ++i;
        ++j;
    }
    return false;
}

// ---- Element --------------------------------------------------------------

namespace
{

[[noreturn]] void bad_payload(const Ring &r)
{
    throw MathError(Errc::InvalidParameters, "payload does not match ring " + r.to_string());
}

void check_items_ring(const std::vector<Element> &items, const Ring &r)
{
    for (const auto &e : items) {
        if (!(e.ring() == r)) {
            throw MathError(Errc::ContextMismatch, e.ring().to_string() + " vs " + r.to_string());
        }
    }
}

Element::Payload canonicalize(const Ring &r, Element::Payload v)
{
    switch (r.kind()) {
    case Kind::Integers:
        if (auto *q = std::get_if<Rational>(&v)) {
            if (!is_integral(*q)) {
                bad_payload(r);
            }
            return Integer(q->get_num());
        }
        if (!std::holds_alternative<Integer>(v)) {
            bad_payload(r);
        }
        return v;
    case Kind::Mod:
        if (auto *n = std::get_if<Integer>(&v)) {
            return mod_floor(*n, r.modulus());
        }
        bad_payload(r);
    case Kind::Rationals:
        if (auto *n = std::get_if<Integer>(&v)) {
            return Rational(*n);
        }
        if (auto *q = std::get_if<Rational>(&v)) {
            q->canonicalize();
            return v;
        }
        bad_payload(r);
    case Kind::QuadInt:
    case Kind::QuadField:
        if (auto *q = std::get_if<Quad>(&v)) {
            q->a.canonicalize();
            q->b.canonicalize();
            if (r.kind() == Kind::QuadInt && !(is_integral(q->a) && is_integral(q->b))) {
                throw MathError(Errc::InvalidParameters, "non-integral coordinates in " + r.to_string());
            }
            return v;
        }
        if (auto *n = std::get_if<Integer>(&v)) {
            return Quad{Rational(*n), Rational(0)};
        }
        bad_payload(r);
    case Kind::Quaternions:
        if (auto *q = std::get_if<Quat>(&v)) {
            q->a.canonicalize();
            q->b.canonicalize();
            q->c.canonicalize();
            q->d.canonicalize();
            return v;
        }
        bad_payload(r);
    case Kind::Poly: {
        auto *items = std::get_if<Element::Items>(&v);
        if (!items) {
            bad_payload(r);
        }
        check_items_ring(*items, r.base());
        while (!items->empty() && is_zero(items->back())) {
            items->pop_back();
        }
        return v;
    }
    case Kind::Series: {
        auto *items = std::get_if<Element::Items>(&v);
        if (!items) {
            bad_payload(r);
        }
        check_items_ring(*items, r.base());
        items->resize(r.precision(), zero(r.base()));
        return v;
    }
    case Kind::MultiPoly: {
        auto *terms = std::get_if<Terms>(&v);
        if (!terms || terms->monomials.size() != terms->coeffs.size()) {
            bad_payload(r);
        }
        check_items_ring(terms->coeffs, r.base());
        MultiPoly::TermMap map;
        for (std::size_t i = 0; i < terms->monomials.size(); ++i) {
            auto it = map.find(terms->monomials[i]);
            if (it == map.end()) {
                map.emplace(terms->monomials[i], terms->coeffs[i]);
            } else {
                it->second = it->second + terms->coeffs[i];
            }
        }
        Terms out;
        for (auto &[m, c] : map) {
            if (!is_zero(c)) {
                out.monomials.push_back(m);
                out.coeffs.push_back(c);
            }
        }
        return out;
    }
    case Kind::Frac: {
        auto *items = std::get_if<Element::Items>(&v);
        if (!items || items->size() != 2) {
            bad_payload(r);
        }
        check_items_ring(*items, r.base());
        Frac f = frac_make((*items)[0], (*items)[1]);
        return Element::Items{f.num(), f.den()};
    }
    case Kind::Quotient: {
        auto *items = std::get_if<Element::Items>(&v);
        if (!items || items->size() != 1) {
            bad_payload(r);
        }
        check_items_ring(*items, r.base());
        return Element::Items{canonical_remainder(items->front(), r.quotient_modulus())};
    }
    case Kind::Matrix: {
        auto *items = std::get_if<Element::Items>(&v);
        if (!items || items->size() != r.dim() * r.dim()) {
            bad_payload(r);
        }
        check_items_ring(*items, r.base());
        return v;
    }
    case Kind::Product: {
        auto *items = std::get_if<Element::Items>(&v);
        const auto &comps = r.components();
        if (!items || items->size() != comps.size()) {
            bad_payload(r);
        }
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (!((*items)[i].ring() == comps[i])) {
                throw MathError(Errc::ContextMismatch, (*items)[i].ring().to_string() + " vs " + comps[i].to_string());
            }
        }
        return v;
    }
    }
    bad_payload(r);
}

} // namespace

Element::Element() : ring_(), value_(Integer(0)) {}

Element::Element(Ring ring, Payload value) : ring_(std::move(ring)), value_(canonicalize(ring_, std::move(value))) {}

Element Element::raw(Ring ring, Payload value)
{
    Element e;
    e.ring_ = std::move(ring);
    e.value_ = std::move(value);
    return e;
}

const Integer &Element::integer() const
{
    if (auto *p = std::get_if<Integer>(&value_)) {
        return *p;
    }
    throw MathError(Errc::InvalidParameters, "not an integer payload in " + ring_.to_string());
}

const Rational &Element::rational() const
{
    if (auto *p = std::get_if<Rational>(&value_)) {
        return *p;
    }
    throw MathError(Errc::InvalidParameters, "not a rational payload in " + ring_.to_string());
}

const Quad &Element::quad() const
{
    if (auto *p = std::get_if<Quad>(&value_)) {
        return *p;
    }
    throw MathError(Errc::InvalidParameters, "not a quadratic payload in " + ring_.to_string());
}

const Quat &Element::quat() const
{
    if (auto *p = std::get_if<Quat>(&value_)) {
        return *p;
    }
    throw MathError(Errc::InvalidParameters, "not a quaternion payload in " + ring_.to_string());
}

const Element::Items &Element::items() const
{
    if (auto *p = std::get_if<Items>(&value_)) {
        return *p;
    }
    throw MathError(Errc::InvalidParameters, "not a compound payload in " + ring_.to_string());
}

const Terms &Element::terms() const
{
    if (auto *p = std::get_if<Terms>(&value_)) {
        return *p;
    }
    throw MathError(Errc::InvalidParameters, "not a term payload in " + ring_.to_string());
}

// ---- constants ------------------------------------------------------------

Element zero(const Ring &r)
{
    return from_integer(r, Integer(0));
}

Element one(const Ring &r)
{
    return from_integer(r, Integer(1));
}

Element from_integer(const Ring &r, const Integer &n)
{
    switch (r.kind()) {
    case Kind::Integers:
        return Element::raw(r, n);
    case Kind::Mod:
        return Element::raw(r, mod_floor(n, r.modulus()));
    case Kind::Rationals:
        return Element::raw(r, Rational(n));
    case Kind::QuadInt:
    case Kind::QuadField:
        return Element::raw(r, Quad{Rational(n), Rational(0)});
    case Kind::Quaternions:
        return Element::raw(r, Quat{Rational(n), 0, 0, 0});
    case Kind::Poly: {
        Element c = from_integer(r.base(), n);
        if (is_zero(c)) {
            return Element::raw(r, Element::Items{});
        }
        return Element::raw(r, Element::Items{c});
    }
    case Kind::MultiPoly: {
        Element c = from_integer(r.base(), n);
        Terms t;
        if (!is_zero(c)) {
            t.monomials.emplace_back();
            t.coeffs.push_back(c);
        }
        return Element::raw(r, std::move(t));
    }
    case Kind::Series: {
        Element::Items items(r.precision(), zero(r.base()));
        items[0] = from_integer(r.base(), n);
        return Element::raw(r, std::move(items));
    }
    case Kind::Frac:
        return Element::raw(r, Element::Items{from_integer(r.base(), n), one(r.base())});
    case Kind::Quotient:
        return Element(r, Element::Items{from_integer(r.base(), n)});
    case Kind::Matrix: {
        std::size_t dim = r.dim();
        Element::Items items(dim * dim, zero(r.base()));
        Element c = from_integer(r.base(), n);
        for (std::size_t i = 0; i < dim; ++i) {
            items[i * dim + i] = c;
        }
        return Element::raw(r, std::move(items));
    }
    case Kind::Product: {
        Element::Items items;
        for (const auto &c : r.components()) {
            items.push_back(from_integer(c, n));
        }
        return Element::raw(r, std::move(items));
    }
    }
    throw MathError(Errc::Unsupported, r.to_string());
}

Element lift(const Element &c, const Ring &target)
{
    if (c.ring() == target) {
        return c;
    }
    switch (target.kind()) {
    case Kind::Poly:
        return Element(target, Element::Items{lift(c, target.base())});
    case Kind::MultiPoly: {
        Terms t;
        t.monomials.emplace_back();
        t.coeffs.push_back(lift(c, target.base()));
        return Element(target, std::move(t));
    }
    case Kind::Series: {
        Element::Items v(target.precision(), zero(target.base()));
        v[0] = lift(c, target.base());
        return Element::raw(target, std::move(v));
    }
    case Kind::Frac:
        return Element(target, Element::Items{lift(c, target.base()), one(target.base())});
    case Kind::Quotient:
        return Element(target, Element::Items{lift(c, target.base())});
    case Kind::Matrix: {
        std::size_t n = target.dim();
        Element inner = lift(c, target.base());
        Element::Items v(n * n, zero(target.base()));
        for (std::size_t i = 0; i < n; ++i) {
            v[i * n + i] = inner;
        }
        return Element::raw(target, std::move(v));
    }
    case Kind::Product: {
        Element::Items v;
        for (const auto &comp : target.components()) {
            v.push_back(lift(c, comp));
        }
        return Element::raw(target, std::move(v));
    }
    default:
        throw MathError(Errc::ContextMismatch, c.ring().to_string() + " does not embed in " + target.to_string());
    }
}

// ---- arithmetic -----------------------------------------------------------

void require_same_ring(const Element &a, const Element &b)
{
    if (!(a.ring() == b.ring())) {
        throw MathError(Errc::ContextMismatch, a.ring().to_string() + " vs " + b.ring().to_string());
    }
}

namespace
{

Element::Items zip_items(const Element &a, const Element &b, Element (*op)(const Element &, const Element &))
{
    const auto &x = a.items();
    const auto &y = b.items();
    Element::Items out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(op(x[i], y[i]));
    }
    return out;
}

} // namespace

Element add(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
        return Element::raw(r, Integer(a.integer() + b.integer()));
    case Kind::Mod: {
        Integer s = a.integer() + b.integer();
        if (s >= r.modulus()) {
            s -= r.modulus();
        }
        return Element::raw(r, std::move(s));
    }
    case Kind::Rationals:
        return Element::raw(r, Rational(a.rational() + b.rational()));
    case Kind::QuadInt:
    case Kind::QuadField:
        return Element::raw(r, Quad{a.quad().a + b.quad().a, a.quad().b + b.quad().b});
    case Kind::Quaternions: {
        const Quat &x = a.quat();
        const Quat &y = b.quat();
        return Element::raw(r, Quat{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d});
    }
    case Kind::Poly:
        return Element::raw(r, (Poly(r.base(), a.items()) + Poly(r.base(), b.items())).release());
    case Kind::MultiPoly:
        return mv_add(MultiPoly::from_element(a), MultiPoly::from_element(b)).to_element(r);
    case Kind::Series:
    case Kind::Matrix:
    case Kind::Product:
        return Element::raw(r, zip_items(a, b, add));
    case Kind::Frac:
        return frac_add(Frac::from_element(a), Frac::from_element(b)).to_element(r);
    case Kind::Quotient:
        return Element(r, Element::Items{a.items()[0] + b.items()[0]});
    }
    throw MathError(Errc::Unsupported, r.to_string());
}

Element neg(const Element &a)
{
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
        return Element::raw(r, Integer(-a.integer()));
    case Kind::Mod:
        return Element::raw(r, a.integer() == 0 ? Integer(0) : Integer(r.modulus() - a.integer()));
    case Kind::Rationals:
        return Element::raw(r, Rational(-a.rational()));
    case Kind::QuadInt:
    case Kind::QuadField:
        return Element::raw(r, Quad{-a.quad().a, -a.quad().b});
    case Kind::Quaternions: {
        const Quat &x = a.quat();
        return Element::raw(r, Quat{-x.a, -x.b, -x.c, -x.d});
    }
    case Kind::MultiPoly:
        return mv_neg(MultiPoly::from_element(a)).to_element(r);
    case Kind::Frac:
        return frac_neg(Frac::from_element(a)).to_element(r);
    case Kind::Quotient:
        return Element(r, Element::Items{neg(a.items()[0])});
    case Kind::Poly:
    case Kind::Series:
    case Kind::Matrix:
    case Kind::Product: {
        Element::Items out;
        out.reserve(a.items().size());
        for (const auto &e : a.items()) {
            out.push_back(neg(e));
        }
        return Element::raw(r, std::move(out));
    }
    }
    throw MathError(Errc::Unsupported, r.to_string());
}

Element sub(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
        return Element::raw(r, Integer(a.integer() - b.integer()));
    case Kind::Mod: {
        Integer s = a.integer() - b.integer();
        if (s < 0) {
            s += r.modulus();
        }
        return Element::raw(r, std::move(s));
    }
    case Kind::Rationals:
        return Element::raw(r, Rational(a.rational() - b.rational()));
    case Kind::Poly:
        return Element::raw(r, (Poly(r.base(), a.items()) - Poly(r.base(), b.items())).release());
    case Kind::Series:
    case Kind::Matrix:
    case Kind::Product:
        return Element::raw(r, zip_items(a, b, sub));
    default:
        return add(a, neg(b));
    }
}

Element mul(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
        return Element::raw(r, Integer(a.integer() * b.integer()));
    case Kind::Mod:
        return Element::raw(r, mod_floor(a.integer() * b.integer(), r.modulus()));
    case Kind::Rationals:
        return Element::raw(r, Rational(a.rational() * b.rational()));
    case Kind::QuadInt:
    case Kind::QuadField: {
        const Quad &x = a.quad();
        const Quad &y = b.quad();
        Rational d(r.quad_d());
        return Element::raw(r, Quad{x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a});
    }
    case Kind::Quaternions:
        return quat_mul(a, b);
    case Kind::Poly:
        return Element::raw(r, (Poly(r.base(), a.items()) * Poly(r.base(), b.items())).release());
    case Kind::MultiPoly:
        return mv_mul(MultiPoly::from_element(a), MultiPoly::from_element(b)).to_element(r);
    case Kind::Series:
        return Element::raw(r, ts_mul(TruncSeries(r.base(), a.items()), TruncSeries(r.base(), b.items())).release());
    case Kind::Frac:
        return frac_mul(Frac::from_element(a), Frac::from_element(b)).to_element(r);
    case Kind::Quotient:
        return Element(r, Element::Items{a.items()[0] * b.items()[0]});
    case Kind::Matrix:
        return Element::raw(r, mat_mul(Matrix::from_element(a), Matrix::from_element(b)).release());
    case Kind::Product:
        return Element::raw(r, zip_items(a, b, mul));
    }
    throw MathError(Errc::Unsupported, r.to_string());
}

bool equal(const Element &a, const Element &b)
{
    if (!(a.ring() == b.ring())) {
        return false;
    }
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
    case Kind::Mod:
        return a.integer() == b.integer();
    case Kind::Rationals:
        return a.rational() == b.rational();
    case Kind::QuadInt:
    case Kind::QuadField:
        return a.quad().a == b.quad().a && a.quad().b == b.quad().b;
    case Kind::Quaternions: {
        const Quat &x = a.quat();
        const Quat &y = b.quat();
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    case Kind::MultiPoly: {
        const Terms &x = a.terms();
        const Terms &y = b.terms();
        return x.monomials == y.monomials && x.coeffs == y.coeffs;
    }
    case Kind::Frac:
        return frac_eq(Frac::from_element(a), Frac::from_element(b));
    default:
        return a.items() == b.items();
    }
}

bool is_zero(const Element &a)
{
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
    case Kind::Mod:
        return a.integer() == 0;
    case Kind::Rationals:
        return a.rational() == 0;
    case Kind::QuadInt:
    case Kind::QuadField:
        return a.quad().a == 0 && a.quad().b == 0;
    case Kind::Quaternions: {
        const Quat &x = a.quat();
        return x.a == 0 && x.b == 0 && x.c == 0 && x.d == 0;
    }
    case Kind::Poly:
        return a.items().empty();
    case Kind::MultiPoly:
        return a.terms().coeffs.empty();
    case Kind::Frac:
        return is_zero(a.items()[0]);
    default:
        return std::all_of(a.items().begin(), a.items().end(), [](const Element &e) {
            return is_zero(e);
        });
    }
}

bool is_one(const Element &a)
{
    return equal(a, one(a.ring()));
}

// ---- units ----------------------------------------------------------------

namespace
{

// u + N with u a unit and N nilpotent has inverse u^{-1} * sum (-u^{-1} N)^k.
Element unit_plus_nilpotent_inverse(const Element &p, const Element &constant)
{
    const Ring &r = p.ring();
    Element uinv = lift(inverse(constant), r);
    Element t = neg(mul(uinv, sub(p, lift(constant, r))));
    Element sum = one(r);
    Element term = one(r);
    for (int k = 0; k < 100000; ++k) {
        term = mul(term, t);
        if (is_zero(term)) {
            return mul(uinv, sum);
        }
        sum = add(sum, term);
    }
    throw MathError(Errc::Unsupported, "nilpotent series did not terminate");
}

bool coefficients_nilpotent_except_constant(const std::vector<Element> &coeffs)
{
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (!is_nilpotent(coeffs[i])) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_unit(const Element &a)
{
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
        return abs(a.integer()) == 1;
    case Kind::Mod:
        return gcd(a.integer(), r.modulus()) == 1;
    case Kind::Rationals:
    case Kind::QuadField:
    case Kind::Quaternions:
    case Kind::Frac:
        return !is_zero(a);
    case Kind::QuadInt:
        return quad_is_unit(a);
    case Kind::Poly: {
        const auto &c = a.items();
        if (c.empty() || !is_unit(c[0])) {
            return false;
        }
        if (r.base().is_domain()) {
            return c.size() == 1;
        }
        return coefficients_nilpotent_except_constant(c);
    }
    case Kind::MultiPoly: {
        MultiPoly f = MultiPoly::from_element(a);
        auto it = f.terms().find(Monomial());
        if (it == f.terms().end() || !is_unit(it->second)) {
            return false;
        }
        for (const auto &[m, c] : f.terms()) {
            if (!m.is_one() && !is_nilpotent(c)) {
                return false;
            }
        }
        return true;
    }
    case Kind::Series:
        return is_unit(a.items()[0]);
    case Kind::Quotient:
        return q_is_unit(a);
    case Kind::Matrix:
        if (!r.base().is_commutative()) {
            throw MathError(Errc::Unsupported, "unit test for matrices over " + r.base().to_string());
        }
        return is_unit(det(Matrix::from_element(a)));
    case Kind::Product:
        return std::all_of(a.items().begin(), a.items().end(), [](const Element &e) {
            return is_unit(e);
        });
    }
    return false;
}

Element inverse(const Element &a)
{
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
        if (!is_unit(a)) {
            throw MathError(Errc::NotAUnit, to_string(a.integer()));
        }
        return a;
    case Kind::Mod:
        return mod_inv(a);
    case Kind::Rationals:
        if (is_zero(a)) {
            throw MathError(Errc::DivisionByZero);
        }
        return Element::raw(r, Rational(1 / a.rational()));
    case Kind::QuadInt:
    case Kind::QuadField:
        return quad_inverse(a);
    case Kind::Quaternions:
        return quat_inverse(a);
    case Kind::Frac:
        return frac_inverse(Frac::from_element(a)).to_element(r);
    case Kind::Poly:
    case Kind::MultiPoly: {
        if (!is_unit(a)) {
            throw MathError(Errc::NotAUnit, format(a));
        }
        Element c = r.kind() == Kind::Poly ? a.items()[0] : MultiPoly::from_element(a).terms().at(Monomial());
        return unit_plus_nilpotent_inverse(a, c);
    }
    case Kind::Series:
        return Element::raw(r, ts_invert(TruncSeries(r.base(), a.items())).release());
    case Kind::Quotient:
        return q_inverse(a);
    case Kind::Matrix:
        return mat_inverse(Matrix::from_element(a)).to_element();
    case Kind::Product: {
        Element::Items out;
        for (const auto &e : a.items()) {
            out.push_back(inverse(e));
        }
        return Element::raw(r, std::move(out));
    }
    }
    throw MathError(Errc::Unsupported, r.to_string());
}

Element divide(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    if (is_zero(b)) {
        throw MathError(Errc::DivisionByZero);
    }
    if (is_unit(b)) {
        return mul(a, inverse(b));
    }
    const Ring &r = a.ring();
    if (is_euclidean_instance(r)) {
        EuclideanDivision d = euclid_divmod(a, b);
        if (!is_zero(d.r)) {
            throw MathError(Errc::NotInvertible, format(b) + " does not divide " + format(a));
        }
        return d.q;
    }
    if (r.kind() == Kind::QuadInt) {
        if (!quad_divides(b, a)) {
            throw MathError(Errc::NotInvertible, format(b) + " does not divide " + format(a));
        }
        Rational n = quad_norm(b);
        Element p = mul(a, quad_conj(b));
        return Element(r, Quad{p.quad().a / n, p.quad().b / n});
    }
    if (r.kind() == Kind::Poly && r.base().is_domain()) {
        return exact_divide(Poly::from_element(a), Poly::from_element(b)).to_element(r);
    }
    throw MathError(Errc::NotInvertible, format(b));
}

// ---- printing -------------------------------------------------------------

std::string to_string(const Element &a)
{
    return format(a);
}

std::ostream &operator<<(std::ostream &os, const Element &a)
{
    return os << format(a);
}

std::ostream &operator<<(std::ostream &os, const Ring &r)
{
    return os << r.to_string();
}

} // namespace ringkit

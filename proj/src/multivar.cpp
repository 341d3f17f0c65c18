#include <ringkit/multivar.hpp>

#include <algorithm>

#include <ringkit/algebra.hpp>
#include <ringkit/literal.hpp>

namespace ringkit
{

MultiPoly::MultiPoly(Ring base) : base_(std::move(base)) {}

MultiPoly::MultiPoly(Ring base, TermMap terms) : base_(std::move(base)), terms_(std::move(terms))
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = ringkit::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
}

MultiPoly MultiPoly::from_element(const Element &e)
{
    if (e.ring().kind() != Kind::MultiPoly) {
        throw MathError(Errc::ContextMismatch, "not a multivariate polynomial: " + e.ring().to_string());
    }
    const Terms &t = e.terms();
    TermMap map;
    for (std::size_t i = 0; i < t.monomials.size(); ++i) {
        map.emplace(t.monomials[i], t.coeffs[i]);
    }
    MultiPoly out(e.ring().base());
    out.terms_ = std::move(map);
    return out;
}

MultiPoly MultiPoly::constant(const Element &c)
{
    return term(c, Monomial());
}

MultiPoly MultiPoly::variable(const Ring &base, const std::string &name)
{
    return term(one(base), Monomial::variable(name));
}

MultiPoly MultiPoly::term(const Element &c, Monomial m)
{
    TermMap t;
    t.emplace(std::move(m), c);
    return MultiPoly(c.ring(), std::move(t));
}

std::set<std::string> MultiPoly::variables() const
{
    std::set<std::string> vars;
    for (const auto &[m, c] : terms_) {
        for (const auto &f : m.factors()) {
            vars.insert(f.first);
        }
    }
    return vars;
}

Element MultiPoly::to_element() const
{
    return to_element(Ring::multipoly(base_));
}

Element MultiPoly::to_element(const Ring &mpoly_ring) const
{
    Terms t;
    for (const auto &[m, c] : terms_) {
        t.monomials.push_back(m);
        t.coeffs.push_back(c);
    }
    return Element::raw(mpoly_ring, std::move(t));
}

bool operator==(const MultiPoly &a, const MultiPoly &b)
{
    return a.base_ == b.base_ && a.terms_ == b.terms_;
}

namespace
{

void same_base(const MultiPoly &f, const MultiPoly &g)
{
    if (!(f.base() == g.base())) {
        throw MathError(Errc::ContextMismatch, f.base().to_string() + " vs " + g.base().to_string());
    }
}

void accumulate(MultiPoly::TermMap &t, const Monomial &m, const Element &c)
{
    auto it = t.find(m);
    if (it == t.end()) {
        t.emplace(m, c);
    } else {
        it->second = it->second + c;
    }
}

} // namespace

MultiPoly mv_add(const MultiPoly &f, const MultiPoly &g)
{
    same_base(f, g);
    MultiPoly::TermMap t = f.terms();
    for (const auto &[m, c] : g.terms()) {
        accumulate(t, m, c);
    }
    return MultiPoly(f.base(), std::move(t));
}

MultiPoly mv_neg(const MultiPoly &f)
{
    MultiPoly::TermMap t;
    for (const auto &[m, c] : f.terms()) {
        t.emplace(m, -c);
    }
    return MultiPoly(f.base(), std::move(t));
}

MultiPoly mv_sub(const MultiPoly &f, const MultiPoly &g)
{
    return mv_add(f, mv_neg(g));
}

MultiPoly mv_mul(const MultiPoly &f, const MultiPoly &g)
{
    same_base(f, g);
    MultiPoly::TermMap t;
    for (const auto &[m1, c1] : f.terms()) {
        for (const auto &[m2, c2] : g.terms()) {
            accumulate(t, m1 * m2, c1 * c2);
        }
    }
    return MultiPoly(f.base(), std::move(t));
}

MultiPoly mv_pow(const MultiPoly &f, unsigned n)
{
    MultiPoly result = MultiPoly::constant(one(f.base()));
    MultiPoly b = f;
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

Element mv_eval(const MultiPoly &f, const std::map<std::string, Element> &point)
{
    Element s = zero(f.base());
    for (const auto &[m, c] : f.terms()) {
        Element t = c;
        for (const auto &[var, e] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end()) {
                throw MathError(Errc::MissingVariable, var);
            }
            t = t * pow(it->second, static_cast<std::uint64_t>(e));
        }
        s = s + t;
    }
    return s;
}

MultiPoly mv_substitute(const MultiPoly &f, const std::string &var, const Element &value)
{
    MultiPoly::TermMap t;
    for (const auto &[m, c] : f.terms()) {
        std::vector<Monomial::Factor> rest;
        unsigned e = 0;
        for (const auto &fac : m.factors()) {
            if (fac.first == var) {
                e = fac.second;
            } else {
                rest.push_back(fac);
            }
        }
        accumulate(t, Monomial(std::move(rest)), c * pow(value, static_cast<std::uint64_t>(e)));
    }
    return MultiPoly(f.base(), std::move(t));
}

Degree total_degree(const MultiPoly &f)
{
    if (f.is_zero()) {
        return Degree::neg_infinity();
    }
    // Grlex order puts a term of maximal total degree first.
    return Degree(f.terms().begin()->first.total_degree());
}

Degree degree_in(const MultiPoly &f, const std::string &var)
{
    if (f.is_zero()) {
        return Degree::neg_infinity();
    }
    unsigned d = 0;
    for (const auto &[m, c] : f.terms()) {
        d = std::max(d, m.degree_in(var));
    }
    return Degree(d);
}

std::map<unsigned, MultiPoly> homogeneous_components(const MultiPoly &f)
{
    if (f.is_zero()) {
        throw MathError(Errc::ZeroPolynomial);
    }
    std::map<unsigned, MultiPoly::TermMap> parts;
    for (const auto &[m, c] : f.terms()) {
        parts[m.total_degree()].emplace(m, c);
    }
    std::map<unsigned, MultiPoly> out;
    for (auto &[d, t] : parts) {
        out.emplace(d, MultiPoly(f.base(), std::move(t)));
    }
    return out;
}

bool is_homogeneous(const MultiPoly &f)
{
    return f.is_zero() || homogeneous_components(f).size() == 1;
}

bool scaling_check(const MultiPoly &f, const Element &lambda)
{
    if (f.is_zero()) {
        return true;
    }
    unsigned d = total_degree(f).value();
    MultiPoly::TermMap lhs;
    MultiPoly::TermMap rhs;
    Element ld = pow(lambda, static_cast<std::uint64_t>(d));
    for (const auto &[m, c] : f.terms()) {
        lhs.emplace(m, c * pow(lambda, static_cast<std::uint64_t>(m.total_degree())));
        rhs.emplace(m, ld * c);
    }
    return MultiPoly(f.base(), std::move(lhs)) == MultiPoly(f.base(), std::move(rhs));
}

MultiPoly homogenize(const MultiPoly &f, const std::string &newvar)
{
    if (f.is_zero()) {
        throw MathError(Errc::ZeroPolynomial);
    }
    if (f.variables().count(newvar)) {
        throw MathError(Errc::VariableCollision, newvar);
    }
    unsigned d = total_degree(f).value();
    MultiPoly::TermMap t;
    for (const auto &[m, c] : f.terms()) {
        t.emplace(m * Monomial::variable(newvar, d - m.total_degree()), c);
    }
    return MultiPoly(f.base(), std::move(t));
}

std::string to_string(const MultiPoly &f)
{
    return format(f.to_element());
}

} // namespace ringkit

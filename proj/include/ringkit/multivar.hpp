#ifndef RINGKIT_MULTIVAR_HPP
#define RINGKIT_MULTIVAR_HPP

#include <map>
#include <set>
#include <string>

#include <ringkit/poly.hpp>
#include <ringkit/ring.hpp>

namespace ringkit
{

struct GrlexDescending {
    bool operator()(const Monomial &a, const Monomial &b) const { return grlex_greater(a, b); }
};

// Sparse polynomial in finitely many named variables; no zero coefficients
// are stored.
class MultiPoly
{
public:
    using TermMap = std::map<Monomial, Element, GrlexDescending>;

    explicit MultiPoly(Ring base);
    MultiPoly(Ring base, TermMap terms);

    static MultiPoly from_element(const Element &e);
    static MultiPoly constant(const Element &c);
    static MultiPoly variable(const Ring &base, const std::string &name);
    static MultiPoly term(const Element &c, Monomial m);

    const Ring &base() const noexcept { return base_; }
    const TermMap &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::set<std::string> variables() const;

    Element to_element() const;
    Element to_element(const Ring &mpoly_ring) const;

    friend bool operator==(const MultiPoly &a, const MultiPoly &b);

private:
    Ring base_;
    TermMap terms_;
};

MultiPoly mv_add(const MultiPoly &f, const MultiPoly &g);
MultiPoly mv_sub(const MultiPoly &f, const MultiPoly &g);
MultiPoly mv_neg(const MultiPoly &f);
MultiPoly mv_mul(const MultiPoly &f, const MultiPoly &g);
MultiPoly mv_pow(const MultiPoly &f, unsigned n);

inline MultiPoly operator+(const MultiPoly &f, const MultiPoly &g) { return mv_add(f, g); }
inline MultiPoly operator-(const MultiPoly &f, const MultiPoly &g) { return mv_sub(f, g); }
inline MultiPoly operator*(const MultiPoly &f, const MultiPoly &g) { return mv_mul(f, g); }

// The point must assign every variable of f; throws MissingVariable.
Element mv_eval(const MultiPoly &f, const std::map<std::string, Element> &point);
// Replace one variable by a base element.
MultiPoly mv_substitute(const MultiPoly &f, const std::string &var, const Element &value);

Degree total_degree(const MultiPoly &f);
Degree degree_in(const MultiPoly &f, const std::string &var);

// Component of each degree present in f; throws ZeroPolynomial.
std::map<unsigned, MultiPoly> homogeneous_components(const MultiPoly &f);
bool is_homogeneous(const MultiPoly &f);
// f(l*x1, ..., l*xn) == l^d * f(x1, ..., xn) as polynomials, d = deg f.
// Over finite bases this may hold for non-homogeneous f.
bool scaling_check(const MultiPoly &f, const Element &lambda);
// Each monomial m becomes m * z^(d - deg m). Throws VariableCollision,
// ZeroPolynomial.
MultiPoly homogenize(const MultiPoly &f, const std::string &newvar);

std::string to_string(const MultiPoly &f);

} // namespace ringkit

#endif

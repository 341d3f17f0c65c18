#ifndef RINGKIT_LITERAL_HPP
#define RINGKIT_LITERAL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ringkit/ring.hpp>

namespace ringkit
{

// Z | Q | Zn:<n> | Fp:<p> | Quad:<d> | QuadF:<d> | H | Poly(<ctx>) |
// MPoly(<ctx>) | Series(<ctx>,<prec>) | Frac(<ctx>) | Quot(<ctx>,<modulus>) |
// Mat(<ctx>,<n>) | Prod(<ctx>,...)
Ring parse_ring(std::string_view text);

// Element literals are arithmetic expressions evaluated in the target ring:
// integers, + - * / ^, parentheses, ring symbols (x for Poly/Series, s or i
// for quadratic rings, i j k for H, any name for MPoly), and the bracket
// forms [c0,c1,...] (Poly), [c0,...;N] (Series), [[a,b],[c,d]] (Mat),
// (a,b,...) (Prod) and {coeff:monomial,...} (MPoly). Whitespace is ignored.
Element parse_element(const Ring &r, std::string_view text);

// Canonical printed form; parse_element(r, format(a)) == a.
std::string format(const Element &a);

// Variable name used by a Poly or Series ring (x, then y, z, ... for outer
// rings of nested towers).
std::string variable_name(const Ring &r);

// Helpers for composing printed forms.
bool is_atomic_literal(std::string_view s);
// Joins coefficient*monomial terms into a sum; an empty monomial marks the
// constant term. Zero coefficients are skipped; "0" when nothing remains.
std::string format_sum(const std::vector<std::pair<Element, std::string>> &terms);
std::string parenthesize(const std::string &s);

} // namespace ringkit

#endif

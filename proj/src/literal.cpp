#include <ringkit/literal.hpp>

#include <cctype>
#include <optional>

#include <ringkit/algebra.hpp>
#include <ringkit/multivar.hpp>

namespace ringkit
{

namespace
{

// Drops whitespace and maps typographic minus signs (U+2010, U+2011, U+2013,
// U+2212) to '-'.
std::string strip_spaces(std::string_view text)
{
    static const std::string_view dashes[] = {"\u2010", "\u2011", "\u2013", "\u2212"};
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        bool dash = false;
        for (auto d : dashes) {
            if (text.substr(i, d.size()) == d) {
                s += '-';
                i += d.size() - 1;
                dash = true;
                break;
            }
        }
        if (!dash && !std::isspace(static_cast<unsigned char>(text[i]))) {
            s += text[i];
        }
    }
    return s;
}

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// True when the top level of s has a + or - other than a leading sign.
bool has_top_level_sum(std::string_view s)
{
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[' || c == '{') {
            ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
            --depth;
        } else if (depth == 0 && i > 0 && (c == '+' || c == '-') && s[i - 1] != '^') {
            return true;
        }
    }
    return false;
}

std::size_t poly_depth(const Ring &r)
{
    std::size_t d = 0;
    const Ring *cur = &r;
    for (;;) {
        switch (cur->kind()) {
        case Kind::Poly:
        case Kind::Series:
            ++d;
            [[fallthrough]];
        case Kind::MultiPoly:
        case Kind::Frac:
        case Kind::Quotient:
        case Kind::Matrix:
            cur = &cur->base();
            continue;
        default:
            return d;
        }
    }
}

std::string power(const std::string &var, long e)
{
    if (e == 0) {
        return "";
    }
    return e == 1 ? var : var + "^" + std::to_string(e);
}

std::string format_monomial(const Monomial &m)
{
    std::string s;
    for (const auto &[v, e] : m.factors()) {
        s += (s.empty() ? "" : "*") + power(v, e);
    }
    return s;
}

// ---- element parser -------------------------------------------------------

class Parser
{
public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    Element parse_all(const Ring &r)
    {
        Element e = expr(r);
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    bool eat(char c)
    {
        if (at(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    Integer number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return parse_integer(std::string_view(s_).substr(start, pos_ - start));
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) {
            ++pos_;
        }
        return s_.substr(start, pos_ - start);
    }

    Element expr(const Ring &r)
    {
        Element acc = term(r);
        for (;;) {
            if (eat('+')) {
                acc = acc + term(r);
            } else if (at('-')) {
                ++pos_;
                acc = acc - term(r);
            } else {
                return acc;
            }
        }
    }

    Element term(const Ring &r)
    {
        Element acc = unary(r);
        for (;;) {
            if (eat('*')) {
                acc = acc * unary(r);
            } else if (eat('/')) {
                acc = divide(acc, unary(r));
            } else {
                return acc;
            }
        }
    }

    Element unary(const Ring &r)
    {
        if (eat('-')) {
            return -unary(r);
        }
        if (eat('+')) {
            return unary(r);
        }
        return pow_expr(r);
    }

    Element pow_expr(const Ring &r)
    {
        Element base = atom(r);
        if (eat('^')) {
            bool negative = eat('-');
            Integer e = number();
            return pow(base, negative ? Integer(-e) : e);
        }
        return base;
    }

    Element atom(const Ring &r)
    {
        if (pos_ >= s_.size()) {
            fail("unexpected end of input");
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return from_integer(r, number());
        }
        if (c == '(') {
            return paren(r);
        }
        if (c == '[') {
            return bracket(r);
        }
        if (c == '{') {
            return braces(r);
        }
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            std::string name = identifier();
            if (name == "O" && at('(')) {
                return big_o(r, start);
            }
            if (auto e = resolve(r, name)) {
                return *e;
            }
            pos_ = start;
            fail("unknown symbol '" + name + "' in " + r.to_string());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Element paren(const Ring &r)
    {
        std::size_t start = pos_;
        if (r.kind() == Kind::Product) {
            // Try a component tuple first, then fall back to grouping.
            try {
                expect('(');
                Element::Items items;
                const auto &comps = r.components();
                for (std::size_t i = 0; i < comps.size(); ++i) {
                    if (i > 0) {
                        expect(',');
                    }
                    items.push_back(expr(comps[i]));
                }
                expect(')');
                return Element(r, std::move(items));
            } catch (const ParseError &) {
                pos_ = start;
            } catch (const MathError &) {
                pos_ = start;
            }
        }
        expect('(');
        Element e = expr(r);
        if (at(',')) {
            fail("tuple literal outside a product ring");
        }
        expect(')');
        return e;
    }

    std::vector<Element> list(const Ring &r, char close, std::optional<Integer> *precision = nullptr)
    {
        std::vector<Element> out;
        if (eat(close)) {
            return out;
        }
        for (;;) {
            out.push_back(expr(r));
            if (precision && eat(';')) {
                *precision = number();
                expect(close);
                return out;
            }
            if (eat(close)) {
                return out;
            }
            expect(',');
        }
    }

    Element bracket(const Ring &r)
    {
        switch (r.kind()) {
        case Kind::Poly: {
            expect('[');
            return Element(r, list(r.base(), ']'));
        }
        case Kind::Series: {
            expect('[');
            std::optional<Integer> prec;
            std::vector<Element> c = list(r.base(), ']', &prec);
            std::size_t n = prec ? prec->get_ui() : r.precision();
            if (n != r.precision() || c.size() > n) {
                throw MathError(Errc::PrecisionMismatch, "literal precision " + std::to_string(n) + " in " +
                                                             r.to_string());
            }
            return Element(r, std::move(c));
        }
        case Kind::Matrix: {
            expect('[');
            std::vector<Element> entries;
            std::size_t rows = 0;
            do {
                expect('[');
                std::vector<Element> row = list(r.base(), ']');
                if (row.size() != r.dim()) {
                    throw MathError(Errc::ShapeMismatch, "row of length " + std::to_string(row.size()));
                }
                entries.insert(entries.end(), row.begin(), row.end());
                ++rows;
            } while (eat(','));
            expect(']');
            if (rows != r.dim()) {
                throw MathError(Errc::ShapeMismatch, std::to_string(rows) + " rows");
            }
            return Element(r, std::move(entries));
        }
        case Kind::MultiPoly:
        case Kind::Frac:
        case Kind::Quotient:
            return lift(bracket(r.base()), r);
        default:
            fail("bracket literal in " + r.to_string());
        }
    }

    Element braces(const Ring &r)
    {
        if (r.kind() != Kind::MultiPoly) {
            switch (r.kind()) {
            case Kind::Poly:
            case Kind::Series:
            case Kind::Frac:
            case Kind::Quotient:
            case Kind::Matrix:
                return lift(braces(r.base()), r);
            default:
                fail("term-list literal in " + r.to_string());
            }
        }
        expect('{');
        Terms t;
        if (!eat('}')) {
            do {
                t.coeffs.push_back(expr(r.base()));
                expect(':');
                t.monomials.push_back(monomial());
            } while (eat(','));
            expect('}');
        }
        return Element(r, std::move(t));
    }

    Monomial monomial()
    {
        std::vector<Monomial::Factor> f;
        if (eat('1')) {
            return Monomial();
        }
        do {
            if (pos_ >= s_.size() || !is_ident_start(s_[pos_])) {
                fail("expected a variable");
            }
            std::string v = identifier();
            unsigned e = 1;
            if (eat('^')) {
                e = static_cast<unsigned>(number().get_ui());
            }
            f.emplace_back(std::move(v), e);
        } while (eat('*'));
        return Monomial(std::move(f));
    }

    Element big_o(const Ring &r, std::size_t start)
    {
        if (r.kind() != Kind::Series) {
            pos_ = start;
            fail("O(...) outside a series ring");
        }
        expect('(');
        std::string v = identifier();
        Integer n = 1;
        if (v != variable_name(r)) {
            fail("O() must use the series variable");
        }
        if (eat('^')) {
            n = number();
        }
        expect(')');
        if (n != Integer(static_cast<unsigned long>(r.precision()))) {
            throw MathError(Errc::PrecisionMismatch, "O(" + v + "^" + to_string(n) + ") in " + r.to_string());
        }
        return zero(r);
    }

    static std::optional<Element> resolve(const Ring &r, const std::string &name)
    {
        switch (r.kind()) {
        case Kind::Poly:
            if (name == variable_name(r)) {
                return Poly::variable(r.base()).to_element(r);
            }
            break;
        case Kind::Series:
            if (name == variable_name(r)) {
                Element::Items v(r.precision(), zero(r.base()));
                if (r.precision() > 1) {
                    v[1] = one(r.base());
                }
                return Element::raw(r, std::move(v));
            }
            break;
        case Kind::QuadInt:
        case Kind::QuadField:
            if (name == "s" || (name == "i" && r.quad_d() == -1)) {
                return Element(r, Quad{0, 1});
            }
            return std::nullopt;
        case Kind::Quaternions:
            if (name == "i") {
                return Element(r, Quat{0, 1, 0, 0});
            }
            if (name == "j") {
                return Element(r, Quat{0, 0, 1, 0});
            }
            if (name == "k") {
                return Element(r, Quat{0, 0, 0, 1});
            }
            return std::nullopt;
        case Kind::MultiPoly:
            if (auto e = resolve(r.base(), name)) {
                return lift(*e, r);
            }
            return MultiPoly::variable(r.base(), name).to_element(r);
        case Kind::Product: {
            Element::Items v;
            for (const auto &c : r.components()) {
                auto e = resolve(c, name);
                if (!e) {
                    return std::nullopt;
                }
                v.push_back(*e);
            }
            return Element(r, std::move(v));
        }
        default:
            break;
        }
        switch (r.kind()) {
        case Kind::Poly:
        case Kind::Series:
        case Kind::Frac:
        case Kind::Quotient:
        case Kind::Matrix:
            if (auto e = resolve(r.base(), name)) {
                return lift(*e, r);
            }
            return std::nullopt;
        default:
            return std::nullopt;
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
};

// ---- ring parser ----------------------------------------------------------

class RingParser
{
public:
    explicit RingParser(std::string text) : s_(std::move(text)) {}

    Ring parse_all()
    {
        Ring r = ring();
        if (pos_ != s_.size()) {
            fail("trailing input");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in ring \"" + s_ + "\"");
    }

    bool eat(std::string_view tok)
    {
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (pos_ >= s_.size() || s_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    Integer signed_number()
    {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            ++pos_;
        }
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        try {
            return parse_integer(std::string_view(s_).substr(start, pos_ - start));
        } catch (const ParseError &) {
            pos_ = start;
            fail("expected a number");
        }
    }

    std::size_t size_param()
    {
        Integer n = signed_number();
        if (n < 1 || n > 1'000'000) {
            fail("size out of range");
        }
        return n.get_ui();
    }

    // Text up to the ')' closing the current group.
    std::string group_tail()
    {
        int depth = 0;
        std::size_t start = pos_;
        for (; pos_ < s_.size(); ++pos_) {
            char c = s_[pos_];
            if (c == '(' || c == '[' || c == '{') {
                ++depth;
            } else if (c == ')' || c == ']' || c == '}') {
                if (depth == 0) {
                    break;
                }
                --depth;
            }
        }
        return s_.substr(start, pos_ - start);
    }

    Ring ring()
    {
        if (eat("Poly(")) {
            Ring b = ring();
            expect(')');
            return Ring::poly(b);
        }
        if (eat("MPoly(")) {
            Ring b = ring();
            expect(')');
            return Ring::multipoly(b);
        }
        if (eat("Series(")) {
            Ring b = ring();
            expect(',');
            std::size_t n = size_param();
            expect(')');
            return Ring::series(b, n);
        }
        if (eat("Frac(")) {
            Ring b = ring();
            expect(')');
            return Ring::frac(b);
        }
        if (eat("Quot(")) {
            Ring b = ring();
            if (b.is_field()) {
                // Quot(Fp:2,[1,1,1]) names F_2[x]/(x^2+x+1).
                b = Ring::poly(b);
            }
            expect(',');
            std::string m = group_tail();
            expect(')');
            return Ring::quotient(b, Parser(m).parse_all(b));
        }
        if (eat("Mat(")) {
            Ring b = ring();
            expect(',');
            std::size_t n = size_param();
            expect(')');
            return Ring::matrix(b, n);
        }
        if (eat("Prod(")) {
            std::vector<Ring> comps{ring()};
            while (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                comps.push_back(ring());
            }
            expect(')');
            return Ring::product(std::move(comps));
        }
        if (eat("Zn:")) {
            return Ring::mod(signed_number());
        }
        if (eat("Fp:")) {
            Integer p = signed_number();
            if (!is_prime(p)) {
                throw MathError(Errc::InvalidParameters, "Fp:" + to_string(p) + " is not a prime field");
            }
            return Ring::mod(p);
        }
        if (eat("QuadF:")) {
            return Ring::quad_field(signed_number().get_si());
        }
        if (eat("Quad:")) {
            return Ring::quad_int(signed_number().get_si());
        }
        if (eat("Z")) {
            return Ring::integers();
        }
        if (eat("Q")) {
            return Ring::rationals();
        }
        if (eat("H")) {
            return Ring::quaternions();
        }
        fail("unknown ring");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::string format_quad(const Element &a)
{
    const Ring q = Ring::rationals();
    std::string sym = a.ring().quad_d() == -1 ? "i" : "s";
    return format_sum({{Element(q, a.quad().a), ""}, {Element(q, a.quad().b), sym}});
}

std::string format_quat(const Element &a)
{
    const Ring q = Ring::rationals();
    const Quat &v = a.quat();
    return format_sum({{Element(q, v.a), ""}, {Element(q, v.b), "i"}, {Element(q, v.c), "j"}, {Element(q, v.d), "k"}});
}

std::string join(const Element::Items &items, std::size_t begin, std::size_t end)
{
    std::string s;
    for (std::size_t i = begin; i < end; ++i) {
        s += (i > begin ? "," : "") + format(items[i]);
    }
    return s;
}

} // namespace

Ring parse_ring(std::string_view text)
{
    return RingParser(strip_spaces(text)).parse_all();
}

Element parse_element(const Ring &r, std::string_view text)
{
    std::string s = strip_spaces(text);
    if (s.empty()) {
        throw ParseError("empty element literal");
    }
    return Parser(std::move(s)).parse_all(r);
}

std::string variable_name(const Ring &r)
{
    static const char *const names[] = {"x", "y", "z", "w", "t", "u", "v"};
    std::size_t d = poly_depth(r);
    if (d == 0) {
        throw MathError(Errc::Unsupported, "no variable in " + r.to_string());
    }
    if (d > std::size(names)) {
        return "x" + std::to_string(d);
    }
    return names[d - 1];
}

bool is_atomic_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    char open = s.front();
    if (open == '[' || open == '{') {
        return true;
    }
    for (char c : s) {
        if (!(is_ident_char(c) || c == '^')) {
            return false;
        }
    }
    return true;
}

std::string parenthesize(const std::string &s)
{
    return is_atomic_literal(s) ? s : "(" + s + ")";
}

std::string format_sum(const std::vector<std::pair<Element, std::string>> &terms)
{
    std::string out;
    for (const auto &[c, mono] : terms) {
        if (is_zero(c)) {
            continue;
        }
        std::string cs = format(c);
        std::string t;
        if (mono.empty()) {
            t = has_top_level_sum(cs) && !out.empty() ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            t = mono;
        } else if (cs == "-1") {
            t = "-" + mono;
        } else if (has_top_level_sum(cs)) {
            t = "(" + cs + ")*" + mono;
        } else {
            t = cs + "*" + mono;
        }
        if (!out.empty() && t.front() != '-') {
            out += "+";
        }
        out += t;
    }
    return out.empty() ? "0" : out;
}

std::string format(const Element &a)
{
    const Ring &r = a.ring();
    switch (r.kind()) {
    case Kind::Integers:
    case Kind::Mod:
        return to_string(a.integer());
    case Kind::Rationals:
        return to_string(a.rational());
    case Kind::QuadInt:
    case Kind::QuadField:
        return format_quad(a);
    case Kind::Quaternions:
        return format_quat(a);
    case Kind::Poly: {
        const auto &c = a.items();
        std::string var = variable_name(r);
        std::vector<std::pair<Element, std::string>> terms;
        for (std::size_t i = c.size(); i-- > 0;) {
            terms.emplace_back(c[i], power(var, static_cast<long>(i)));
        }
        return format_sum(terms);
    }
    case Kind::Series: {
        const auto &c = a.items();
        std::string var = variable_name(r);
        std::vector<std::pair<Element, std::string>> terms;
        for (std::size_t i = 0; i < c.size(); ++i) {
            terms.emplace_back(c[i], power(var, static_cast<long>(i)));
        }
        std::string s = format_sum(terms);
        std::string big_o = "O(" + power(var, static_cast<long>(c.size())) + ")";
        return s == "0" ? big_o : s + "+" + big_o;
    }
    case Kind::MultiPoly: {
        const Terms &t = a.terms();
        std::vector<std::pair<Element, std::string>> terms;
        for (std::size_t i = 0; i < t.monomials.size(); ++i) {
            terms.emplace_back(t.coeffs[i], format_monomial(t.monomials[i]));
        }
        return format_sum(terms);
    }
    case Kind::Frac: {
        const auto &c = a.items();
        std::string num = format(c[0]);
        if (is_one(c[1])) {
            return num;
        }
        std::string den = format(c[1]);
        if (has_top_level_sum(num) || num.find('/') != std::string::npos) {
            num = "(" + num + ")";
        }
        return num + "/" + parenthesize(den);
    }
    case Kind::Quotient:
        return format(a.items()[0]);
    case Kind::Matrix: {
        std::size_t n = r.dim();
        std::string s = "[";
        for (std::size_t i = 0; i < n; ++i) {
            s += (i ? ",[" : "[") + join(a.items(), i * n, (i + 1) * n) + "]";
        }
        return s + "]";
    }
    case Kind::Product:
        return "(" + join(a.items(), 0, a.items().size()) + ")";
    }
    return "?";
}

} // namespace ringkit

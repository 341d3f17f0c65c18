#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <ringkit/algebra.hpp>
#include <ringkit/euclid.hpp>
#include <ringkit/factor.hpp>
#include <ringkit/literal.hpp>
#include <ringkit/matrix.hpp>
#include <ringkit/number_rings.hpp>
#include <ringkit/poly.hpp>
#include <ringkit/quotient.hpp>
#include <ringkit/series.hpp>

namespace ringkit::cli
{

namespace
{

using json = nlohmann::ordered_json;

struct Options {
    std::uint64_t prime_bound = 50;
    std::uint64_t shift_bound = 10;
    std::size_t precision = 8;
    bool precision_set = false;
};

struct Result {
    std::string text;
    // Ring of the element strings inside `value`; empty when there are none.
    std::string ring;
    json value;
};

using Operands = std::vector<std::string>;

struct Verb {
    std::size_t min_args;
    std::size_t max_args;
    std::string usage;
    std::function<Result(const Options &, const Operands &, std::istream &)> fn;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Result element_result(const Element &e)
{
    std::string s = format(e);
    return {s, e.ring().to_string(), s};
}

Result text_result(std::string s)
{
    json v = s;
    return {std::move(s), "", std::move(v)};
}

std::string join(const std::vector<Element> &v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + format(v[i]);
    }
    return s + "]";
}

json json_list(const std::vector<Element> &v)
{
    json a = json::array();
    for (const auto &e : v) {
        a.push_back(format(e));
    }
    return a;
}

std::pair<std::string, std::string> split_pair(const std::string &s, const std::string &sep)
{
    auto at = s.rfind(sep);
    if (at == std::string::npos) {
        throw UsageError("expected a" + sep + "b, got '" + s + "'");
    }
    return {s.substr(0, at), s.substr(at + sep.size())};
}

Ring poly_ring(const Ring &r)
{
    return r.kind() == Kind::Poly ? r : Ring::poly(r);
}

Poly parse_poly(const Ring &r, const std::string &s)
{
    return Poly::from_element(parse_element(poly_ring(r), s));
}

// Top-level comma-separated items of "[a,b,...]".
std::vector<std::string> list_items(const std::string &s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw UsageError("expected a bracketed list, got '" + s + "'");
    }
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        depth += (c == '[' || c == '(' || c == '{') - (c == ']' || c == ')' || c == '}');
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Ring matrix_base(const Ring &r)
{
    return r.kind() == Kind::Matrix ? r.base() : r;
}

Matrix parse_matrix(const Ring &r, const std::string &s)
{
    Ring base = matrix_base(r);
    std::size_t n = list_items(s).size();
    return Matrix::from_element(parse_element(Ring::matrix(base, n), s));
}

Element euclid_operand(const Ring &r, const std::string &s)
{
    if (!is_euclidean_instance(r)) {
        throw MathError(Errc::ContextNotEuclidean, r.to_string());
    }
    return parse_element(r, s);
}

Result verdict_result(const IrreducibilityVerdict &v)
{
    Result out = text_result(v.to_string());
    return out;
}

Result factorization_result(const Factorization &f, const Ring &r)
{
    json factors = json::array();
    for (const auto &[g, e] : f.factors) {
        factors.push_back({format(g), e});
    }
    json j;
    j["unit"] = format(f.unit);
    j["factors"] = factors;
    return {f.to_string(), r.to_string(), j};
}

Congruence congruence(const Ring &r, const std::string &residue, const std::string &modulus)
{
    return {parse_element(r, residue), parse_element(r, modulus)};
}

std::map<std::string, Verb> verbs()
{
    std::map<std::string, Verb> v;
    v["eval"] = {2, 2, "RING EXPR", [](const Options &, const Operands &a, std::istream &) {
                     return element_result(parse_element(parse_ring(a[0]), a[1]));
                 }};
    v["quot-eval"] = {2, 2, "RING EXPR", [](const Options &, const Operands &a, std::istream &) {
                          Ring r = parse_ring(a[0]);
                          if (r.kind() != Kind::Quotient) {
                              throw UsageError("quot-eval needs a Quot(...) ring");
                          }
                          return element_result(parse_element(r, a[1]));
                      }};
    v["gcd"] = {3, 3, "RING A B", [](const Options &, const Operands &a, std::istream &) {
                    Ring r = parse_ring(a[0]);
                    return element_result(euclid_gcd(euclid_operand(r, a[1]), euclid_operand(r, a[2])));
                }};
    v["lcm"] = {3, 3, "RING A B", [](const Options &, const Operands &a, std::istream &) {
                    Ring r = parse_ring(a[0]);
                    return element_result(euclid_lcm(euclid_operand(r, a[1]), euclid_operand(r, a[2])));
                }};
    v["xgcd"] = {3, 3, "RING A B", [](const Options &, const Operands &a, std::istream &) {
                     Ring r = parse_ring(a[0]);
                     BezoutCert c = extended_gcd(euclid_operand(r, a[1]), euclid_operand(r, a[2]));
                     json j;
                     j["g"] = format(c.g);
                     j["x"] = format(c.x);
                     j["y"] = format(c.y);
                     return Result{"g=" + format(c.g) + " x=" + format(c.x) + " y=" + format(c.y), r.to_string(), j};
                 }};
    v["inv"] = {2, 2, "RING A", [](const Options &, const Operands &a, std::istream &) {
                    return element_result(inverse(parse_element(parse_ring(a[0]), a[1])));
                }};
    v["crt"] = {1, 64, "RING [b:m ...]  (or 'b mod m' lines on stdin)",
                [](const Options &, const Operands &a, std::istream &in) {
                    Ring r = parse_ring(a[0]);
                    std::vector<Congruence> sys;
                    for (std::size_t i = 1; i < a.size(); ++i) {
                        auto [b, m] = split_pair(a[i], ":");
                        sys.push_back(congruence(r, b, m));
                    }
                    if (sys.empty()) {
                        std::string line;
                        while (std::getline(in, line)) {
                            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                                continue;
                            }
                            auto [b, m] = split_pair(line, " mod ");
                            sys.push_back(congruence(r, b, m));
                        }
                    }
                    if (sys.empty()) {
                        throw UsageError("crt needs at least one congruence");
                    }
                    CrtSolution s = crt_solve(sys);
                    json j;
                    j["x"] = format(s.x);
                    j["modulus"] = format(s.modulus);
                    return Result{format(s.x) + " mod " + format(s.modulus), r.to_string(), j};
                }};
    v["phi"] = {1, 1, "N", [](const Options &, const Operands &a, std::istream &) {
                    return element_result(from_integer(Ring::integers(), euler_phi(parse_integer(a[0]))));
                }};
    v["factor-int"] = {1, 1, "N", [](const Options &, const Operands &a, std::istream &) {
                           return factorization_result(factor_integer(parse_integer(a[0])), Ring::integers());
                       }};
    v["factor-poly"] = {2, 2, "RING F", [](const Options &, const Operands &a, std::istream &) {
                            Poly f = parse_poly(parse_ring(a[0]), a[1]);
                            return factorization_result(factor_poly_fp(f), Ring::poly(f.base()));
                        }};
    v["irreducible"] = {2, 2, "RING F", [](const Options &o, const Operands &a, std::istream &) {
                            Ring r = parse_ring(a[0]);
                            if (r.kind() == Kind::QuadInt) {
                                return verdict_result(quad_irreducibility(parse_element(r, a[1])));
                            }
                            IrreducibilityOptions opts;
                            opts.prime_bound = o.prime_bound;
                            opts.shift_bound = o.shift_bound;
                            return verdict_result(irreducibility(parse_poly(r, a[1]), opts));
                        }};
    v["interpolate"] = {2, 64, "RING a:b ...", [](const Options &, const Operands &a, std::istream &) {
                            Ring r = parse_ring(a[0]);
                            std::vector<std::pair<Element, Element>> pts;
                            for (std::size_t i = 1; i < a.size(); ++i) {
                                auto [x, y] = split_pair(a[i], ":");
                                pts.emplace_back(parse_element(r, x), parse_element(r, y));
                            }
                            return element_result(lagrange_interpolate(r, pts).to_element());
                        }};
    v["series-invert"] = {2, 2, "RING F", [](const Options &o, const Operands &a, std::istream &) {
                              Ring r = parse_ring(a[0]);
                              std::size_t prec = o.precision;
                              if (r.kind() == Kind::Series) {
                                  prec = o.precision_set ? o.precision : r.precision();
                                  r = r.base();
                              }
                              Ring s = Ring::series(r, prec);
                              return element_result(inverse(parse_element(s, a[1])));
                          }};
    v["laurent"] = {3, 3, "RING P Q", [](const Options &o, const Operands &a, std::istream &) {
                        Ring r = parse_ring(a[0]);
                        if (r.kind() == Kind::Series) {
                            r = r.base();
                        }
                        Ring s = Ring::series(r, o.precision);
                        LaurentSeries l = laurent_from_fraction(TruncSeries::from_element(parse_element(s, a[1])),
                                                                TruncSeries::from_element(parse_element(s, a[2])));
                        json terms = json::array();
                        for (const auto &[e, c] : l.principal) {
                            terms.push_back({e, format(c)});
                        }
                        for (std::size_t i = 0; i < l.tail.precision(); ++i) {
                            if (!is_zero(l.tail[i])) {
                                terms.push_back({static_cast<long>(i), format(l.tail[i])});
                            }
                        }
                        json j;
                        j["terms"] = terms;
                        j["precision"] = l.tail.precision();
                        return Result{l.to_string(), r.to_string(), j};
                    }};
    v["quad-norm"] = {2, 2, "RING X", [](const Options &, const Operands &a, std::istream &) {
                          Ring r = parse_ring(a[0]);
                          if (r.kind() != Kind::QuadInt && r.kind() != Kind::QuadField) {
                              throw UsageError("quad-norm needs a Quad:d or QuadF:d ring");
                          }
                          Rational n = quad_norm(parse_element(r, a[1]));
                          return element_result(Element(Ring::rationals(), n));
                      }};
    v["quat-mul"] = {2, 2, "A B", [](const Options &, const Operands &a, std::istream &) {
                         Ring h = Ring::quaternions();
                         return element_result(quat_mul(parse_element(h, a[0]), parse_element(h, a[1])));
                     }};
    v["classify"] = {1, 1, "RING", [](const Options &, const Operands &a, std::istream &) {
                         Ring r = parse_ring(a[0]);
                         Classification c = classify(r);
                         json j;
                         j["units"] = json_list(c.units);
                         j["zero_divisors"] = json_list(c.zero_divisors);
                         j["nilpotents"] = json_list(c.nilpotents);
                         j["idempotents"] = json_list(c.idempotents);
                         return Result{"units=" + join(c.units) + " zero_divisors=" + join(c.zero_divisors) +
                                           " nilpotents=" + join(c.nilpotents) + " idempotents=" +
                                           join(c.idempotents),
                                       r.to_string(), j};
                     }};
    v["mat-inv"] = {2, 2, "RING M", [](const Options &, const Operands &a, std::istream &) {
                        return element_result(mat_inverse(parse_matrix(parse_ring(a[0]), a[1])).to_element());
                    }};
    v["cramer"] = {3, 3, "RING M B", [](const Options &, const Operands &a, std::istream &) {
                       Ring r = parse_ring(a[0]);
                       Matrix m = parse_matrix(r, a[1]);
                       std::vector<Element> b;
                       for (const auto &item : list_items(a[2])) {
                           b.push_back(parse_element(m.base(), item));
                       }
                       std::vector<Element> x = cramer_solve(m, b);
                       return Result{join(x), m.base().to_string(), json_list(x)};
                   }};
    v["ideal-lattice"] = {1, 1, "N", [](const Options &, const Operands &a, std::istream &) {
                              std::string divs;
                              std::string primes;
                              std::string maximal;
                              json j = json::array();
                              for (const auto &e : ideal_divisor_lattice(parse_integer(a[0]))) {
                                  std::string d = to_string(e.divisor);
                                  divs += (divs.empty() ? "" : ",") + d;
                                  if (e.is_prime) {
                                      primes += (primes.empty() ? "" : ",") + d;
                                  }
                                  if (e.is_maximal) {
                                      maximal += (maximal.empty() ? "" : ",") + d;
                                  }
                                  j.push_back({{"divisor", d}, {"prime", e.is_prime}, {"maximal", e.is_maximal}});
                              }
                              return Result{"divisors=[" + divs + "] prime=[" + primes + "] maximal=[" + maximal +
                                                "]",
                                            Ring::integers().to_string(), j};
                          }};
    v["content"] = {2, 2, "RING F", [](const Options &, const Operands &a, std::istream &) {
                        return element_result(from_integer(Ring::integers(), content(parse_poly(parse_ring(a[0]), a[1]))));
                    }};
    v["primassoc"] = {2, 2, "RING F", [](const Options &, const Operands &a, std::istream &) {
                          return element_result(primitive_associate(parse_poly(parse_ring(a[0]), a[1])).to_element());
                      }};
    v["sqfree"] = {2, 2, "RING X", [](const Options &, const Operands &a, std::istream &) {
                       Ring r = parse_ring(a[0]);
                       if (r.kind() == Kind::Integers) {
                           return element_result(from_integer(r, squarefree_part(parse_integer(a[1]))));
                       }
                       return element_result(squarefree_part(parse_poly(r, a[1])).to_element());
                   }};
    return v;
}

std::string verb_list(const std::map<std::string, Verb> &table)
{
    std::ostringstream os;
    os << "Verbs:\n";
    for (const auto &[name, verb] : table) {
        os << "  " << name << " " << verb.usage << "\n";
    }
    return os.str();
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    static const std::map<std::string, Verb> table = verbs();

    CLI::App app{"Exact arithmetic in rings built from Z, Q, Z/n, quadratic integers and quaternions", "ringkit"};
    app.footer(verb_list(table));
    Options opts;
    bool as_json = false;
    std::string verb_name;
    app.add_option("--prime-bound", opts.prime_bound, "largest prime tried by the Eisenstein search")
        ->capture_default_str();
    app.add_option("--shift-bound", opts.shift_bound, "largest |a| tried for f(x+a)")->capture_default_str();
    auto *prec = app.add_option("--precision", opts.precision, "series precision")->capture_default_str();
    app.add_flag("--json", as_json, "print a JSON envelope {verb, ring, result}");
    app.add_option("verb", verb_name, "see the verb list below")->required();
    // Operands are ring literals that CLI11 would otherwise split ("[1,2]").
    app.allow_extras();

    try {
        std::vector<std::string> reversed;
        for (auto it = args.rbegin(); it != args.rend(); ++it) {
            reversed.push_back(*it);
        }
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    opts.precision_set = prec->count() > 0;

    auto it = table.find(verb_name);
    if (it == table.end()) {
        err << "unknown verb '" << verb_name << "'\n" << verb_list(table);
        return 2;
    }
    const Verb &verb = it->second;
    Operands operands = app.remaining();
    for (const auto &op : operands) {
        if (op.rfind("--", 0) == 0) {
            err << "unknown option " << op << "\n";
            return 2;
        }
    }
    if (operands.size() < verb.min_args || operands.size() > verb.max_args) {
        err << "usage: ringkit " << it->first << " " << verb.usage << "\n";
        return 2;
    }

    try {
        Result r = verb.fn(opts, operands, in);
        if (as_json) {
            json j;
            j["verb"] = it->first;
            j["ring"] = r.ring;
            j["result"] = r.value;
            out << j.dump() << "\n";
        } else {
            out << r.text << "\n";
        }
        return 0;
    } catch (const MathError &e) {
        err << e.name();
        if (!e.detail().empty()) {
            err << " " << e.detail();
        }
        err << "\n";
        return 1;
    } catch (const ParseError &e) {
        err << "ParseError " << e.what() << "\n";
        return 2;
    } catch (const UsageError &e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ringkit::cli

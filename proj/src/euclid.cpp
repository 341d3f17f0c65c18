#include <ringkit/euclid.hpp>

#include <ringkit/literal.hpp>
#include <ringkit/number_rings.hpp>
#include <ringkit/poly.hpp>

namespace ringkit
{

bool is_euclidean_instance(const Ring &r)
{
    switch (r.kind()) {
    case Kind::Integers:
        return true;
    case Kind::Poly:
        return r.base().is_field();
    case Kind::QuadInt:
        return r.quad_d() == -1;
    default:
        return false;
    }
}

namespace
{

void require_instance(const Ring &r)
{
    if (!is_euclidean_instance(r)) {
        throw MathError(Errc::ContextNotEuclidean, r.to_string());
    }
}

} // namespace

EuclideanDivision euclid_divmod(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    const Ring &ring = a.ring();
    require_instance(ring);
    if (is_zero(b)) {
        throw MathError(Errc::DivisionByZero);
    }
    switch (ring.kind()) {
    case Kind::Integers: {
        Integer r = mod_floor(a.integer(), b.integer());
        Integer q = (a.integer() - r) / b.integer();
        return {Element::raw(ring, std::move(q)), Element::raw(ring, std::move(r))};
    }
    case Kind::Poly: {
        Division d = divrem_field(Poly::from_element(a), Poly::from_element(b));
        return {d.q.to_element(ring), d.r.to_element(ring)};
    }
    default: {
        GaussianDivision d = gaussian_divmod(a, b);
        return {d.q, d.r};
    }
    }
}

Element canonical_remainder(const Element &a, const Element &m)
{
    return euclid_divmod(a, m).r;
}

Element normalizing_unit(const Element &a)
{
    const Ring &ring = a.ring();
    if (is_zero(a)) {
        return one(ring);
    }
    if (ring.is_field()) {
        return inverse(a);
    }
    switch (ring.kind()) {
    case Kind::Integers:
        return from_integer(ring, a.integer() < 0 ? -1 : 1);
    case Kind::Poly:
        if (ring.base().is_field()) {
            return Poly::constant(inverse(Poly::from_element(a).leading())).to_element(ring);
        }
        break;
    case Kind::QuadInt:
        if (ring.quad_d() == -1) {
            const Element units[] = {quad_make(ring, 1, 0), quad_make(ring, 0, 1), quad_make(ring, -1, 0),
                                     quad_make(ring, 0, -1)};
            for (const auto &u : units) {
                const Quad &v = (u * a).quad();
                if (v.a > 0 && v.b >= 0) {
                    return u;
                }
            }
        }
        break;
    default:
        break;
    }
    throw MathError(Errc::ContextNotEuclidean, ring.to_string());
}

Element canonical_associate(const Element &a)
{
    return normalizing_unit(a) * a;
}

bool divides(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    if (is_zero(a)) {
        return is_zero(b);
    }
    const Ring &ring = a.ring();
    if (ring.is_field()) {
        return true;
    }
    if (is_euclidean_instance(ring)) {
        return is_zero(euclid_divmod(b, a).r);
    }
    if (ring.kind() == Kind::QuadInt) {
        return quad_divides(a, b);
    }
    if (ring.kind() == Kind::Poly && ring.base().is_domain()) {
        try {
            exact_divide(Poly::from_element(b), Poly::from_element(a));
            return true;
        } catch (const MathError &e) {
            if (e.code() == Errc::NotInvertible) {
                return false;
            }
            throw;
        }
    }
    throw MathError(Errc::Unsupported, "divisibility in " + ring.to_string());
}

bool are_associates(const Element &a, const Element &b)
{
    return divides(a, b) && divides(b, a);
}

std::vector<Element> remainder_sequence(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    require_instance(a.ring());
    std::vector<Element> seq{a, b};
    while (!is_zero(seq.back())) {
        const Element &x = seq[seq.size() - 2];
        const Element &y = seq.back();
        seq.push_back(euclid_divmod(x, y).r);
    }
    return seq;
}

Element euclid_gcd(const Element &a, const Element &b)
{
    return extended_gcd(a, b).g;
}

BezoutCert extended_gcd(const Element &a, const Element &b)
{
    require_same_ring(a, b);
    const Ring &ring = a.ring();
    require_instance(ring);
    Element r0 = a;
    Element r1 = b;
    Element s0 = one(ring);
    Element s1 = zero(ring);
    Element t0 = zero(ring);
    Element t1 = one(ring);
    while (!is_zero(r1)) {
        EuclideanDivision d = euclid_divmod(r0, r1);
        Element s2 = s0 - d.q * s1;
        Element t2 = t0 - d.q * t1;
        r0 = std::move(r1);
        r1 = std::move(d.r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Element u = normalizing_unit(r0);
    return {u * r0, u * s0, u * t0};
}

Element euclid_lcm(const Element &a, const Element &b)
{
    if (is_zero(a) || is_zero(b)) {
        return zero(a.ring());
    }
    Element g = euclid_gcd(a, b);
    return canonical_associate(euclid_divmod(a, g).q * b);
}

bool are_comaximal(const std::vector<Element> &moduli)
{
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            if (!is_unit(euclid_gcd(moduli[i], moduli[j]))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Element> crt_idempotents(const std::vector<Element> &moduli)
{
    if (moduli.empty()) {
        throw MathError(Errc::EmptySystem);
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            Element g = euclid_gcd(moduli[i], moduli[j]);
            if (!is_unit(g)) {
                throw MathError(Errc::NotComaximal,
                                format(moduli[i]) + "," + format(moduli[j]) + " gcd=" + format(g));
            }
        }
    }
    const Ring &ring = moduli.front().ring();
    Element m = one(ring);
    for (const auto &mk : moduli) {
        m = m * mk;
    }
    std::vector<Element> es;
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        Element e = one(ring);
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            if (j == k) {
                continue;
            }
            // 1 = m_k x + m_j y, so t_j = m_j y lies in (m_j) and is 1 mod m_k.
            BezoutCert c = extended_gcd(moduli[k], moduli[j]);
            e = e * (moduli[j] * c.y);
        }
        es.push_back(canonical_remainder(e, m));
    }
    return es;
}

CrtSolution crt_solve(const std::vector<Congruence> &system)
{
    if (system.empty()) {
        throw MathError(Errc::EmptySystem);
    }
    std::vector<Element> moduli;
    for (const auto &c : system) {
        require_same_ring(c.residue, c.modulus);
        moduli.push_back(c.modulus);
    }
    std::vector<Element> es = crt_idempotents(moduli);
    const Ring &ring = moduli.front().ring();
    Element m = one(ring);
    Element x = zero(ring);
    for (std::size_t k = 0; k < system.size(); ++k) {
        m = m * moduli[k];
        x = x + es[k] * system[k].residue;
    }
    return {canonical_remainder(x, m), canonical_associate(m)};
}

} // namespace ringkit

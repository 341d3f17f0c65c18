#include <ringkit/matrix.hpp>

#include <ringkit/literal.hpp>

namespace ringkit
{

Matrix::Matrix(Ring base, std::size_t n) : base_(std::move(base)), n_(n), entries_(n * n, zero(base_)) {}

Matrix::Matrix(Ring base, std::size_t n, std::vector<Element> entries)
    : base_(std::move(base)), n_(n), entries_(std::move(entries))
{
    if (entries_.size() != n_ * n_) {
        throw MathError(Errc::ShapeMismatch, std::to_string(entries_.size()) + " entries for " + std::to_string(n_) +
                                                 "x" + std::to_string(n_));
    }
}

Matrix Matrix::identity(const Ring &base, std::size_t n)
{
    Matrix m(base, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = one(base);
    }
    return m;
}

Matrix Matrix::from_rows(const Ring &base, const std::vector<std::vector<Element>> &rows)
{
    std::vector<Element> entries;
    for (const auto &row : rows) {
        if (row.size() != rows.size()) {
            throw MathError(Errc::ShapeMismatch, "matrix must be square");
        }
        for (const auto &e : row) {
            if (!(e.ring() == base)) {
                throw MathError(Errc::ContextMismatch, e.ring().to_string() + " vs " + base.to_string());
            }
            entries.push_back(e);
        }
    }
    return Matrix(base, rows.size(), std::move(entries));
}

Matrix Matrix::from_integers(const Ring &base, std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<Element>> v;
    for (const auto &row : rows) {
        std::vector<Element> r;
        for (long c : row) {
            r.push_back(from_integer(base, c));
        }
        v.push_back(std::move(r));
    }
    return from_rows(base, v);
}

Matrix Matrix::from_element(const Element &e)
{
    if (e.ring().kind() != Kind::Matrix) {
        throw MathError(Errc::ContextMismatch, "not a matrix: " + e.ring().to_string());
    }
    return Matrix(e.ring().base(), e.ring().dim(), e.items());
}

Matrix Matrix::minor(std::size_t i, std::size_t j) const
{
    std::vector<Element> out;
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
            if (r != i && c != j) {
                out.push_back(at(r, c));
            }
        }
    }
    return Matrix(base_, n_ - 1, std::move(out));
}

Element Matrix::to_element() const
{
    return Element::raw(Ring::matrix(base_, n_), entries_);
}

bool operator==(const Matrix &a, const Matrix &b)
{
    return a.base_ == b.base_ && a.n_ == b.n_ && a.entries_ == b.entries_;
}

namespace
{

void same_shape(const Matrix &a, const Matrix &b)
{
    if (!(a.base() == b.base())) {
        throw MathError(Errc::ContextMismatch, a.base().to_string() + " vs " + b.base().to_string());
    }
    if (a.size() != b.size()) {
        throw MathError(Errc::ShapeMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

void require_commutative(const Matrix &a)
{
    if (!a.base().is_commutative()) {
        throw MathError(Errc::Unsupported, "determinant over " + a.base().to_string());
    }
}

} // namespace

Matrix mat_add(const Matrix &a, const Matrix &b)
{
    same_shape(a, b);
    std::vector<Element> out;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        out.push_back(a.entries()[i] + b.entries()[i]);
    }
    return Matrix(a.base(), a.size(), std::move(out));
}

Matrix mat_neg(const Matrix &a)
{
    std::vector<Element> out;
    for (const auto &e : a.entries()) {
        out.push_back(-e);
    }
    return Matrix(a.base(), a.size(), std::move(out));
}

Matrix mat_sub(const Matrix &a, const Matrix &b)
{
    return mat_add(a, mat_neg(b));
}

Matrix mat_mul(const Matrix &a, const Matrix &b)
{
    same_shape(a, b);
    std::size_t n = a.size();
    Matrix c(a.base(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Element s = zero(a.base());
            for (std::size_t k = 0; k < n; ++k) {
                s = s + a.at(i, k) * b.at(k, j);
            }
            c.at(i, j) = s;
        }
    }
    return c;
}

Matrix mat_scale(const Element &c, const Matrix &a)
{
    std::vector<Element> out;
    for (const auto &e : a.entries()) {
        out.push_back(c * e);
    }
    return Matrix(a.base(), a.size(), std::move(out));
}

std::vector<Element> mat_apply(const Matrix &a, const std::vector<Element> &v)
{
    if (v.size() != a.size()) {
        throw MathError(Errc::ShapeMismatch, "vector length " + std::to_string(v.size()));
    }
    std::vector<Element> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Element s = zero(a.base());
        for (std::size_t k = 0; k < a.size(); ++k) {
            s = s + a.at(i, k) * v[k];
        }
        out.push_back(s);
    }
    return out;
}

Element trace(const Matrix &a)
{
    Element s = zero(a.base());
    for (std::size_t i = 0; i < a.size(); ++i) {
        s = s + a.at(i, i);
    }
    return s;
}

Element det(const Matrix &a)
{
    require_commutative(a);
    std::size_t n = a.size();
    if (n > 8) {
        throw MathError(Errc::TooLarge, "cofactor expansion limited to 8x8");
    }
    if (n == 1) {
        return a.at(0, 0);
    }
    if (n == 2) {
        return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    }
    Element s = zero(a.base());
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(a.at(0, j))) {
            continue;
        }
        Element term = a.at(0, j) * det(a.minor(0, j));
        s = j % 2 == 0 ? s + term : s - term;
    }
    return s;
}

Matrix adjugate(const Matrix &a)
{
    require_commutative(a);
    std::size_t n = a.size();
    Matrix adj(a.base(), n);
    if (n == 1) {
        adj.at(0, 0) = one(a.base());
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Element c = det(a.minor(i, j));
            adj.at(j, i) = (i + j) % 2 == 0 ? c : -c;
        }
    }
    return adj;
}

Matrix mat_inverse(const Matrix &a)
{
    Element d = det(a);
    if (!is_unit(d)) {
        throw MathError(Errc::DeterminantNotUnit, format(d));
    }
    return mat_scale(inverse(d), adjugate(a));
}

std::vector<Element> cramer_solve(const Matrix &a, const std::vector<Element> &b)
{
    if (b.size() != a.size()) {
        throw MathError(Errc::ShapeMismatch, "right-hand side length " + std::to_string(b.size()));
    }
    Element d = det(a);
    if (!is_unit(d)) {
        throw MathError(Errc::DeterminantNotUnit, format(d));
    }
    Element dinv = inverse(d);
    std::vector<Element> x;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Matrix ai = a;
        for (std::size_t r = 0; r < a.size(); ++r) {
            ai.at(r, i) = b[r];
        }
        x.push_back(det(ai) * dinv);
    }
    std::vector<Element> check = mat_apply(mat_scale(dinv, adjugate(a)), b);
    if (check != x) {
        throw MathError(Errc::Unsupported, "Cramer and adjugate solutions disagree");
    }
    return x;
}

std::string to_string(const Matrix &a)
{
    return format(a.to_element());
}

} // namespace ringkit

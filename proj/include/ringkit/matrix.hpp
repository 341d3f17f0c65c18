#ifndef RINGKIT_MATRIX_HPP
#define RINGKIT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <ringkit/ring.hpp>

namespace ringkit
{

class Matrix
{
public:
    Matrix(Ring base, std::size_t n); // zero matrix
    Matrix(Ring base, std::size_t n, std::vector<Element> entries);

    static Matrix identity(const Ring &base, std::size_t n);
    static Matrix from_rows(const Ring &base, const std::vector<std::vector<Element>> &rows);
    static Matrix from_integers(const Ring &base, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_element(const Element &e);

    const Ring &base() const noexcept { return base_; }
    std::size_t size() const noexcept { return n_; }
    const Element &at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Element &at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const std::vector<Element> &entries() const noexcept { return entries_; }
    std::vector<Element> release() && { return std::move(entries_); }

    // Delete row i and column j.
    Matrix minor(std::size_t i, std::size_t j) const;

    Element to_element() const;

    friend bool operator==(const Matrix &a, const Matrix &b);

private:
    Ring base_;
    std::size_t n_;
    std::vector<Element> entries_;
};

Matrix mat_add(const Matrix &a, const Matrix &b);
Matrix mat_sub(const Matrix &a, const Matrix &b);
Matrix mat_neg(const Matrix &a);
Matrix mat_mul(const Matrix &a, const Matrix &b);
Matrix mat_scale(const Element &c, const Matrix &a);
std::vector<Element> mat_apply(const Matrix &a, const std::vector<Element> &v);
Element trace(const Matrix &a);

// Cofactor expansion along the first row; n <= 8.
Element det(const Matrix &a);
Matrix adjugate(const Matrix &a);
// det(A)^{-1} * adj(A); throws DeterminantNotUnit.
Matrix mat_inverse(const Matrix &a);

// x_i = det(A_i) / det(A), cross-checked against det(A)^{-1} * adj(A) * b.
// Throws DeterminantNotUnit.
std::vector<Element> cramer_solve(const Matrix &a, const std::vector<Element> &b);

std::string to_string(const Matrix &a);

inline Matrix operator+(const Matrix &a, const Matrix &b) { return mat_add(a, b); }
inline Matrix operator*(const Matrix &a, const Matrix &b) { return mat_mul(a, b); }

} // namespace ringkit

#endif

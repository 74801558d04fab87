#ifndef AXTK_LINALG_HPP
#define AXTK_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "axtk/fields.hpp"

namespace axtk {

/// Dense vector over a single field.
class Vector {
public:
    Vector() = default;
    Vector(FieldPtr field, std::size_t n);
    Vector(FieldPtr field, std::vector<Scalar> entries);

    const FieldPtr& field() const { return field_; }
    std::size_t size() const { return e_.size(); }
    const Scalar& operator[](std::size_t i) const { return e_[i]; }
    Scalar& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const;
    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    Vector operator-() const;
    Vector scaled(const Scalar& c) const;
    friend bool operator==(const Vector& a, const Vector& b);
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Scalar> e_;
};

/// Dense rectangular matrix over a single field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldPtr& field, std::size_t n);
    static Matrix from_columns(const FieldPtr& field, std::span<const Vector> cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Vector apply(const Vector& v) const;  // M * v
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    bool is_zero() const;

    std::string str() const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// Reduced row echelon form. Pivoting is deterministic: first nonzero entry
/// in column order. RREF is unique, so the result does not depend on the
/// input's row order.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};
Echelon echelonize(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Echelon-canonical basis of the right kernel { v : Mv = 0 }.
std::vector<Vector> nullspace(const Matrix& m);

/// One exact solution of Mx = b (free coordinates set to zero), or nullopt
/// when b is outside the column span.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Exact coefficients of v over a list of basis vectors, or a certificate: a
/// functional y with y.B = 0 for every basis vector B and y.v != 0.
struct SpanMembership {
    std::optional<std::vector<Scalar>> coefficients;
    std::optional<Vector> certificate;
    bool in_span() const { return coefficients.has_value(); }
};
SpanMembership span_membership(std::span<const Vector> basis, const Vector& v);

/// Fraction-free (Bareiss) determinant and rank. Over function fields the
/// rows are cleared of denominators first so every interior division is an
/// exact one in the polynomial ring; the second route for the Gaussian
/// elimination above.
Scalar det_bareiss(const Matrix& m);
std::size_t rank_bareiss(const Matrix& m);

}  // namespace axtk

#endif

#include "axtk/linalg.hpp"

#include <cassert>
#include <sstream>

namespace axtk {

namespace {

void require_same(const FieldPtr& a, const FieldPtr& b) {
    if (!a->same(*b)) throw DescriptorMismatch("mixed fields in a linear-algebra operation");
}

}  // namespace

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(FieldPtr field, std::size_t n) : field_(std::move(field)), e_(n, field_->zero()) {}

Vector::Vector(FieldPtr field, std::vector<Scalar> entries)
    : field_(std::move(field)), e_(std::move(entries)) {
    for (const auto& x : e_) require_same(field_, x.field());
}

bool Vector::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    require_same(a.field_, b.field_);
    assert(a.size() == b.size());
    Vector r(a.field_, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }

Vector Vector::operator-() const {
    Vector r(field_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -e_[i];
    return r;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector r(field_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] * c;
    return r;
}

bool operator==(const Vector& a, const Vector& b) {
    if (!a.field_->same(*b.field_) || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string Vector::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < size(); ++i) out << (i ? ", " : "") << e_[i].str();
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::from_columns(const FieldPtr& field, std::span<const Vector> cols) {
    std::size_t n = cols.empty() ? 0 : cols[0].size();
    Matrix m(field, n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        assert(cols[j].size() == n);
        require_same(field, cols[j].field());
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same(a.field_, b.field_);
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix r(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    return a + b.scaled(a.field_->from_int(-1));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same(a.field_, b.field_);
    assert(a.cols_ == b.rows_);
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
    return r;
}

Vector Matrix::apply(const Vector& v) const {
    require_same(field_, v.field());
    assert(cols_ == v.size());
    Vector r(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = field_->zero();
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            acc = acc + at(i, j) * v[j];
        }
        r[i] = acc;
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!a.field_->same(*b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (!(a.e_[i] == b.e_[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).str();
        out << "]\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Gaussian elimination

Echelon echelonize(const Matrix& m) {
    Echelon res;
    res.rref = m;
    Matrix& a = res.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // deterministic pivot: first nonzero entry in this column
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

std::size_t rank(const Matrix& m) { return echelonize(m).rank(); }

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = echelonize(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.field(), m.cols());
        v[f] = m.field()->one();
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.rref.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    require_same(m.field(), b.field());
    assert(m.rows() == b.size());
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Echelon e = echelonize(aug);
    for (std::size_t c : e.pivot_cols)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    Vector x(m.field(), m.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[e.pivot_cols[r]] = e.rref.at(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = m.field()->one();
    }
    Echelon e = echelonize(aug);
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
    return inv;
}

SpanMembership span_membership(std::span<const Vector> basis, const Vector& v) {
    SpanMembership out;
    std::size_t n = v.size();
    std::size_t k = basis.size();
    // eliminate on [B | v | I] so an inconsistent row carries its own
    // certificate: the row-combination functional applied to the original data
    Matrix aug(v.field(), n, k + 1 + n);
    for (std::size_t j = 0; j < k; ++j) {
        assert(basis[j].size() == n);
        for (std::size_t i = 0; i < n; ++i) aug.at(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        aug.at(i, k) = v[i];
        aug.at(i, k + 1 + i) = v.field()->one();
    }
    Echelon e = echelonize(aug);
    std::optional<std::size_t> bad_row;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.pivot_cols[r] == k) bad_row = r;
    if (bad_row) {
        Vector cert(v.field(), n);
        for (std::size_t i = 0; i < n; ++i) cert[i] = e.rref.at(*bad_row, k + 1 + i);
        out.certificate = std::move(cert);
        return out;
    }
    std::vector<Scalar> coeffs(k, v.field()->zero());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.pivot_cols[r] < k) coeffs[e.pivot_cols[r]] = e.rref.at(r, k);
    out.coefficients = std::move(coeffs);
    return out;
}

// ---------------------------------------------------------------------------
// fraction-free route

namespace {

// Scale a row of function-field scalars to denominator 1; returns the factor.
Scalar clear_denominators(const FieldPtr& f, std::vector<Scalar>& row) {
    if (f->kind() != FieldKind::Function) return f->one();
    Scalar factor = f->one();
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        Scalar d = Scalar::make_function(f, x.den(), MPoly::constant(x.den().nvars(), x.den().characteristic(), Rat(1)));
        // multiply by den / gcd(current factor's numerator, den): lcm growth
        factor = factor * d;
    }
    for (auto& x : row) x = x * factor;
    return factor;
}

}  // namespace

Scalar det_bareiss(const Matrix& m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    const FieldPtr& f = m.field();
    if (n == 0) return f->one();

    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, f->zero()));
    Scalar scale = f->one();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        scale = scale * clear_denominators(f, a[i]);
    }

    bool negate = false;
    Scalar prev = f->one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a[s][k].is_zero()) ++s;
            if (s == n) return f->zero();
            std::swap(a[k], a[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = f->zero();
        }
        prev = a[k][k];
    }
    Scalar det = a[n - 1][n - 1];
    if (negate) det = -det;
    return det / scale;
}

std::size_t rank_bareiss(const Matrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    const FieldPtr& f = m.field();
    std::vector<std::vector<Scalar>> a(nr, std::vector<Scalar>(nc, f->zero()));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);
        clear_denominators(f, a[i]);
    }
    Scalar prev = f->one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a[piv][c].is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = f->zero();
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace axtk

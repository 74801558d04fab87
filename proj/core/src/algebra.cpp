#include "axtk/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace axtk {

namespace {

void require_distinct(const std::vector<Scalar>& evs, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < evs.size(); ++i)
        for (std::size_t j = i + 1; j < evs.size(); ++j)
            if (evs[i] == evs[j])
                throw InvalidParameter("fusion eigenvalues " + names[i] + " and " + names[j] +
                                       " coincide in " + evs[i].field()->describe() +
                                       " (value " + evs[i].str() + ")");
}

}  // namespace

// ---------------------------------------------------------------------------
// FusionLaw

FusionLaw FusionLaw::monster(const Scalar& alpha, const Scalar& beta) {
    if (!alpha.field()->same(*beta.field()))
        throw DescriptorMismatch("alpha and beta live in different fields");
    FusionLaw law;
    law.name_ = "monster";
    law.field_ = alpha.field();
    const FieldPtr& f = law.field_;
    law.evs_ = {f->one(), f->zero(), alpha, beta};
    require_distinct(law.evs_, {"1", "0", "alpha", "beta"});
    auto& t = law.table_;
    t.assign(4, std::vector<std::vector<std::size_t>>(4));
    auto set = [&](std::size_t i, std::size_t j, std::vector<std::size_t> v) {
        t[i][j] = v;
        t[j][i] = std::move(v);
    };
    set(0, 0, {0});
    set(0, 1, {});
    set(0, 2, {2});
    set(0, 3, {3});
    set(1, 1, {1});
    set(1, 2, {2});
    set(1, 3, {3});
    set(2, 2, {0, 1});
    set(2, 3, {3});
    set(3, 3, {0, 1, 2});
    return law;
}

FusionLaw FusionLaw::jordan(const Scalar& eta) {
    FusionLaw law;
    law.name_ = "jordan";
    law.field_ = eta.field();
    const FieldPtr& f = law.field_;
    law.evs_ = {f->one(), f->zero(), eta};
    require_distinct(law.evs_, {"1", "0", "eta"});
    auto& t = law.table_;
    t.assign(3, std::vector<std::vector<std::size_t>>(3));
    auto set = [&](std::size_t i, std::size_t j, std::vector<std::size_t> v) {
        t[i][j] = v;
        t[j][i] = std::move(v);
    };
    set(0, 0, {0});
    set(0, 1, {});
    set(0, 2, {2});
    set(1, 1, {1});
    set(1, 2, {2});
    set(2, 2, {0, 1});
    return law;
}

const std::vector<std::size_t>& FusionLaw::fuse(std::size_t i, std::size_t j) const {
    return table_[i][j];
}

const Scalar& FusionLaw::alpha() const {
    if (evs_.size() != 4) throw InvalidParameter("law '" + name_ + "' has no alpha eigenvalue");
    return evs_[2];
}

const Scalar& FusionLaw::beta() const { return evs_.back(); }

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(FieldPtr field, std::vector<std::string> basis_names)
    : field_(std::move(field)), names_(std::move(basis_names)) {
    if (names_.empty()) throw InvalidParameter("algebra needs at least one basis element");
    products_.resize(names_.size() * (names_.size() + 1) / 2);
}

std::size_t Algebra::tri_index(std::size_t i, std::size_t j) const {
    assert(i < dim() && j < dim());
    if (i > j) std::swap(i, j);
    return i * dim() - i * (i + 1) / 2 + j;
}

void Algebra::set_product(std::size_t i, std::size_t j, Vector value) {
    if (value.size() != dim() || !value.field()->same(*field_))
        throw DescriptorMismatch("product vector has the wrong shape");
    products_[tri_index(i, j)] = std::move(value);
}

bool Algebra::has_product(std::size_t i, std::size_t j) const {
    return products_[tri_index(i, j)].has_value();
}

const Vector& Algebra::basis_product(std::size_t i, std::size_t j) const {
    const auto& p = products_[tri_index(i, j)];
    if (!p)
        throw InvalidParameter("product of basis elements " + std::to_string(i) + "," +
                               std::to_string(j) + " is not set");
    return *p;
}

Vector Algebra::basis_vector(std::size_t i) const {
    Vector v(field_, dim());
    v[i] = field_->one();
    return v;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
    if (!x.field()->same(*field_) || !y.field()->same(*field_))
        throw DescriptorMismatch("vectors do not live over the algebra's field");
    Vector r(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            const Vector& p = basis_product(i, j);
            for (std::size_t t = 0; t < dim(); ++t) {
                if (p[t].is_zero()) continue;
                r[t] = r[t] + c * p[t];
            }
        }
    }
    return r;
}

Matrix Algebra::adjoint(const Vector& a) const {
    Matrix m(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        Vector col = multiply(a, basis_vector(j));
        for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

bool operator==(const Algebra& a, const Algebra& b) {
    if (!a.field_->same(*b.field_) || a.names_ != b.names_) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) {
            if (a.has_product(i, j) != b.has_product(i, j)) return false;
            if (a.has_product(i, j) && !(a.basis_product(i, j) == b.basis_product(i, j)))
                return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// decomposition

std::size_t Decomposition::total_dim() const {
    std::size_t t = 0;
    for (const auto& p : parts) t += p.size();
    return t;
}

namespace {

struct EigenSplit {
    std::vector<std::vector<Vector>> parts;
    std::size_t total = 0;
    bool complete = false;
};

Matrix shifted(const Matrix& ad, const Scalar& lambda) {
    return ad - Matrix::identity(ad.field(), ad.rows()).scaled(lambda);
}

EigenSplit eigen_split(const Matrix& ad, const FusionLaw& law) {
    EigenSplit s;
    s.parts.reserve(law.size());
    for (std::size_t i = 0; i < law.size(); ++i) {
        s.parts.push_back(nullspace(shifted(ad, law.eigenvalue(i))));
        s.total += s.parts.back().size();
    }
    s.complete = s.total == ad.rows();
    return s;
}

// Distinguishes a defective spectrum-inside map from one with an eigenvalue
// outside the law: sum of generalized kernels fills the space in the first
// case only.
[[noreturn]] void raise_incomplete(const Matrix& ad, const FusionLaw& law, std::size_t total) {
    std::size_t gen_total = 0;
    for (std::size_t i = 0; i < law.size(); ++i) {
        Matrix m = shifted(ad, law.eigenvalue(i));
        Matrix p = m;
        for (std::size_t k = 1; k < ad.rows(); ++k) p = p * m;
        gen_total += nullspace(p).size();
    }
    if (gen_total == ad.rows())
        throw NotSemisimple("adjoint is defective: eigenspaces span dimension " +
                            std::to_string(total) + " of " + std::to_string(ad.rows()));
    throw SpectrumOutsideFusionSet("adjoint has an eigenvalue outside the fusion set (eigenspace"
                                   " dimensions sum to " +
                                   std::to_string(total) + " of " + std::to_string(ad.rows()) + ")");
}

}  // namespace

Decomposition decompose(const Algebra& a, const Vector& axis, const FusionLaw& law) {
    if (!law.field()->same(*a.field()))
        throw DescriptorMismatch("fusion law and algebra live over different fields");
    if (!(a.multiply(axis, axis) == axis)) throw NotIdempotent();
    Matrix ad = a.adjoint(axis);
    EigenSplit s = eigen_split(ad, law);
    if (!s.complete) raise_incomplete(ad, law, s.total);
    return Decomposition{axis, law, std::move(s.parts)};
}

AxisReport axis_report(const Algebra& a, const Vector& axis, const FusionLaw& law) {
    if (!law.field()->same(*a.field()))
        throw DescriptorMismatch("fusion law and algebra live over different fields");
    AxisReport rep;
    rep.idempotent = a.multiply(axis, axis) == axis;

    Matrix ad = a.adjoint(axis);
    EigenSplit s = eigen_split(ad, law);
    // two routes decide A2 and must agree: the eigenspace dimensions fill the
    // algebra iff the product of shifted adjoints annihilates it
    Matrix prod = Matrix::identity(a.field(), a.dim());
    for (std::size_t i = 0; i < law.size(); ++i) prod = prod * shifted(ad, law.eigenvalue(i));
    rep.semisimple = s.complete && prod.is_zero();
    if (s.complete != prod.is_zero())
        throw Error("internal: eigenspace count and the annihilation test disagree");
    if (!rep.semisimple) {
        rep.semisimple_detail = "eigenspace dimensions sum to " + std::to_string(s.total) +
                                " of " + std::to_string(a.dim()) +
                                " and the shifted-adjoint product is nonzero";
        rep.fusion_ok = false;
        rep.primitive = false;
        return rep;
    }

    // A3: products of eigenbasis vectors stay inside the allowed spans
    rep.fusion_ok = true;
    for (std::size_t i = 0; i < law.size(); ++i) {
        for (std::size_t j = i; j < law.size(); ++j) {
            std::vector<Vector> allowed;
            for (std::size_t t : law.fuse(i, j))
                for (const auto& v : s.parts[t]) allowed.push_back(v);
            for (std::size_t vi = 0; vi < s.parts[i].size(); ++vi) {
                std::size_t vj0 = (i == j) ? vi : 0;
                for (std::size_t vj = vj0; vj < s.parts[j].size(); ++vj) {
                    Vector p = a.multiply(s.parts[i][vi], s.parts[j][vj]);
                    if (!span_membership(allowed, p).in_span()) {
                        rep.fusion_ok = false;
                        rep.violations.push_back({i, j, vi, vj, std::move(p)});
                    }
                }
            }
        }
    }

    // A4: the 1-part is spanned by the axis alone
    rep.primitive = s.parts[0].size() == 1 && !axis.is_zero() &&
                    span_membership(s.parts[0], axis).in_span();

    rep.decomposition = Decomposition{axis, law, std::move(s.parts)};
    return rep;
}

MiyamotoResult miyamoto(const Algebra& a, const Decomposition& dec) {
    std::vector<Vector> basis;
    std::vector<int> sign;
    for (std::size_t i = 0; i < dec.parts.size(); ++i)
        for (const auto& v : dec.parts[i]) {
            basis.push_back(v);
            sign.push_back(i == dec.law.negated_index() ? -1 : 1);
        }
    if (basis.size() != a.dim())
        throw DecompositionUnavailable("decomposition does not span the algebra");
    Matrix b = Matrix::from_columns(a.field(), basis);
    auto binv = inverse(b);
    if (!binv) throw DecompositionUnavailable("eigenbasis is singular");
    Matrix d(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        d.at(i, i) = a.field()->from_int(sign[i]);
    MiyamotoResult res{b * d * *binv, false};

    const Matrix& t = res.tau;
    bool ok = t * t == Matrix::identity(a.field(), a.dim());
    if (ok) {
        std::vector<Vector> timg;
        for (std::size_t i = 0; i < a.dim(); ++i) timg.push_back(t.apply(a.basis_vector(i)));
        for (std::size_t i = 0; ok && i < a.dim(); ++i)
            for (std::size_t j = i; ok && j < a.dim(); ++j)
                ok = a.multiply(timg[i], timg[j]) == t.apply(a.basis_product(i, j));
    }
    res.is_automorphism = ok;
    return res;
}

Scalar projection(const Algebra& a, const Decomposition& dec, const Vector& x) {
    if (dec.parts[0].size() != 1)
        throw DecompositionUnavailable("projection needs a primitive decomposition");
    std::vector<Vector> basis{dec.axis};
    for (std::size_t i = 1; i < dec.parts.size(); ++i)
        for (const auto& v : dec.parts[i]) basis.push_back(v);
    Matrix b = Matrix::from_columns(a.field(), basis);
    auto sol = solve(b, x);
    if (!sol) throw DecompositionUnavailable("element is outside the eigenbasis span");
    return (*sol)[0];
}

namespace {

// Maintains a reduced echelon basis; returns true when v enlarges the span.
bool echelon_insert(std::vector<Vector>& rows, std::vector<std::size_t>& pivots, Vector v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Scalar& c = v[pivots[r]];
        if (!c.is_zero()) v = v - rows[r].scaled(c);
    }
    std::size_t piv = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            piv = i;
            break;
        }
    if (piv == v.size()) return false;
    v = v.scaled(v[piv].inverse());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Scalar& c = rows[r][piv];
        if (!c.is_zero()) rows[r] = rows[r] - v.scaled(c);
    }
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    rows.insert(rows.begin() + static_cast<long>(pos), std::move(v));
    pivots.insert(pivots.begin() + static_cast<long>(pos), piv);
    return true;
}

}  // namespace

std::vector<Vector> subalgebra_closure(const Algebra& a, std::span<const Vector> generators) {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    for (const auto& g : generators) echelon_insert(rows, pivots, g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vector> snapshot = rows;
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i; j < snapshot.size(); ++j)
                if (echelon_insert(rows, pivots, a.multiply(snapshot[i], snapshot[j])))
                    grew = true;
    }
    return rows;
}

std::optional<Vector> identity_of(const Algebra& a, std::span<const Vector> basis) {
    if (basis.empty()) throw InvalidParameter("identity_of needs a nonempty basis");
    std::size_t k = basis.size();
    std::size_t n = a.dim();
    std::vector<std::vector<Vector>> prod(k, std::vector<Vector>());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Vector p = a.multiply(basis[i], basis[j]);
            if (!span_membership(basis, p).in_span())
                throw SubspaceNotClosed("basis products leave the span at pair (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
            prod[i].push_back(std::move(p));
        }
    // stack the systems (sum_j c_j b_j) b_i = b_i over all i
    Matrix m(a.field(), n * k, k);
    Vector rhs(a.field(), n * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            for (std::size_t j = 0; j < k; ++j) m.at(i * n + t, j) = prod[j][i][t];
            rhs[i * n + t] = basis[i][t];
        }
    auto c = solve(m, rhs);
    if (!c) return std::nullopt;
    Vector e(a.field(), n);
    for (std::size_t j = 0; j < k; ++j) e = e + basis[j].scaled((*c)[j]);
    return e;
}

// ---------------------------------------------------------------------------
// axis families

const Vector& AxisFamily::axis(int i) const {
    auto it = axes_.find(i);
    if (it == axes_.end())
        throw InvalidParameter("axis index " + std::to_string(i) + " is outside the window");
    return it->second;
}

const Matrix& AxisFamily::tau(int i) {
    auto it = taus_.find(i);
    if (it != taus_.end()) return it->second;
    Decomposition dec = decompose(*algebra_, axis(i), law_);
    MiyamotoResult mi = miyamoto(*algebra_, dec);
    if (!mi.is_automorphism)
        throw AxisCheckFailed("Miyamoto map of family axis " + std::to_string(i) +
                              " is not an automorphism");
    return taus_.emplace(i, std::move(mi.tau)).first->second;
}

unsigned AxisFamily::point_of(int i) const {
    const Vector& v = axis(i);
    for (unsigned p = 0; p < distinct_axes_.size(); ++p)
        if (distinct_axes_[p] == v) return p;
    throw InvalidParameter("axis is not part of the induced axet");
}

const Scalar& AxisFamily::lambda(int i) {
    auto it = lambdas_.find(i);
    if (it != lambdas_.end()) return it->second;
    Scalar l = projection(*algebra_, dec0_, axis(i));
    return lambdas_.emplace(i, std::move(l)).first->second;
}

const Vector& AxisFamily::s_vector(int i, int r) {
    auto key = std::make_pair(i, r);
    auto it = s_.find(key);
    if (it != s_.end()) return it->second;
    const Vector& ai = axis(i);
    const Vector& air = axis(i + r);
    Vector s = algebra_->multiply(ai, air) - (ai + air).scaled(law_.beta());
    return s_.emplace(key, std::move(s)).first->second;
}

AxisFamily axis_family(AlgebraPtr a, const Vector& a0, const Vector& a1, const FusionLaw& law,
                       int window) {
    if (window < 4) throw InvalidParameter("family window must be at least 4");
    AxisReport rep0 = axis_report(*a, a0, law);
    if (!rep0.pass()) throw AxisCheckFailed("first generator fails the axis axioms");
    AxisReport rep1 = axis_report(*a, a1, law);
    if (!rep1.pass()) throw AxisCheckFailed("second generator fails the axis axioms");

    AxisFamily fam;
    fam.algebra_ = std::move(a);
    fam.law_ = law;
    fam.window_ = window;
    fam.dec0_ = *rep0.decomposition;

    MiyamotoResult m0 = miyamoto(*fam.algebra_, *rep0.decomposition);
    MiyamotoResult m1 = miyamoto(*fam.algebra_, *rep1.decomposition);
    if (!m0.is_automorphism || !m1.is_automorphism)
        throw AxisCheckFailed("a generator's Miyamoto map is not an automorphism");

    // a^{tau_0 tau_1} applies tau_0 first
    fam.rho_ = m1.tau * m0.tau;
    Matrix rho_inv = m0.tau * m1.tau;

    fam.axes_.emplace(0, a0);
    fam.axes_.emplace(1, a1);
    for (int j = 2; j <= window; ++j) fam.axes_.emplace(j, fam.rho_.apply(fam.axes_.at(j - 2)));
    for (int j = -1; j >= -window; --j)
        fam.axes_.emplace(j, rho_inv.apply(fam.axes_.at(j + 2)));

    // minimal period, confirmed across the whole window
    int period = 0;
    for (int p = 1; p <= window; ++p) {
        bool ok = true;
        for (int j = -window; j + p <= window && ok; ++j)
            ok = fam.axes_.at(j) == fam.axes_.at(j + p);
        if (ok) {
            period = p;
            break;
        }
    }
    if (period == 0 || 2 * period > window)
        throw InvalidParameter("family window too small to confirm the period");

    for (int j = 0; j < period; ++j) {
        const Vector& v = fam.axes_.at(j);
        if (std::find(fam.distinct_axes_.begin(), fam.distinct_axes_.end(), v) ==
            fam.distinct_axes_.end())
            fam.distinct_axes_.push_back(v);
    }

    std::size_t npts = fam.distinct_axes_.size();
    std::vector<std::vector<unsigned>> table(npts, std::vector<unsigned>(npts));
    std::vector<long> labels(npts);
    for (std::size_t p = 0; p < npts; ++p) {
        int idx = 0;
        for (int j = 0; j < period; ++j)
            if (fam.axes_.at(j) == fam.distinct_axes_[p]) {
                idx = j;
                break;
            }
        labels[p] = idx;
        const Matrix& tp = fam.tau(idx);
        for (std::size_t q = 0; q < npts; ++q) {
            Vector img = tp.apply(fam.distinct_axes_[q]);
            auto it = std::find(fam.distinct_axes_.begin(), fam.distinct_axes_.end(), img);
            if (it == fam.distinct_axes_.end())
                throw AxisCheckFailed("family is not closed under its Miyamoto maps");
            table[p][q] = static_cast<unsigned>(it - fam.distinct_axes_.begin());
        }
    }
    fam.induced_ = axet::C2Axet::from_tau(std::move(table), std::move(labels));
    fam.kind_ = axet::classify_2gen(fam.induced_);
    return fam;
}

AxisSplitData eigenvector_split(AxisFamily& fam, int i) {
    const FusionLaw& law = fam.law();
    if (law.size() != 4)
        throw InvalidParameter("eigenvector split needs the four-eigenvalue law");
    const Scalar& alpha = law.alpha();
    const Scalar& beta = law.beta();
    if (alpha.is_zero()) throw InvalidParameter("alpha is not invertible");
    const FieldPtr& f = alpha.field();
    Scalar half = f->from_rat(Rat(1, 2));

    AxisSplitData d;
    d.index = i;
    d.lambda = fam.lambda(i);
    d.gamma = beta - d.lambda;
    d.eps = (f->one() - alpha) * d.lambda - beta;

    const Vector& a0 = fam.axis(0);
    const Vector& ai = fam.axis(i);
    const Vector& ami = fam.axis(-i);
    const Vector& s0i = fam.s_vector(0, i);
    Vector sum = ai + ami;
    Scalar inv_alpha = alpha.inverse();

    d.u = (a0.scaled(d.eps) + sum.scaled((alpha - beta) * half) - s0i).scaled(inv_alpha);
    d.v = (a0.scaled(d.gamma) + sum.scaled(beta * half) + s0i).scaled(inv_alpha);
    d.w = (ai - ami).scaled(half);

    const Decomposition& dec = fam.dec0();
    d.u_in_zero_part = span_membership(dec.part(1), d.u).in_span();
    d.v_in_alpha_part = span_membership(dec.part(2), d.v).in_span();
    d.w_in_beta_part = span_membership(dec.part(3), d.w).in_span();
    d.reconstructs = a0.scaled(d.lambda) + d.u + d.v + d.w == ai;
    return d;
}

}  // namespace axtk

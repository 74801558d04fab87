#ifndef AXTK_ALGEBRA_HPP
#define AXTK_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axtk/axet.hpp"
#include "axtk/linalg.hpp"

namespace axtk {

/// A fusion law on a fixed eigenvalue list. Two laws are built in:
///
///   monster(alpha, beta): eigenvalues (1, 0, alpha, beta) with
///       1*1={1}  1*0={}   1*a={a}  1*b={b}
///       0*0={0}  0*a={a}  0*b={b}
///       a*a={1,0}  a*b={b}  b*b={1,0,a}
///
///   jordan(eta): eigenvalues (1, 0, eta) with
///       1*1={1}  1*0={}  1*e={e}  0*0={0}  0*e={e}  e*e={1,0}
///
/// Both are C2-graded with the last eigenvalue spanning the odd part; the
/// Miyamoto involution negates that part. Construction asserts the
/// eigenvalues are pairwise distinct in the working field, which rejects the
/// degenerate specializations up front.
class FusionLaw {
public:
    static FusionLaw monster(const Scalar& alpha, const Scalar& beta);
    static FusionLaw jordan(const Scalar& eta);

    const std::string& name() const { return name_; }
    const FieldPtr& field() const { return field_; }
    std::size_t size() const { return evs_.size(); }
    const Scalar& eigenvalue(std::size_t i) const { return evs_[i]; }
    const std::vector<Scalar>& eigenvalues() const { return evs_; }
    /// Sorted indices of eigenvalues that products of the i- and j-parts may
    /// touch.
    const std::vector<std::size_t>& fuse(std::size_t i, std::size_t j) const;
    /// Index of the negated (odd) eigenvalue.
    std::size_t negated_index() const { return evs_.size() - 1; }

    const Scalar& alpha() const;  // third eigenvalue (monster) / eta (jordan)
    const Scalar& beta() const;   // last eigenvalue

    /// Empty placeholder; only the factory-made laws are usable.
    FusionLaw() = default;

private:
    std::string name_;
    FieldPtr field_;
    std::vector<Scalar> evs_;
    std::vector<std::vector<std::vector<std::size_t>>> table_;
};

/// Finite-dimensional commutative algebra given by structure constants: the
/// product of basis elements i and j is a vector of coordinates. Only the
/// upper triangle is stored; the table is symmetric by construction.
class Algebra {
public:
    Algebra(FieldPtr field, std::vector<std::string> basis_names);

    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }

    void set_product(std::size_t i, std::size_t j, Vector value);
    bool has_product(std::size_t i, std::size_t j) const;
    const Vector& basis_product(std::size_t i, std::size_t j) const;

    Vector basis_vector(std::size_t i) const;
    Vector zero_vector() const { return Vector(field_, dim()); }

    /// Bilinear extension of the structure-constant table.
    Vector multiply(const Vector& x, const Vector& y) const;

    /// Matrix of ad_a : x -> a x in the given basis.
    Matrix adjoint(const Vector& a) const;

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    std::size_t tri_index(std::size_t i, std::size_t j) const;
    FieldPtr field_;
    std::vector<std::string> names_;
    std::vector<std::optional<Vector>> products_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Eigenspace data of an adjoint map against a fusion law's eigenvalue list.
struct Decomposition {
    Vector axis;
    FusionLaw law;
    std::vector<std::vector<Vector>> parts;  // parallel to law.eigenvalues()
    std::size_t total_dim() const;
    const std::vector<Vector>& part(std::size_t i) const { return parts[i]; }
};

/// Eigenbases of ad_a for every eigenvalue of the law. The element must be
/// idempotent (NotIdempotent), the dimensions must fill the algebra, and the
/// spectrum must stay inside the law (NotSemisimple /
/// SpectrumOutsideFusionSet, decided by the annihilation test on the product
/// of shifted adjoints).
Decomposition decompose(const Algebra& a, const Vector& axis, const FusionLaw& law);

/// One fusion failure: eigenpart indices, the offending basis vectors, and
/// the product that escaped the allowed span.
struct FusionViolation {
    std::size_t part_i, part_j;
    std::size_t vec_i, vec_j;
    Vector product;
};

/// The four axis axioms as verdicts. `pass()` requires all of:
/// idempotent, semisimple with spectrum in the law, fusion-compliant, and
/// primitive (1-eigenspace spanned by the axis itself).
struct AxisReport {
    bool idempotent = false;
    bool semisimple = false;
    std::string semisimple_detail;
    bool fusion_ok = false;
    std::vector<FusionViolation> violations;
    bool primitive = false;
    std::optional<Decomposition> decomposition;
    bool pass() const { return idempotent && semisimple && fusion_ok && primitive; }
};
AxisReport axis_report(const Algebra& a, const Vector& axis, const FusionLaw& law);

/// The involution fixing the even eigenparts and negating the odd one,
/// together with the verdict that it squares to the identity and respects
/// every basis product.
struct MiyamotoResult {
    Matrix tau;
    bool is_automorphism = false;
};
MiyamotoResult miyamoto(const Algebra& a, const Decomposition& dec);

/// Coefficient of the axis in x's eigen-decomposition. Requires a primitive
/// decomposition (1-part of dimension one); DecompositionUnavailable
/// otherwise.
Scalar projection(const Algebra& a, const Decomposition& dec, const Vector& x);

/// Basis (echelon-canonical) of the smallest product-closed subspace
/// containing the generators.
std::vector<Vector> subalgebra_closure(const Algebra& a, std::span<const Vector> generators);

/// The identity element of a product-closed subspace, or nullopt when the
/// linear system is inconsistent. SubspaceNotClosed if the basis products
/// leave the span.
std::optional<Vector> identity_of(const Algebra& a, std::span<const Vector> basis);

/// Dihedral family generated by two axes: a_{2i} and a_{2i+1} are the images
/// of a_0 and a_1 under powers of rho = tau_0 tau_1. Detects the period /
/// skew identification and exposes the induced abstract axet.
class AxisFamily {
public:
    const AlgebraPtr& algebra() const { return algebra_; }
    const FusionLaw& law() const { return law_; }
    int window() const { return window_; }

    const Vector& axis(int i) const;
    const Matrix& rho() const { return rho_; }
    const Matrix& tau(int i);  // Miyamoto matrix of axis i (cached)

    /// Number of distinct axes and the induced abstract axet over them.
    const axet::C2Axet& induced_axet() const { return induced_; }
    axet::Kind kind() const { return kind_; }
    /// Index of the family member equal to axis i inside the induced axet.
    unsigned point_of(int i) const;

    /// lambda_i = projection of a_i on a_0 (cached).
    const Scalar& lambda(int i);

    /// s_{i,r} = a_i a_{i+r} - beta (a_i + a_{i+r}) (cached).
    const Vector& s_vector(int i, int r);

    const Decomposition& dec0() const { return dec0_; }

private:
    friend AxisFamily axis_family(AlgebraPtr a, const Vector& a0, const Vector& a1,
                                  const FusionLaw& law, int window);
    AlgebraPtr algebra_;
    FusionLaw law_;
    int window_ = 0;
    Matrix rho_;
    std::map<int, Vector> axes_;
    std::map<int, Matrix> taus_;
    std::map<int, Scalar> lambdas_;
    std::map<std::pair<int, int>, Vector> s_;
    axet::C2Axet induced_;
    axet::Kind kind_ = axet::Kind::abstract();
    std::vector<Vector> distinct_axes_;  // induced-axet point order
    Decomposition dec0_;
};

/// Builds the family. Both generators must pass the full axis report
/// (AxisCheckFailed otherwise); the window must be wide enough to confirm
/// the period twice (InvalidParameter otherwise).
AxisFamily axis_family(AlgebraPtr a, const Vector& a0, const Vector& a1, const FusionLaw& law,
                       int window = 24);

/// a_i written over the eigenparts of a_0:
///   a_i = lambda_i a_0 + u_i + v_i + w_i
/// with u_i = (eps_i a_0 + (alpha-beta)/2 (a_i + a_{-i}) - s_{0,i}) / alpha,
///      v_i = (gamma_i a_0 + beta/2 (a_i + a_{-i}) + s_{0,i}) / alpha,
///      w_i = (a_i - a_{-i}) / 2,
/// gamma_i = beta - lambda_i, eps_i = (1-alpha) lambda_i - beta. The
/// membership flags record that u, v, w land in the 0-, alpha- and beta-part
/// respectively; `reconstructs` that the sum recovers a_i.
struct AxisSplitData {
    int index = 0;
    Scalar lambda, gamma, eps;
    Vector u, v, w;
    bool u_in_zero_part = false;
    bool v_in_alpha_part = false;
    bool w_in_beta_part = false;
    bool reconstructs = false;
    bool ok() const { return u_in_zero_part && v_in_alpha_part && w_in_beta_part && reconstructs; }
};
AxisSplitData eigenvector_split(AxisFamily& fam, int i);

}  // namespace axtk

#endif

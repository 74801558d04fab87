#ifndef AXTK_CATALOG_HPP
#define AXTK_CATALOG_HPP

#include <map>
#include <string>

#include "axtk/algebra.hpp"

namespace axtk::catalog {

/// A built-in algebra together with its designated axes, fusion law and the
/// axet its first two axes induce.
struct CatalogEntry {
    std::string name;
    AlgebraPtr algebra;
    std::vector<std::size_t> axes;
    FusionLaw law;
    axet::Kind expected_axet;
    std::map<std::string, std::string> params;  // printable parameter values
};

/// Two orthogonal idempotents: dim 2, a^2 = a, b^2 = b, ab = 0. Works with
/// any monster law over the same field; both axes have empty alpha and beta
/// parts.
CatalogEntry build_2B(const FieldPtr& field, const Scalar& alpha, const Scalar& beta);
/// 2B over Q(alpha, beta) with the generic law.
CatalogEntry build_2B();

/// The 3-dimensional dihedral algebra of Jordan type eta: basis a, b, c with
/// ab = eta/2 (a + b - c) and its cyclic images. eta outside {0, 1}; the
/// identity element (a+b+c)/(eta+1) exists whenever eta != -1.
CatalogEntry build_3C(const Scalar& eta);
/// 3C over Q(eta).
CatalogEntry build_3C();

/// The 8-dimensional dihedral algebra with basis b_-2, ..., b_3, c, z over
/// the law (alpha, beta) with beta = -alpha^2 / (4(2 alpha - 1)); the table
/// uses gamma = alpha / (8(2 alpha - 1)) and b-indices mod 6. alpha must
/// avoid {0, 1, 1/2, 4/9} and the induced beta must avoid {0, 1} in the
/// working field. Designated axes are the six b_i.
CatalogEntry build_6A(const Scalar& alpha);
/// 6A over Q(alpha).
CatalogEntry build_6A();

/// Names accepted by `entry_names` / the CLI: "2B", "3C", "6A".
std::vector<std::string> entry_names();

/// Builds an entry by name; `alpha` (when given) is the parameter value (eta
/// for 3C). Entries default to their generic function fields.
CatalogEntry build(const std::string& name, const std::optional<Scalar>& alpha);

}  // namespace axtk::catalog

#endif

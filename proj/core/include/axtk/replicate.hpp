#ifndef AXTK_REPLICATE_HPP
#define AXTK_REPLICATE_HPP

#include <optional>

#include "axtk/io.hpp"
#include "axtk/report.hpp"

namespace axtk::replicate {

struct VerifyOptions {
    bool allow_non_primitive = false;  // downgrade an A4 failure to a warning
};

/// Full axis verification of every listed axis of an algebra document, with a
/// fusion-table echo.
Report verify_document(const std::string& path, const VerifyOptions& opts = {});
Report verify_bundle(const io::AlgebraBundle& bundle, const VerifyOptions& opts = {});

struct ReplicateOptions {
    /// 0 = generic (function field over Q); otherwise rerun at this odd prime
    /// characteristic. Poles of the table coefficients surface as errors.
    unsigned long characteristic = 0;
};

/// Quotient-parameter arithmetic for the three exceptional 6A parameter sets:
/// case 1 forces characteristic 2, case 2 has evidence 768 = 2^8 * 3, case 3
/// stays nonzero in F_11.
Report lemma_6Aquot();

/// The eigenvector coefficient extraction inside 6A: builds U_3, its
/// identity, the candidate axis 1 - c, and measures the residual of the
/// beta-eigenvector equation. Anchors: the b2-coefficient numerator has root
/// set {0, 1/3}; at alpha = 1/3 the b-2 coefficient is exactly 1/18 in
/// magnitude.
Report lemma_6A(const ReplicateOptions& opts = {});

/// Census and subaxet structure of the skew axets X'(k+2k) for k <= kmax:
/// sizes, parities, odd-pair closures, and the 2-power reduction.
Report axets(unsigned long kmax);

/// Congruence witnesses and the label-level contradiction trace for
/// q = 2, 4, ..., qmax.
Report even_case(unsigned long qmax);

/// s-vector invariance and periodicity, the eigenvector split, and the
/// projection identity lambda_0(s_{0,r}) = (1-beta) lambda_r - beta in the
/// 6A axis family.
Report family_lemmas(const ReplicateOptions& opts = {});

}  // namespace axtk::replicate

#endif

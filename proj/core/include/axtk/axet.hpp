#ifndef AXTK_AXET_HPP
#define AXTK_AXET_HPP

#include <optional>
#include <string>
#include <vector>

#include "axtk/errors.hpp"

namespace axtk::axet {

/// Shape of a 2-generated C2-axet.
struct Kind {
    enum class Tag { Regular, Skew, Abstract };
    Tag tag = Tag::Abstract;
    unsigned long param = 0;  // n for Regular, k for Skew

    static Kind regular(unsigned long n) { return {Tag::Regular, n}; }
    static Kind skew(unsigned long k) { return {Tag::Skew, k}; }
    static Kind abstract() { return {Tag::Abstract, 0}; }
    friend bool operator==(const Kind& a, const Kind& b) {
        return a.tag == b.tag && (a.tag == Tag::Abstract || a.param == b.param);
    }
    std::string str() const;
    static std::optional<Kind> parse(const std::string& s);
};

/// A finite C2-axet: a point set with one involution (or the identity) per
/// point, satisfying
///   1. tau_x(x) = x,
///   2. tau_x^2 = id,
///   3. tau_{tau_x(y)} = tau_x tau_y tau_x.
///
/// The regular axet X(n) is the n-gon with reflections, tau_i(j) = 2i - j
/// (mod n). The skew axet X'(k+2k) is the quotient of X(4k) by the extra
/// identification a_{2i} = a_{2(i+k)}; it has k even and 2k odd points, with
/// even labels canonical mod 2k and odd labels canonical mod 4k.
class C2Axet {
public:
    static C2Axet regular(unsigned long n);
    static C2Axet skew(unsigned long k);
    /// Abstract axet from an explicit tau table; validates the axioms.
    static C2Axet from_tau(std::vector<std::vector<unsigned>> tau,
                           std::vector<long> labels = {});

    unsigned long size() const { return static_cast<unsigned long>(tau_.size()); }
    Kind kind() const { return kind_; }

    /// Image of point j under the involution of point i.
    unsigned tau(unsigned i, unsigned j) const { return tau_[i][j]; }

    bool has_labels() const { return !labels_.empty(); }
    long label(unsigned point) const { return labels_[point]; }
    /// Point carrying a canonical label; for regular/skew axets accepts any
    /// integer label and canonicalizes it first.
    unsigned point_of_label(long j) const;
    /// Canonical form of an integer label in this axet's labeling scheme.
    long canonical_label(long j) const;

    bool check_axioms(std::string* why = nullptr) const;

private:
    std::vector<std::vector<unsigned>> tau_;
    std::vector<long> labels_;
    Kind kind_ = Kind::abstract();
};

/// Smallest closed subset containing `seed`, as an induced axet. The result
/// keeps the parent's labels (or parent point indices when unlabeled), and
/// `points` lists the parent points in the induced order.
struct Subaxet {
    C2Axet axet;
    std::vector<unsigned> points;
};
Subaxet closure(const C2Axet& x, const std::vector<unsigned>& seed);

/// Decides regular-vs-skew for a 2-generated C2-axet by walking the dihedral
/// recurrence c_{j+1} = tau_{c_j}(c_{j-1}) from a generating pair and reading
/// off the period and doubling pattern. Throws NotTwoGenerated when no pair
/// generates the whole point set.
Kind classify_2gen(const C2Axet& x);

/// The l with l*t = 2q - t (mod 4q); exists for every power of two q and odd
/// t because t generates Z/4q. NoWitness is raised if the scan fails, which
/// would falsify that fact.
unsigned long congruence_witness(unsigned long q, unsigned long t);

/// One step of the label-level derivation replayed by even_case_trace.
struct TraceStep {
    std::string statement;
    std::string justification;
};

/// Replays, for the skew axet X'(q+2q) with q a power of two, the chain of
/// label identities that ends in a_{-1} = a_{2q-1}, and flags the
/// contradiction: both sides are odd labels that stay distinct after
/// canonicalization mod 4q.
struct EvenCaseTrace {
    unsigned long q = 0;
    std::vector<TraceStep> steps;
    long lhs_label = 0;  // canonical label of a_{-1}
    long rhs_label = 0;  // canonical label of a_{2q-1}
    bool contradiction = false;
};
EvenCaseTrace even_case_trace(unsigned long q);

}  // namespace axtk::axet

#endif

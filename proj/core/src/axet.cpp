#include "axtk/axet.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace axtk::axet {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

bool is_power_of_two(unsigned long q) { return q != 0 && (q & (q - 1)) == 0; }

}  // namespace

std::string Kind::str() const {
    switch (tag) {
        case Tag::Regular: return "regular(" + std::to_string(param) + ")";
        case Tag::Skew: return "skew(" + std::to_string(param) + ")";
        case Tag::Abstract: return "abstract";
    }
    return "?";
}

std::optional<Kind> Kind::parse(const std::string& s) {
    if (s == "abstract") return Kind::abstract();
    for (const char* name : {"regular", "skew"}) {
        std::string prefix = std::string(name) + "(";
        if (s.rfind(prefix, 0) == 0 && s.back() == ')') {
            std::string body = s.substr(prefix.size(), s.size() - prefix.size() - 1);
            if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
                return std::nullopt;
            unsigned long v = std::stoul(body);
            return name[0] == 'r' ? Kind::regular(v) : Kind::skew(v);
        }
    }
    return std::nullopt;
}

C2Axet C2Axet::regular(unsigned long n) {
    if (n < 2) throw InvalidParameter("regular axet needs n >= 2");
    C2Axet x;
    x.kind_ = Kind::regular(n);
    x.tau_.assign(n, std::vector<unsigned>(n));
    x.labels_.resize(n);
    long ln = static_cast<long>(n);
    for (long i = 0; i < ln; ++i) {
        x.labels_[i] = i;
        for (long j = 0; j < ln; ++j) x.tau_[i][j] = static_cast<unsigned>(mod(2 * i - j, ln));
    }
    return x;
}

C2Axet C2Axet::skew(unsigned long k) {
    if (k < 1) throw InvalidParameter("skew axet needs k >= 1");
    C2Axet x;
    x.kind_ = Kind::skew(k);
    unsigned long n = 3 * k;
    x.tau_.assign(n, std::vector<unsigned>(n));
    x.labels_.resize(n);
    // points: k even labels 0,2,...,2(k-1), then 2k odd labels 1,3,...,4k-1
    for (unsigned long i = 0; i < k; ++i) x.labels_[i] = static_cast<long>(2 * i);
    for (unsigned long t = 0; t < 2 * k; ++t) x.labels_[k + t] = static_cast<long>(2 * t + 1);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = 0; j < n; ++j)
            x.tau_[i][j] = x.point_of_label(2 * x.labels_[i] - x.labels_[j]);
    return x;
}

long C2Axet::canonical_label(long j) const {
    switch (kind_.tag) {
        case Kind::Tag::Regular:
            return mod(j, static_cast<long>(kind_.param));
        case Kind::Tag::Skew: {
            long k = static_cast<long>(kind_.param);
            return mod(j, 2) == 0 ? mod(j, 2 * k) : mod(j, 4 * k);
        }
        case Kind::Tag::Abstract:
            return j;
    }
    return j;
}

unsigned C2Axet::point_of_label(long j) const {
    long c = canonical_label(j);
    switch (kind_.tag) {
        case Kind::Tag::Regular:
            return static_cast<unsigned>(c);
        case Kind::Tag::Skew:
            if (mod(c, 2) == 0) return static_cast<unsigned>(c / 2);
            return static_cast<unsigned>(kind_.param + (c - 1) / 2);
        case Kind::Tag::Abstract: {
            for (unsigned p = 0; p < size(); ++p)
                if (labels_[p] == c) return p;
            throw InvalidParameter("no point with label " + std::to_string(j));
        }
    }
    throw InvalidParameter("no point with label " + std::to_string(j));
}

C2Axet C2Axet::from_tau(std::vector<std::vector<unsigned>> tau, std::vector<long> labels) {
    C2Axet x;
    x.kind_ = Kind::abstract();
    x.tau_ = std::move(tau);
    if (labels.empty()) {
        x.labels_.resize(x.size());
        for (unsigned p = 0; p < x.size(); ++p) x.labels_[p] = p;
    } else {
        if (labels.size() != x.tau_.size())
            throw InvalidParameter("label list size does not match the point count");
        x.labels_ = std::move(labels);
    }
    std::string why;
    if (!x.check_axioms(&why)) throw InvalidParameter("not a C2-axet: " + why);
    return x;
}

bool C2Axet::check_axioms(std::string* why) const {
    unsigned long n = size();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (unsigned long i = 0; i < n; ++i) {
        if (tau_[i].size() != n) return fail("tau table is not square");
        for (unsigned long j = 0; j < n; ++j)
            if (tau_[i][j] >= n) return fail("tau image out of range");
        if (tau_[i][i] != i) return fail("tau_" + std::to_string(i) + " moves its own point");
        for (unsigned long j = 0; j < n; ++j)
            if (tau_[i][tau_[i][j]] != j)
                return fail("tau_" + std::to_string(i) + " is not an involution");
    }
    // equivariance: tau_{tau_x(y)} = tau_x tau_y tau_x
    for (unsigned long x = 0; x < n; ++x)
        for (unsigned long y = 0; y < n; ++y) {
            unsigned long y2 = tau_[x][y];
            for (unsigned long s = 0; s < n; ++s)
                if (tau_[y2][s] != tau_[x][tau_[y][tau_[x][s]]])
                    return fail("equivariance fails at (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
        }
    return true;
}

Subaxet closure(const C2Axet& x, const std::vector<unsigned>& seed) {
    if (seed.empty()) throw InvalidParameter("closure of an empty set");
    std::set<unsigned> cur(seed.begin(), seed.end());
    for (unsigned p : seed)
        if (p >= x.size()) throw InvalidParameter("seed point out of range");
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<unsigned> snapshot(cur.begin(), cur.end());
        for (unsigned a : snapshot)
            for (unsigned b : snapshot)
                if (cur.insert(x.tau(a, b)).second) grew = true;
    }
    Subaxet out;
    out.points.assign(cur.begin(), cur.end());
    std::vector<unsigned> index_of(x.size(), 0);
    for (unsigned i = 0; i < out.points.size(); ++i) index_of[out.points[i]] = i;
    std::vector<std::vector<unsigned>> tau(out.points.size(),
                                           std::vector<unsigned>(out.points.size()));
    std::vector<long> labels(out.points.size());
    for (unsigned i = 0; i < out.points.size(); ++i) {
        labels[i] = x.has_labels() ? x.label(out.points[i]) : static_cast<long>(out.points[i]);
        for (unsigned j = 0; j < out.points.size(); ++j)
            tau[i][j] = index_of[x.tau(out.points[i], out.points[j])];
    }
    out.axet = C2Axet::from_tau(std::move(tau), std::move(labels));
    return out;
}

namespace {

// Dihedral walk c_0 = a, c_1 = b, c_{j+1} = tau_{c_j}(c_{j-1}); purely
// periodic because the recurrence is reversible.
std::vector<unsigned> walk(const C2Axet& x, unsigned a, unsigned b, unsigned long len) {
    std::vector<unsigned> c{a, b};
    while (c.size() < len) {
        unsigned nxt = x.tau(c[c.size() - 1], c[c.size() - 2]);
        c.push_back(nxt);
    }
    return c;
}

std::optional<Kind> classify_walk(const C2Axet& x, const std::vector<unsigned>& c) {
    unsigned long n = x.size();
    std::set<unsigned> visited(c.begin(), c.end());
    if (visited.size() != n) return std::nullopt;  // pair does not generate
    // minimal period
    unsigned long period = 0;
    for (unsigned long p = 1; p <= c.size() / 2; ++p) {
        bool ok = true;
        for (unsigned long j = 0; j + p < c.size(); ++j)
            if (c[j] != c[j + p]) {
                ok = false;
                break;
            }
        if (ok) {
            period = p;
            break;
        }
    }
    if (period == 0) return std::nullopt;

    if (period == n) {
        // each point exactly once per period
        return Kind::regular(n);
    }
    if (n % 3 == 0 && period == 4 * (n / 3)) {
        unsigned long k = n / 3;
        // doubled points: c_j == c_{j+2k} exactly on one parity class
        unsigned long doubled_even = 0, doubled_odd = 0;
        for (unsigned long j = 0; j < period; ++j) {
            if (c[j] == c[(j + 2 * k) % period]) (j % 2 == 0 ? doubled_even : doubled_odd)++;
        }
        bool even_side = doubled_even == 2 * k && doubled_odd == 0;
        bool odd_side = doubled_odd == 2 * k && doubled_even == 0;
        if (even_side || odd_side) return Kind::skew(k);
    }
    return std::nullopt;
}

}  // namespace

Kind classify_2gen(const C2Axet& x) {
    unsigned long n = x.size();
    if (n == 1) throw NotTwoGenerated("a single point is not 2-generated");
    unsigned long len = 8 * n + 4;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            if (a == b) continue;
            auto kind = classify_walk(x, walk(x, a, b, len));
            if (kind) return *kind;
        }
    throw NotTwoGenerated("no generating pair walks the whole axet");
}

unsigned long congruence_witness(unsigned long q, unsigned long t) {
    if (!is_power_of_two(q)) throw InvalidParameter("q must be a power of two");
    if (t % 2 == 0) throw InvalidParameter("t must be odd");
    unsigned long m = 4 * q;
    unsigned long target = mod(static_cast<long>(2 * q) - static_cast<long>(t % m),
                               static_cast<long>(m));
    for (unsigned long l = 0; l < m; ++l)
        if ((l * (t % m)) % m == target) return l;
    throw NoWitness("no l with l*t = 2q-t (mod 4q) for q=" + std::to_string(q) +
                    ", t=" + std::to_string(t));
}

EvenCaseTrace even_case_trace(unsigned long q) {
    if (!is_power_of_two(q) || q < 2)
        throw InvalidParameter("q must be a power of two with q >= 2");
    EvenCaseTrace tr;
    tr.q = q;
    C2Axet X = C2Axet::skew(q);
    long Q = static_cast<long>(q);

    // raw labels in the derivation; canonicalization is the final step
    auto lbl = [](long j) { return "a(" + std::to_string(j) + ")"; };
    auto pair_sum = [&](long s, long t) { return lbl(s) + " + " + lbl(t); };

    unsigned long w1 = congruence_witness(q, q - 1);
    tr.steps.push_back({pair_sum(Q - 1, -(Q - 1)) + " = " + pair_sum(Q + 1, -(Q + 1)),
                        "pair-sum identity at t = q-1; s(0,t) = s(0,2q-t) via the witness l = " +
                            std::to_string(w1) + " with l*t = 2q-t (mod 4q)"});

    tr.steps.push_back({pair_sum(1, 2 * Q - 1) + " = " + pair_sum(-1, 2 * Q + 1),
                        "apply tau_{q/2}, which sends the label j to q - j"});

    tr.steps.push_back({pair_sum(1, 2 * Q - 1) + " = " + pair_sum(-1, -(2 * Q - 1)),
                        "odd labels are periodic mod 4q, so a(2q+1) = a(-(2q-1))"});

    unsigned long w2 = congruence_witness(q, 1);
    tr.steps.push_back({pair_sum(1, -1) + " = " + pair_sum(2 * Q - 1, -(2 * Q - 1)),
                        "pair-sum identity at t = 1; witness l = " + std::to_string(w2)});

    tr.steps.push_back({"2*" + lbl(-1) + " = 2*" + lbl(2 * Q - 1),
                        "subtract the second identity from the first"});

    tr.steps.push_back({lbl(-1) + " = " + lbl(2 * Q - 1), "divide by 2 (characteristic != 2)"});

    tr.lhs_label = X.canonical_label(-1);
    tr.rhs_label = X.canonical_label(2 * Q - 1);
    tr.contradiction = tr.lhs_label != tr.rhs_label;
    tr.steps.push_back({"canonical odd labels " + std::to_string(tr.lhs_label) + " and " +
                            std::to_string(tr.rhs_label) +
                            (tr.contradiction ? " differ: contradiction"
                                              : " coincide: no contradiction"),
                        "odd labels are canonical mod 4q and never identified"});
    return tr;
}

}  // namespace axtk::axet

#ifndef AXTK_POLYNOMIAL_HPP
#define AXTK_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "axtk/errors.hpp"

namespace axtk {

using Int = mpz_class;
using Rat = mpq_class;

/// Exponent vector; entry i is the exponent of variable i.
using Expo = std::vector<unsigned>;

/// Lexicographic term order, variable 0 most significant, largest term first.
struct LexDesc {
    bool operator()(const Expo& a, const Expo& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Sparse multivariate polynomial over Q (p == 0) or F_p (p odd prime).
///
/// Coefficients are stored as canonical rationals; over F_p every stored
/// coefficient is an integer residue in [0, p). Terms are kept in descending
/// lexicographic order, so begin() is the leading term. Zero coefficients are
/// never stored, which makes operator== a structural comparison.
class MPoly {
public:
    using TermMap = std::map<Expo, Rat, LexDesc>;

    MPoly() : nvars_(0), p_(0) {}
    MPoly(unsigned nvars, unsigned long p) : nvars_(nvars), p_(p) {}

    static MPoly constant(unsigned nvars, unsigned long p, const Rat& c);
    static MPoly variable(unsigned nvars, unsigned long p, unsigned index);

    unsigned nvars() const { return nvars_; }
    unsigned long characteristic() const { return p_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rat constant_value() const;
    bool is_one() const;

    /// Degree in one variable; -1 for the zero polynomial.
    int degree(unsigned var) const;
    int total_degree() const;

    /// Leading coefficient and exponent under the lex order. Requires nonzero.
    const Rat& leading_coeff() const;
    const Expo& leading_expo() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b);

    MPoly scaled(const Rat& c) const;
    MPoly pow(unsigned e) const;

    /// Coefficient of var^d, viewed as a polynomial in the remaining
    /// variables (the var exponent of every term is set to zero).
    MPoly coeff_in(unsigned var, unsigned d) const;
    MPoly leading_coeff_in(unsigned var) const;

    /// Exact division. Returns false (and clears q) when g does not divide f.
    static bool try_divide(const MPoly& f, const MPoly& g, MPoly& q);
    /// Exact division that must succeed; failure indicates an internal bug.
    static MPoly divide_exact(const MPoly& f, const MPoly& g);

    /// Pseudo-remainder of f by g with respect to one variable.
    static MPoly pseudo_rem(const MPoly& f, const MPoly& g, unsigned var);

    /// Greatest common divisor, unit-normalized (see unit_normal).
    static MPoly gcd(const MPoly& a, const MPoly& b);

    /// Canonical associate: over Q, integer-primitive with positive leading
    /// coefficient; over F_p, monic. The zero polynomial maps to itself.
    MPoly unit_normal() const;

    /// this == content() * unit_normal() over Q (content 0 for zero).
    Rat content() const;

    std::string str(const std::vector<std::string>& names) const;

    /// Inserts c * x^e, combining with an existing term. Used by builders.
    void add_term(const Expo& e, const Rat& c);

private:
    void reduce_coeff(Rat& c) const;
    static void check_compatible(const MPoly& a, const MPoly& b);

    unsigned nvars_;
    unsigned long p_;
    TermMap terms_;
};

/// Rational roots of a nonzero univariate polynomial over Q, obtained by the
/// rational-root bound (trial division of the extreme coefficients; fine for
/// the small integers arising here). `cofactor` is what remains after all
/// rational roots are divided out; it has no rational roots.
struct RationalRoots {
    std::vector<std::pair<Rat, unsigned>> roots;  // (root, multiplicity), sorted
    MPoly cofactor;
};
RationalRoots rational_roots(const MPoly& f);

}  // namespace axtk

#endif

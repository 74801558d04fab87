#ifndef AXTK_FIELDS_HPP
#define AXTK_FIELDS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "axtk/polynomial.hpp"

namespace axtk {

enum class FieldKind { Rationals, Prime, Quadratic, Function };

class Scalar;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Descriptor of an exact computable field:
///
///   - Q                          rationals()
///   - F_p, p an odd prime        prime(p)
///   - base(sqrt(d))              quadratic(base, d), d not a square in base
///   - base(x1, ..., xn)          function(base, {names}), rational functions
///
/// Quadratic extensions are supported over Q and F_p only; function fields
/// over Q and F_p only. Descriptors are immutable and compared structurally.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime(unsigned long p);
    static FieldPtr quadratic(const FieldPtr& base, const Rat& d);
    static FieldPtr function(const FieldPtr& base, std::vector<std::string> variables);

    FieldKind kind() const { return kind_; }
    unsigned long characteristic() const { return char_; }
    const FieldPtr& base() const { return base_; }
    const Rat& radicand() const { return d_; }
    const std::vector<std::string>& variables() const { return vars_; }
    /// Index of a variable name, or throws UnknownVariable.
    unsigned variable_index(const std::string& name) const;
    bool has_variable(const std::string& name) const;

    bool same(const Field& o) const;
    std::string describe() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rat(const Rat& v) const;
    /// Generator of a function field by variable name.
    Scalar variable(const std::string& name) const;
    /// sqrt(d) in a quadratic extension.
    Scalar sqrt_gen() const;
    /// a + b*sqrt(d) from base-field parts.
    Scalar from_parts(const Scalar& re, const Scalar& im) const;

private:
    Field() = default;
    FieldKind kind_ = FieldKind::Rationals;
    unsigned long char_ = 0;
    FieldPtr base_;                   // Quadratic / Function
    Rat d_;                           // Quadratic: radicand as a rational (reduced mod p over F_p)
    std::vector<std::string> vars_;   // Function
};

/// Immutable element of a Field, kept in a unique canonical form so that
/// operator== is representational equality:
///
///   - rationals: reduced fraction (GMP canonical)
///   - prime:     residue in [0, p)
///   - quadratic: (re, im) base-field pair meaning re + im*sqrt(d)
///   - function:  num/den with gcd(num, den) a unit and den monic under the
///                lexicographic order given by the variable list
class Scalar {
public:
    Scalar();  // zero over Q

    const FieldPtr& field() const { return field_; }
    FieldKind kind() const { return field_->kind(); }

    bool is_zero() const;
    bool is_one() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    bool equals_int(long v) const;

    /// Canonical printable form; io::parse_scalar(str(), field()) == *this.
    std::string str() const;

    // payload accessors (each valid for its own kind only)
    const Rat& rat() const;
    unsigned long residue() const;
    const Scalar& quad_re() const;
    const Scalar& quad_im() const;
    const MPoly& num() const;
    const MPoly& den() const;

    /// Total substitution of every variable of a function-field element by
    /// values in a single target field (the base field or any prime field).
    /// Raises PoleAtSpecialization when the denominator vanishes.
    Scalar specialize(const std::map<std::string, Scalar>& assignment) const;

    static Scalar make_rational(Rat v);
    static Scalar make_prime(const FieldPtr& f, unsigned long residue);
    static Scalar make_quadratic(const FieldPtr& f, Scalar re, Scalar im);
    static Scalar make_function(const FieldPtr& f, MPoly num, MPoly den);

private:
    friend class Field;
    FieldPtr field_;
    Rat q_;
    unsigned long r_ = 0;
    std::shared_ptr<const std::pair<Scalar, Scalar>> quad_;
    std::shared_ptr<const std::pair<MPoly, MPoly>> frac_;
};

/// Result of the characteristic-constraint extraction: the evidence integer
/// whose prime divisors are the characteristics in which the input is forced
/// to vanish, together with its full factorization. For x = (a + b*sqrt(d))/c
/// in lowest terms the evidence is |a| when b = 0 and |a^2 - b^2 d| otherwise
/// (squaring loses sign information, so the divisor set is a necessary
/// condition, not a vanishing claim).
struct CharConstraintReport {
    Int evidence;
    std::vector<std::pair<Int, unsigned>> factorization;  // (prime, exponent), ascending
    std::vector<Int> primes;                              // ascending
};

/// Primes p such that x = 0 is forced in characteristic p. Input must live in
/// Q or a quadratic extension of Q with integer radicand. Raises ZeroInput
/// when x vanishes identically.
CharConstraintReport char_constraints(const Scalar& x);

/// Convenience arithmetic against literals in the same field.
inline Scalar operator+(const Scalar& x, long v) { return x + x.field()->from_int(v); }
inline Scalar operator-(const Scalar& x, long v) { return x - x.field()->from_int(v); }
inline Scalar operator*(const Scalar& x, long v) { return x * x.field()->from_int(v); }
inline Scalar operator/(const Scalar& x, long v) { return x / x.field()->from_int(v); }
inline Scalar operator*(long v, const Scalar& x) { return x * v; }

}  // namespace axtk

#endif

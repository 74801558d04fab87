#include "axtk/fields.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace axtk {

namespace {

bool is_probable_prime(unsigned long p) {
    Int n(p);
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Euler criterion; d reduced to [0, p). Exhaustion gives the same answer and
// backs this in the unit tests.
bool is_square_mod(unsigned long d, unsigned long p) {
    Int base(d), mod(p), r;
    if (d % p == 0) return true;
    Int e((p - 1) / 2);
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r == 1;
}

bool is_rational_square(const Rat& d) {
    if (d < 0) return false;
    return mpz_perfect_square_p(d.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(d.get_den().get_mpz_t()) != 0;
}

unsigned long mul_mod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<__uint128_t>(a) * b) % p);
}

unsigned long inv_mod(unsigned long a, unsigned long p) {
    Int r, x(a), m(p);
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DivisionByZero("no inverse modulo " + std::to_string(p));
    return r.get_ui();
}

unsigned long rat_mod(const Rat& v, unsigned long p) {
    Int pp(p);
    Int num = v.get_num() % pp;
    if (num < 0) num += pp;
    Int den = v.get_den() % pp;
    if (den == 0) throw DivisionByZero("denominator divisible by the characteristic " + std::to_string(p));
    if (den != 1) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
        num = (num * inv) % pp;
    }
    return num.get_ui();
}

void require_same_field(const Scalar& x, const Scalar& y) {
    if (!x.field()->same(*y.field()))
        throw DescriptorMismatch("operands live in different fields: " + x.field()->describe() +
                                 " vs " + y.field()->describe());
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::Rationals;
        f->char_ = 0;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(unsigned long p) {
    if (p == 2) throw InvalidParameter("characteristic 2 is not supported");
    if (p < 3 || !is_probable_prime(p)) throw InvalidParameter(std::to_string(p) + " is not an odd prime");
    if (p > (1ul << 62)) throw InvalidParameter("prime too large");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Prime;
    f->char_ = p;
    return f;
}

FieldPtr Field::quadratic(const FieldPtr& base, const Rat& d) {
    if (base->kind() != FieldKind::Rationals && base->kind() != FieldKind::Prime)
        throw InvalidParameter("quadratic extensions are supported over Q and F_p only");
    Rat dd = d;
    dd.canonicalize();
    if (base->kind() == FieldKind::Rationals) {
        if (dd == 0 || is_rational_square(dd))
            throw InvalidParameter("radicand " + dd.get_str() + " is a square in Q");
    } else {
        unsigned long p = base->characteristic();
        unsigned long r = rat_mod(dd, p);
        if (r == 0 || is_square_mod(r, p))
            throw InvalidParameter("radicand is a square modulo " + std::to_string(p));
        dd = Rat(static_cast<unsigned long>(r));
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Quadratic;
    f->char_ = base->characteristic();
    f->base_ = base;
    f->d_ = dd;
    return f;
}

FieldPtr Field::function(const FieldPtr& base, std::vector<std::string> variables) {
    if (base->kind() != FieldKind::Rationals && base->kind() != FieldKind::Prime)
        throw InvalidParameter("function fields are supported over Q and F_p only");
    if (variables.empty()) throw InvalidParameter("function field needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty() || v == "sqrt") throw InvalidParameter("bad variable name '" + v + "'");
        if (!seen.insert(v).second) throw InvalidParameter("duplicate variable '" + v + "'");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Function;
    f->char_ = base->characteristic();
    f->base_ = base;
    f->vars_ = std::move(variables);
    return f;
}

unsigned Field::variable_index(const std::string& name) const {
    for (unsigned i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw UnknownVariable("unknown variable '" + name + "' in " + describe());
}

bool Field::has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_ || char_ != o.char_) return false;
    switch (kind_) {
        case FieldKind::Rationals:
        case FieldKind::Prime:
            return true;
        case FieldKind::Quadratic:
            return d_ == o.d_ && base_->same(*o.base_);
        case FieldKind::Function:
            return vars_ == o.vars_ && base_->same(*o.base_);
    }
    return false;
}

std::string Field::describe() const {
    switch (kind_) {
        case FieldKind::Rationals:
            return "Q";
        case FieldKind::Prime:
            return "F_" + std::to_string(char_);
        case FieldKind::Quadratic:
            return base_->describe() + "(sqrt(" + d_.get_str() + "))";
        case FieldKind::Function: {
            std::string s = base_->describe() + "(";
            for (size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
            return s + ")";
        }
    }
    return "?";
}

Scalar Field::zero() const { return from_rat(Rat(0)); }
Scalar Field::one() const { return from_rat(Rat(1)); }
Scalar Field::from_int(long v) const { return from_rat(Rat(v)); }

Scalar Field::from_rat(const Rat& v) const {
    FieldPtr self = shared_from_this();
    switch (kind_) {
        case FieldKind::Rationals: {
            Rat c = v;
            c.canonicalize();
            return Scalar::make_rational(c);
        }
        case FieldKind::Prime:
            return Scalar::make_prime(self, rat_mod(v, char_));
        case FieldKind::Quadratic:
            return Scalar::make_quadratic(self, base_->from_rat(v), base_->zero());
        case FieldKind::Function: {
            unsigned n = static_cast<unsigned>(vars_.size());
            return Scalar::make_function(self, MPoly::constant(n, char_, v),
                                         MPoly::constant(n, char_, Rat(1)));
        }
    }
    throw Error("unreachable");
}

Scalar Field::variable(const std::string& name) const {
    if (kind_ != FieldKind::Function) throw UnknownVariable("field " + describe() + " has no variables");
    unsigned i = variable_index(name);
    unsigned n = static_cast<unsigned>(vars_.size());
    return Scalar::make_function(shared_from_this(), MPoly::variable(n, char_, i),
                                 MPoly::constant(n, char_, Rat(1)));
}

Scalar Field::sqrt_gen() const {
    if (kind_ != FieldKind::Quadratic) throw InvalidParameter("sqrt generator needs a quadratic field");
    return Scalar::make_quadratic(shared_from_this(), base_->zero(), base_->one());
}

Scalar Field::from_parts(const Scalar& re, const Scalar& im) const {
    if (kind_ != FieldKind::Quadratic) throw InvalidParameter("from_parts needs a quadratic field");
    if (!re.field()->same(*base_) || !im.field()->same(*base_))
        throw DescriptorMismatch("quadratic parts must live in the base field");
    return Scalar::make_quadratic(shared_from_this(), re, im);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : field_(Field::rationals()), q_(0) {}

Scalar Scalar::make_rational(Rat v) {
    Scalar s;
    v.canonicalize();
    s.q_ = std::move(v);
    return s;
}

Scalar Scalar::make_prime(const FieldPtr& f, unsigned long residue) {
    Scalar s;
    s.field_ = f;
    s.r_ = residue % f->characteristic();
    return s;
}

Scalar Scalar::make_quadratic(const FieldPtr& f, Scalar re, Scalar im) {
    Scalar s;
    s.field_ = f;
    s.quad_ = std::make_shared<const std::pair<Scalar, Scalar>>(std::move(re), std::move(im));
    return s;
}

Scalar Scalar::make_function(const FieldPtr& f, MPoly num, MPoly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    // canonical form: gcd(num, den) a unit, den monic under the lex order
    MPoly g = MPoly::gcd(num, den);
    if (!g.is_one()) {
        num = MPoly::divide_exact(num, g);
        den = MPoly::divide_exact(den, g);
    }
    if (num.is_zero()) {
        den = MPoly::constant(den.nvars(), den.characteristic(), Rat(1));
    } else if (!(den.leading_coeff() == 1)) {
        Rat lc = den.leading_coeff();
        num = num.scaled(Rat(1) / lc);
        den = den.scaled(Rat(1) / lc);
    }
    Scalar s;
    s.field_ = f;
    s.frac_ = std::make_shared<const std::pair<MPoly, MPoly>>(std::move(num), std::move(den));
    return s;
}

const Rat& Scalar::rat() const {
    assert(kind() == FieldKind::Rationals);
    return q_;
}
unsigned long Scalar::residue() const {
    assert(kind() == FieldKind::Prime);
    return r_;
}
const Scalar& Scalar::quad_re() const {
    assert(kind() == FieldKind::Quadratic);
    return quad_->first;
}
const Scalar& Scalar::quad_im() const {
    assert(kind() == FieldKind::Quadratic);
    return quad_->second;
}
const MPoly& Scalar::num() const {
    assert(kind() == FieldKind::Function);
    return frac_->first;
}
const MPoly& Scalar::den() const {
    assert(kind() == FieldKind::Function);
    return frac_->second;
}

bool Scalar::is_zero() const {
    switch (kind()) {
        case FieldKind::Rationals: return q_ == 0;
        case FieldKind::Prime: return r_ == 0;
        case FieldKind::Quadratic: return quad_re().is_zero() && quad_im().is_zero();
        case FieldKind::Function: return num().is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return equals_int(1); }

bool Scalar::equals_int(long v) const { return *this == field_->from_int(v); }

bool operator==(const Scalar& x, const Scalar& y) {
    if (!x.field_->same(*y.field_)) return false;
    switch (x.kind()) {
        case FieldKind::Rationals: return x.q_ == y.q_;
        case FieldKind::Prime: return x.r_ == y.r_;
        case FieldKind::Quadratic:
            return x.quad_re() == y.quad_re() && x.quad_im() == y.quad_im();
        case FieldKind::Function:
            return x.num() == y.num() && x.den() == y.den();
    }
    return false;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    require_same_field(x, y);
    switch (x.kind()) {
        case FieldKind::Rationals: return Scalar::make_rational(x.q_ + y.q_);
        case FieldKind::Prime: {
            unsigned long p = x.field_->characteristic();
            return Scalar::make_prime(x.field_, (x.r_ + y.r_) % p);
        }
        case FieldKind::Quadratic:
            return Scalar::make_quadratic(x.field_, x.quad_re() + y.quad_re(), x.quad_im() + y.quad_im());
        case FieldKind::Function:
            return Scalar::make_function(x.field_, x.num() * y.den() + y.num() * x.den(),
                                         x.den() * y.den());
    }
    throw Error("unreachable");
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar Scalar::operator-() const {
    switch (kind()) {
        case FieldKind::Rationals: return make_rational(-q_);
        case FieldKind::Prime: {
            unsigned long p = field_->characteristic();
            return make_prime(field_, r_ == 0 ? 0 : p - r_);
        }
        case FieldKind::Quadratic:
            return make_quadratic(field_, -quad_re(), -quad_im());
        case FieldKind::Function:
            return make_function(field_, -num(), den());
    }
    throw Error("unreachable");
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    require_same_field(x, y);
    switch (x.kind()) {
        case FieldKind::Rationals: return Scalar::make_rational(x.q_ * y.q_);
        case FieldKind::Prime:
            return Scalar::make_prime(x.field_, mul_mod(x.r_, y.r_, x.field_->characteristic()));
        case FieldKind::Quadratic: {
            const Scalar &a = x.quad_re(), &b = x.quad_im(), &c = y.quad_re(), &e = y.quad_im();
            Scalar d = x.field_->base()->from_rat(x.field_->radicand());
            return Scalar::make_quadratic(x.field_, a * c + b * e * d, a * e + b * c);
        }
        case FieldKind::Function:
            return Scalar::make_function(x.field_, x.num() * y.num(), x.den() * y.den());
    }
    throw Error("unreachable");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->describe());
    switch (kind()) {
        case FieldKind::Rationals: return make_rational(Rat(1) / q_);
        case FieldKind::Prime: return make_prime(field_, inv_mod(r_, field_->characteristic()));
        case FieldKind::Quadratic: {
            // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is
            // nonzero because d is not a square in the base field.
            const Scalar &a = quad_re(), &b = quad_im();
            Scalar d = field_->base()->from_rat(field_->radicand());
            Scalar norm = a * a - b * b * d;
            return make_quadratic(field_, a / norm, -(b / norm));
        }
        case FieldKind::Function: return make_function(field_, den(), num());
    }
    throw Error("unreachable");
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    require_same_field(x, y);
    return x * y.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = field_->one();
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) r = r * base;
        base = base * base;
        k >>= 1ul;
    }
    return r;
}

std::string Scalar::str() const {
    switch (kind()) {
        case FieldKind::Rationals: return q_.get_str();
        case FieldKind::Prime: return std::to_string(r_);
        case FieldKind::Quadratic: {
            const Scalar &a = quad_re(), &b = quad_im();
            std::string rad = "sqrt(" + field_->radicand().get_str() + ")";
            if (b.is_zero()) return a.str();
            std::string bs = b.str();
            std::string tail;
            if (b.is_one()) tail = rad;
            else if ((-b).is_one()) tail = "-" + rad;
            else tail = bs + "*" + rad;
            if (a.is_zero()) return tail;
            if (!tail.empty() && tail[0] == '-') return a.str() + " - " + tail.substr(1);
            return a.str() + " + " + tail;
        }
        case FieldKind::Function: {
            const auto& names = field_->variables();
            std::string n = num().str(names);
            if (den().is_one()) return n;
            std::string left = num().terms().size() > 1 ? "(" + n + ")" : n;
            return left + "/(" + den().str(names) + ")";
        }
    }
    return "?";
}

Scalar Scalar::specialize(const std::map<std::string, Scalar>& assignment) const {
    if (kind() != FieldKind::Function)
        throw InvalidParameter("specialize needs a function-field element");
    const auto& vars = field_->variables();
    std::vector<Scalar> values;
    values.reserve(vars.size());
    FieldPtr target;
    for (const auto& v : vars) {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw InvalidParameter("assignment misses variable '" + v + "'");
        if (!target) target = it->second.field();
        else if (!target->same(*it->second.field()))
            throw DescriptorMismatch("assignment values live in different fields");
        values.push_back(it->second);
    }
    if (target->kind() != FieldKind::Rationals && target->kind() != FieldKind::Prime &&
        target->kind() != FieldKind::Quadratic)
        throw InvalidParameter("specialization target must be the base field or a prime field");
    if (field_->characteristic() != 0 && target->characteristic() != field_->characteristic())
        throw DescriptorMismatch("specialization cannot change a positive characteristic");

    auto eval = [&](const MPoly& f) {
        Scalar acc = target->zero();
        for (const auto& [e, c] : f.terms()) {
            Scalar t;
            try {
                t = target->from_rat(c);
            } catch (const DivisionByZero&) {
                throw PoleAtSpecialization("coefficient " + c.get_str() +
                                           " is not integral at the target characteristic");
            }
            for (unsigned i = 0; i < f.nvars(); ++i)
                if (e[i] > 0) t = t * values[i].pow(static_cast<long>(e[i]));
            acc = acc + t;
        }
        return acc;
    };
    Scalar dv = eval(den());
    if (dv.is_zero())
        throw PoleAtSpecialization("denominator vanishes under the assignment: " + str());
    return eval(num()) / dv;
}

// ---------------------------------------------------------------------------
// char_constraints

namespace {

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    std::vector<std::pair<Int, unsigned>> fs;
    if (n < 0) n = -n;
    for (Int d(2); d * d <= n; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) fs.emplace_back(d, e);
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

}  // namespace

CharConstraintReport char_constraints(const Scalar& x) {
    Rat re, im;
    Rat d(0);
    switch (x.kind()) {
        case FieldKind::Rationals:
            re = x.rat();
            break;
        case FieldKind::Quadratic: {
            if (x.field()->base()->kind() != FieldKind::Rationals)
                throw InvalidParameter("char_constraints needs a field of characteristic 0");
            d = x.field()->radicand();
            if (d.get_den() != 1)
                throw InvalidParameter("char_constraints needs an integer radicand");
            re = x.quad_re().rat();
            im = x.quad_im().rat();
            break;
        }
        default:
            throw InvalidParameter("char_constraints is defined over Q and Q(sqrt(d)) only");
    }
    if (re == 0 && im == 0) throw ZeroInput("input vanishes in every characteristic");

    // write x = (a + b sqrt(d)) / c with integers a, b, c
    Int c;
    mpz_lcm(c.get_mpz_t(), re.get_den().get_mpz_t(), im.get_den().get_mpz_t());
    Rat ra = re * Rat(c), rb = im * Rat(c);
    ra.canonicalize();
    rb.canonicalize();
    Int a = ra.get_num(), b = rb.get_num();

    CharConstraintReport out;
    if (b == 0) {
        out.evidence = abs(a);
    } else {
        out.evidence = abs(a * a - b * b * d.get_num());
        if (out.evidence == 0) throw Error("internal: norm vanished for a non-square radicand");
    }
    out.factorization = factorize(out.evidence);
    for (const auto& [p, e] : out.factorization) out.primes.push_back(p);
    return out;
}

}  // namespace axtk

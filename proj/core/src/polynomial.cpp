#include "axtk/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace axtk {

namespace {

Rat rat_zero() { return Rat(0); }

Int mod_inverse(const Int& a, unsigned long p) {
    Int r, m(static_cast<unsigned long>(p));
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DivisionByZero("residue has no inverse modulo " + std::to_string(p));
    return r;
}

}  // namespace

void MPoly::reduce_coeff(Rat& c) const {
    if (p_ == 0) {
        c.canonicalize();
        return;
    }
    Int p(p_);
    Int num = c.get_num() % p;
    if (num < 0) num += p;
    Int den = c.get_den() % p;
    if (den == 0) throw DivisionByZero("denominator divisible by the characteristic " + std::to_string(p_));
    if (den != 1) num = (num * mod_inverse(den, p_)) % p;
    c = Rat(num);
}

void MPoly::check_compatible(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || a.p_ != b.p_)
        throw DescriptorMismatch("polynomial rings differ");
}

MPoly MPoly::constant(unsigned nvars, unsigned long p, const Rat& c) {
    MPoly r(nvars, p);
    r.add_term(Expo(nvars, 0), c);
    return r;
}

MPoly MPoly::variable(unsigned nvars, unsigned long p, unsigned index) {
    assert(index < nvars);
    MPoly r(nvars, p);
    Expo e(nvars, 0);
    e[index] = 1;
    r.add_term(e, Rat(1));
    return r;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    assert(e.size() == nvars_);
    Rat v = c;
    reduce_coeff(v);
    if (v == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, v);
    } else {
        it->second += v;
        reduce_coeff(it->second);
        if (it->second == 0) terms_.erase(it);
    }
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return rat_zero();
    assert(is_constant());
    return terms_.begin()->second;
}

bool MPoly::is_one() const { return is_constant() && constant_value() == 1; }

int MPoly::degree(unsigned var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (unsigned x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

const Rat& MPoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.begin()->second;
}

const Expo& MPoly::leading_expo() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_, p_);
    for (const auto& [e, c] : terms_) {
        Rat v = -c;
        r.reduce_coeff(v);
        r.terms_.emplace(e, v);
    }
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly::check_compatible(a, b);
    MPoly r(a.nvars_, a.p_);
    Expo e(a.nvars_, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.p_ == b.p_ && a.terms_ == b.terms_;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(nvars_, p_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = constant(nvars_, p_, Rat(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

MPoly MPoly::coeff_in(unsigned var, unsigned d) const {
    MPoly r(nvars_, p_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != d) continue;
        Expo e2 = e;
        e2[var] = 0;
        r.terms_.emplace(e2, c);
    }
    return r;
}

MPoly MPoly::leading_coeff_in(unsigned var) const {
    int d = degree(var);
    assert(d >= 0);
    return coeff_in(var, static_cast<unsigned>(d));
}

bool MPoly::try_divide(const MPoly& f, const MPoly& g, MPoly& q) {
    check_compatible(f, g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    q = MPoly(f.nvars_, f.p_);
    MPoly r = f;
    const Expo& ge = g.leading_expo();
    while (!r.is_zero()) {
        const Expo& re = r.leading_expo();
        Expo t(f.nvars_);
        for (unsigned i = 0; i < f.nvars_; ++i) {
            if (re[i] < ge[i]) {
                q = MPoly(f.nvars_, f.p_);
                return false;
            }
            t[i] = re[i] - ge[i];
        }
        Rat c = r.leading_coeff() / g.leading_coeff();
        MPoly m(f.nvars_, f.p_);
        m.add_term(t, c);
        q += m;
        r -= m * g;
    }
    return true;
}

MPoly MPoly::divide_exact(const MPoly& f, const MPoly& g) {
    MPoly q;
    if (!try_divide(f, g, q)) throw Error("internal: inexact polynomial division");
    return q;
}

MPoly MPoly::pseudo_rem(const MPoly& f, const MPoly& g, unsigned var) {
    check_compatible(f, g);
    if (g.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
    const int m = g.degree(var);
    MPoly lg = g.leading_coeff_in(var);
    MPoly r = f;
    int d = r.degree(var);
    while (!r.is_zero() && (d = r.degree(var)) >= m && m >= 0) {
        if (d < m) break;
        MPoly lr = r.leading_coeff_in(var);
        MPoly shift = MPoly::variable(f.nvars_, f.p_, var).pow(static_cast<unsigned>(d - m));
        r = lg * r - lr * shift * g;
        if (r.degree(var) == d) {
            // leading term must cancel by construction
            throw Error("internal: pseudo-remainder failed to reduce degree");
        }
    }
    return r;
}

Rat MPoly::content() const {
    if (terms_.empty()) return rat_zero();
    if (p_ != 0) return leading_coeff();  // over F_p the unit is the leading coefficient
    Int g(0), l(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat cont(g, l);
    cont.canonicalize();
    if (leading_coeff() < 0) cont = -cont;
    return cont;
}

MPoly MPoly::unit_normal() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    MPoly r(nvars_, p_);
    for (const auto& [e, v] : terms_) {
        Rat w = v / c;
        r.reduce_coeff(w);
        r.terms_.emplace(e, w);
    }
    return r;
}

namespace {

// gcd of coefficients of f viewed in `var`, i.e. the content of f as a
// univariate polynomial in `var`.
MPoly content_in(const MPoly& f, unsigned var) {
    MPoly c(f.nvars(), f.characteristic());
    int d = f.degree(var);
    for (int i = 0; i <= d; ++i) {
        MPoly ci = f.coeff_in(var, static_cast<unsigned>(i));
        if (!ci.is_zero()) c = MPoly::gcd(c, ci);
    }
    return c;
}

// First variable with a positive degree in either polynomial, or nvars if
// both are constant.
unsigned main_variable(const MPoly& a, const MPoly& b) {
    for (unsigned v = 0; v < a.nvars(); ++v)
        if (a.degree(v) > 0 || b.degree(v) > 0) return v;
    return a.nvars();
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    check_compatible(a, b);
    if (a.is_zero()) return b.unit_normal();
    if (b.is_zero()) return a.unit_normal();

    unsigned var = main_variable(a, b);
    if (var == a.nvars_)  // both nonzero constants: units
        return constant(a.nvars_, a.p_, Rat(1));

    if (a.degree(var) == 0) return gcd(a, content_in(b, var));
    if (b.degree(var) == 0) return gcd(content_in(a, var), b);

    // primitive part / content split in the main variable
    MPoly ca = content_in(a, var);
    MPoly cb = content_in(b, var);
    MPoly f = divide_exact(a, ca);
    MPoly g = divide_exact(b, cb);
    MPoly c = gcd(ca, cb);

    // primitive pseudo-remainder sequence; unit-normalizing each remainder
    // strips the rational content as well, which keeps the integer growth of
    // the classical PRS in check
    // TODO: a subresultant PRS would avoid the recursive content gcds in the
    // multivariate case; the inputs here stay small enough not to need it yet
    f = f.unit_normal();
    g = g.unit_normal();
    if (f.degree(var) < g.degree(var)) std::swap(f, g);
    while (!g.is_zero()) {
        MPoly r = pseudo_rem(f, g, var);
        f = g;
        if (r.is_zero()) {
            g = r;
        } else if (r.degree(var) == 0) {
            // a nonzero "constant" in the main variable ends the sequence
            f = constant(a.nvars_, a.p_, Rat(1));
            g = MPoly(a.nvars_, a.p_);
        } else {
            g = divide_exact(r, content_in(r, var)).unit_normal();
        }
    }
    return (c * f).unit_normal();
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    assert(names.size() >= nvars_);
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        bool coeff_shown = !has_var || a != 1;
        if (coeff_shown) out << a.get_str();
        bool need_star = coeff_shown;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << names[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

RationalRoots rational_roots(const MPoly& f) {
    if (f.nvars() != 1 || f.characteristic() != 0)
        throw InvalidParameter("rational_roots requires a univariate polynomial over Q");
    if (f.is_zero()) throw ZeroInput("rational_roots of the zero polynomial");

    RationalRoots out;
    MPoly g = f.unit_normal();

    // split off the power of x
    unsigned v = 0;
    {
        unsigned low = static_cast<unsigned>(-1);
        for (const auto& [e, c] : g.terms()) low = std::min(low, e[0]);
        v = low;
    }
    if (v > 0) {
        out.roots.emplace_back(Rat(0), v);
        g = MPoly::divide_exact(g, MPoly::variable(1, 0, 0).pow(v));
    }

    if (g.degree(0) > 0) {
        auto divisors = [](Int n) {
            n = abs(n);
            std::vector<Int> ds;
            for (Int d(1); d * d <= n; ++d) {
                if (n % d == 0) {
                    ds.push_back(d);
                    if (d * d != n) ds.push_back(n / d);
                }
            }
            return ds;
        };
        Int a0 = g.coeff_in(0, 0).constant_value().get_num();
        Int an = g.leading_coeff().get_num();
        auto eval = [](const MPoly& h, const Rat& x) {
            Rat acc(0);
            int d = h.degree(0);
            for (int i = d; i >= 0; --i) {
                acc = acc * x + h.coeff_in(0, static_cast<unsigned>(i)).constant_value();
            }
            return acc;
        };
        auto deflate = [](const MPoly& h, const Rat& r) {
            // synthetic division by (x - r); remainder must be zero
            int d = h.degree(0);
            MPoly q(1, 0);
            Rat carry(0);
            for (int i = d; i >= 1; --i) {
                carry = carry * r + h.coeff_in(0, static_cast<unsigned>(i)).constant_value();
                Expo e{static_cast<unsigned>(i - 1)};
                q.add_term(e, carry);
            }
            return q;
        };
        for (const Int& u : divisors(a0)) {
            for (const Int& w : divisors(an)) {
                for (int sign : {1, -1}) {
                    Rat r(sign * u, w);
                    r.canonicalize();
                    if (g.degree(0) == 0) break;
                    unsigned mult = 0;
                    while (g.degree(0) > 0 && eval(g, r) == 0) {
                        g = deflate(g, r);
                        ++mult;
                    }
                    if (mult > 0) out.roots.emplace_back(r, mult);
                }
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.cofactor = g.unit_normal();
    return out;
}

}  // namespace axtk

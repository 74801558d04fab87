#ifndef AXTK_TEST_SUPPORT_HPP
#define AXTK_TEST_SUPPORT_HPP

#include <random>

#include "axtk/fields.hpp"
#include "axtk/linalg.hpp"

namespace axtk::test {

// deterministic generators for property-style tests

inline Rat random_rat(std::mt19937& rng, int bound = 20) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline MPoly random_poly(std::mt19937& rng, unsigned nvars, unsigned long p, int terms = 4,
                         unsigned maxdeg = 3) {
    MPoly f(nvars, p);
    std::uniform_int_distribution<unsigned> deg(0, maxdeg);
    for (int t = 0; t < terms; ++t) {
        Expo e(nvars);
        for (unsigned i = 0; i < nvars; ++i) e[i] = deg(rng);
        if (p == 0) {
            f.add_term(e, random_rat(rng, 9));
        } else {
            std::uniform_int_distribution<unsigned long> res(0, p - 1);
            f.add_term(e, Rat(res(rng)));
        }
    }
    return f;
}

inline Scalar random_scalar(std::mt19937& rng, const FieldPtr& f) {
    switch (f->kind()) {
        case FieldKind::Rationals:
            return f->from_rat(random_rat(rng));
        case FieldKind::Prime: {
            std::uniform_int_distribution<unsigned long> d(0, f->characteristic() - 1);
            return f->from_rat(Rat(d(rng)));
        }
        case FieldKind::Quadratic:
            return f->from_parts(random_scalar(rng, f->base()), random_scalar(rng, f->base()));
        case FieldKind::Function: {
            unsigned n = static_cast<unsigned>(f->variables().size());
            MPoly num = random_poly(rng, n, f->characteristic(), 3, 2);
            MPoly den(n, f->characteristic());
            while (den.is_zero()) den = random_poly(rng, n, f->characteristic(), 2, 1);
            return Scalar::make_function(f, num, den);
        }
    }
    throw Error("unreachable");
}

inline Vector random_vector(std::mt19937& rng, const FieldPtr& f, std::size_t n) {
    Vector v(f, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(rng, f);
    return v;
}

inline Matrix random_matrix(std::mt19937& rng, const FieldPtr& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(rng, f);
    return m;
}

}  // namespace axtk::test

#endif

#ifndef AXTK_ORACLE_SUPPORT_HPP
#define AXTK_ORACLE_SUPPORT_HPP

#include <functional>
#include <map>

#include "axtk/linalg.hpp"

namespace axtk::test {

/// Characteristic polynomial of a rational matrix by memoized cofactor
/// expansion over Q[t]. Deliberately independent of the elimination-based
/// eigenspace solver: the only shared code is scalar arithmetic.
inline MPoly charpoly(const Matrix& m) {
    std::size_t n = m.rows();
    std::vector<std::vector<MPoly>> a(n, std::vector<MPoly>(n));
    MPoly t = MPoly::variable(1, 0, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = MPoly::constant(1, 0, m.at(i, j).rat());
            if (i == j) a[i][j] -= t;
        }
    std::map<unsigned long, MPoly> memo;
    // det of the submatrix on column set `mask`, rows n-|mask| .. n-1
    std::function<MPoly(unsigned long)> det = [&](unsigned long mask) -> MPoly {
        if (mask == 0) return MPoly::constant(1, 0, Rat(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int k = __builtin_popcountl(mask);
        std::size_t row = n - static_cast<std::size_t>(k);
        MPoly acc(1, 0);
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1ul << j))) continue;
            acc += (a[row][j] * det(mask & ~(1ul << j))).scaled(Rat(sign));
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return det((1ul << n) - 1);
}

/// Multiplicity of `root` in a univariate rational polynomial.
inline unsigned root_multiplicity(MPoly f, const Rat& root) {
    MPoly x = MPoly::variable(1, 0, 0);
    MPoly lin = x - MPoly::constant(1, 0, root);
    unsigned mult = 0;
    MPoly q;
    while (!f.is_zero() && MPoly::try_divide(f, lin, q)) {
        f = q;
        ++mult;
    }
    return mult;
}

}  // namespace axtk::test

#endif

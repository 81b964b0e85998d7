#pragma once

// Slow, obviously-correct reference computations used only by tests.

#include <algorithm>
#include <functional>
#include <vector>

#include "qx/linalg/matrix.hpp"

namespace oracle {

using qx::linalg::Int;
using qx::linalg::Matrix;

inline Int det(std::vector<std::vector<Int>> a)
{
    // Fraction-free Bareiss elimination.
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            f(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors,
/// factor_k = d_k / d_{k-1}. Exponential; small matrices only.
inline std::vector<Int> naive_invariant_factors(const Matrix& m)
{
    std::vector<Int> out;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Int g = 0;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
                std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        a[i][j] = m(rs[i], cs[j]);
                Int d = det(a);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            });
        });
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// Rank over Q by plain Gaussian elimination on rationals scaled to integers.
inline std::size_t rational_rank(const Matrix& m)
{
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0)
            ++p;
        if (p == m.rows())
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][c] != 0) {
                Int x = a[r][c], y = a[rank][c];
                for (std::size_t j = 0; j < m.cols(); ++j)
                    a[r][j] = a[r][j] * y - a[rank][j] * x;
            }
        ++rank;
    }
    return rank;
}

}  // namespace oracle

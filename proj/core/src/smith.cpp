#include "lgtt/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgtt {

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

long int_rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    std::vector<std::vector<Rational>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) m[i].push_back(Rational(x));
    std::size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

namespace {

struct Work {
    IntMatrix s, u, v;

    void row_sub(std::size_t i, std::size_t j, const Integer& f) {
        for (std::size_t k = 0; k < s[i].size(); ++k) s[i][k] -= f * s[j][k];
        for (std::size_t k = 0; k < u[i].size(); ++k) u[i][k] -= f * u[j][k];
    }
    void col_sub(std::size_t i, std::size_t j, const Integer& f) {
        for (auto& row : s) row[i] -= f * row[j];
        for (auto& row : v) row[i] -= f * row[j];
    }
    void row_swap(std::size_t i, std::size_t j) {
        std::swap(s[i], s[j]);
        std::swap(u[i], u[j]);
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (auto& row : s) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void col_negate(std::size_t i) {
        for (auto& row : s) row[i] = -row[i];
        for (auto& row : v) row[i] = -row[i];
    }

    void diagonalize() {
        std::size_t rows = s.size(), cols = rows ? s[0].size() : 0;
        std::size_t t = 0;
        while (t < rows && t < cols) {
            std::size_t pi = t, pj = t;
            bool found = false;
            Integer best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (s[i][j] == 0) continue;
                    Integer m = abs(s[i][j]);
                    if (!found || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) break;
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (s[i][t] == 0) continue;
                    Integer q = s[i][t] / s[t][t];
                    row_sub(i, t, q);
                    if (s[i][t] != 0) {
                        row_swap(i, t);
                        dirty = true;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (s[t][j] == 0) continue;
                    Integer q = s[t][j] / s[t][t];
                    col_sub(j, t, q);
                    if (s[t][j] != 0) {
                        col_swap(j, t);
                        dirty = true;
                    }
                }
            }
            if (s[t][t] < 0) col_negate(t);
            ++t;
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    Work w{a, int_identity(rows), int_identity(cols)};
    w.diagonalize();

    std::size_t n = std::min(rows, cols);
    // enforce d_i | d_{i+1}; each repair strictly decreases d_i via a gcd,
    // so re-diagonalizing terminates
    bool ok = false;
    while (!ok) {
        ok = true;
        for (std::size_t i = 0; ok && i + 1 < n; ++i) {
            if (w.s[i][i] == 0) continue;
            for (std::size_t j = i + 1; ok && j < n; ++j) {
                if (w.s[j][j] % w.s[i][i] == 0) continue;
                w.col_sub(i, j, Integer(-1));  // puts d_j into column i
                w.diagonalize();
                ok = false;
            }
        }
    }
    // move zero diagonal entries last
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (w.s[i][i] != 0) continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if (w.s[j][j] != 0) {
                w.row_swap(i, j);
                w.col_swap(i, j);
                break;
            }
    }
    return {w.u, w.s, w.v};
}

}  // namespace lgtt

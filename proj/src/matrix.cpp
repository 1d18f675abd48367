#include "dh/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dh {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols; ++j) {
                const Int& w = other.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a)
        if (v != 0) return false;
    return true;
}

// ---- full SNF with transforms (dense) ----

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    IntMatrix A = m;
    IntMatrix U = IntMatrix::identity(m.rows);
    IntMatrix V = IntMatrix::identity(m.cols);
    const int R = A.rows, C = A.cols;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < C; ++k) std::swap(A.at(i, k), A.at(j, k));
        for (int k = 0; k < R; ++k) std::swap(U.at(i, k), U.at(j, k));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < R; ++k) std::swap(A.at(k, i), A.at(k, j));
        for (int k = 0; k < C; ++k) std::swap(V.at(k, i), V.at(k, j));
    };
    auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f*src
        for (int k = 0; k < C; ++k) A.at(dst, k) += f * A.at(src, k);
        for (int k = 0; k < R; ++k) U.at(dst, k) += f * U.at(src, k);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int k = 0; k < R; ++k) A.at(k, dst) += f * A.at(k, src);
        for (int k = 0; k < C; ++k) V.at(k, dst) += f * V.at(k, src);
    };
    auto negate_row = [&](int i) {
        for (int k = 0; k < C; ++k) A.at(i, k) = -A.at(i, k);
        for (int k = 0; k < R; ++k) U.at(i, k) = -U.at(i, k);
    };

    SmithDecomposition out;
    int t = 0;
    while (t < R && t < C) {
        // locate minimal-magnitude nonzero in the trailing block
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                const Int& v = A.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        if (A.at(t, t) < 0) negate_row(t);

        bool dirty = false;
        for (int i = t + 1; i < R; ++i) {
            if (A.at(i, t) == 0) continue;
            Int q = A.at(i, t) / A.at(t, t);
            add_row(i, t, -q);
            if (A.at(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < C; ++j) {
            if (A.at(t, j) == 0) continue;
            Int q = A.at(t, j) / A.at(t, t);
            add_col(j, t, -q);
            if (A.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainder appeared; re-pivot

        // pivot must divide the whole trailing block
        bool divides = true;
        for (int i = t + 1; i < R && divides; ++i)
            for (int j = t + 1; j < C; ++j)
                if (A.at(i, j) % A.at(t, t) != 0) {
                    add_row(t, i, 1);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        ++t;
    }
    for (int i = 0; i < t; ++i) out.invariants.push_back(A.at(i, i));
    out.rank = t;
    out.U = std::move(U);
    out.V = std::move(V);
    return out;
}

// ---- invariants-only path ----

namespace {

// dense transform-free SNF on a small residual
std::vector<Int> dense_invariants(std::vector<std::vector<Int>> A) {
    std::vector<Int> inv;
    int R = (int)A.size();
    int C = R ? (int)A[0].size() : 0;
    int t = 0;
    while (t < R && t < C) {
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                if (A[i][j] == 0) continue;
                Int av = abs(A[i][j]);
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(A[t], A[pi]);
        for (int i = t; i < R; ++i) std::swap(A[i][t], A[i][pj]);
        if (A[t][t] < 0)
            for (int j = t; j < C; ++j) A[t][j] = -A[t][j];

        bool dirty = false;
        for (int i = t + 1; i < R; ++i) {
            if (A[i][t] == 0) continue;
            Int q = A[i][t] / A[t][t];
            for (int j = t; j < C; ++j) A[i][j] -= q * A[t][j];
            if (A[i][t] != 0) dirty = true;
        }
        for (int j = t + 1; j < C; ++j) {
            if (A[t][j] == 0) continue;
            Int q = A[t][j] / A[t][t];
            for (int i = t; i < R; ++i) A[i][j] -= q * A[i][t];
            if (A[t][j] != 0) dirty = true;
        }
        if (dirty) continue;

        bool divides = true;
        for (int i = t + 1; i < R && divides; ++i)
            for (int j = t + 1; j < C; ++j)
                if (A[i][j] % A[t][t] != 0) {
                    for (int k = t; k < C; ++k) A[t][k] += A[i][k];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        inv.push_back(A[t][t]);
        ++t;
    }
    return inv;
}

}  // namespace

std::vector<Int> smith_invariants(const IntMatrix& m) {
    // sparse rows; unit pivots eliminated greedily with a min-fill heuristic
    std::vector<std::map<int, Int>> rows(m.rows);
    std::vector<int> colcount(m.cols, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) {
                rows[i][j] = m.at(i, j);
                ++colcount[j];
            }
    std::vector<bool> rowdone(m.rows, false), coldone(m.cols, false);
    int ones = 0;

    while (true) {
        int pr = -1, pc = -1;
        long long bestcost = -1;
        for (int i = 0; i < m.rows; ++i) {
            if (rowdone[i]) continue;
            for (const auto& [j, v] : rows[i]) {
                if (coldone[j] || (v != 1 && v != -1)) continue;
                long long cost =
                    (long long)(rows[i].size() - 1) * (colcount[j] - 1);
                if (bestcost < 0 || cost < bestcost) {
                    bestcost = cost;
                    pr = i;
                    pc = j;
                    if (cost == 0) break;
                }
            }
            if (bestcost == 0) break;
        }
        if (pr < 0) break;

        Int pv = rows[pr][pc];
        for (int i = 0; i < m.rows; ++i) {
            if (i == pr || rowdone[i]) continue;
            auto it = rows[i].find(pc);
            if (it == rows[i].end()) continue;
            Int f = it->second / pv;  // pv is +-1
            for (const auto& [j, v] : rows[pr]) {
                if (coldone[j]) continue;
                auto jt = rows[i].find(j);
                if (jt == rows[i].end()) {
                    Int nv = -f * v;
                    if (nv != 0) {
                        rows[i][j] = nv;
                        ++colcount[j];
                    }
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) {
                        rows[i].erase(jt);
                        --colcount[j];
                    }
                }
            }
        }
        rowdone[pr] = true;
        coldone[pc] = true;
        for (const auto& [j, v] : rows[pr])
            if (!coldone[j]) --colcount[j];
        ++ones;
    }

    // collect the residual
    std::vector<int> live_cols;
    for (int j = 0; j < m.cols; ++j)
        if (!coldone[j] && colcount[j] > 0) live_cols.push_back(j);
    std::vector<std::vector<Int>> residual;
    for (int i = 0; i < m.rows; ++i) {
        if (rowdone[i] || rows[i].empty()) continue;
        std::vector<Int> r(live_cols.size());
        bool nonzero = false;
        for (size_t k = 0; k < live_cols.size(); ++k) {
            auto it = rows[i].find(live_cols[k]);
            if (it != rows[i].end()) {
                r[k] = it->second;
                nonzero = true;
            }
        }
        if (nonzero) residual.push_back(std::move(r));
    }
    std::vector<Int> inv(ones, Int(1));
    for (Int& d : dense_invariants(std::move(residual))) inv.push_back(std::move(d));
    return inv;
}

int matrix_rank(const IntMatrix& m) {
    return (int)smith_invariants(m).size();
}

Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<std::vector<Int>> A(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = m.at(i, j);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

}  // namespace dh

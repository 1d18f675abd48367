#include "dh/extensions.hpp"
#include "dh/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dh {

namespace {

long long mod_ll(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

bool is_associative(const FiniteMagma& m) {
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b)
            for (int c = 0; c < m.size; ++c)
                if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) return false;
    return true;
}

std::string tuple_witness(std::initializer_list<int> vals) {
    std::string s = "(";
    bool first = true;
    for (int v : vals) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(v);
    }
    return s + ")";
}

std::vector<std::vector<long long>> identity_mat(int r) {
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::vector<long long>> mat_sub(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b) {
    auto out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

void check_mat_shape(const std::vector<std::vector<long long>>& m, int r,
                     const char* what) {
    if ((int)m.size() != r)
        throw std::invalid_argument(std::string(what) + ": matrix shape");
    for (const auto& row : m)
        if ((int)row.size() != r)
            throw std::invalid_argument(std::string(what) + ": matrix shape");
}

}  // namespace

int Fiber::order() const {
    int n = 1;
    for (int m : moduli) {
        if (m < 1) throw std::invalid_argument("fiber: moduli must be >= 1");
        n *= m;
    }
    return n;
}

std::vector<int> Fiber::reduce(const std::vector<long long>& v) const {
    if (v.size() != moduli.size())
        throw std::invalid_argument("fiber: component count");
    std::vector<int> out(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i)
        out[i] = (int)mod_ll(v[i], moduli[i]);
    return out;
}

std::vector<int> Fiber::add(const std::vector<int>& a,
                            const std::vector<int>& b) const {
    std::vector<int> out(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i)
        out[i] = (int)mod_ll((long long)a[i] + b[i], moduli[i]);
    return out;
}

std::vector<int> Fiber::sub(const std::vector<int>& a,
                            const std::vector<int>& b) const {
    std::vector<int> out(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i)
        out[i] = (int)mod_ll((long long)a[i] - b[i], moduli[i]);
    return out;
}

std::vector<int> Fiber::apply(const std::vector<std::vector<long long>>& m,
                              const std::vector<int>& v) const {
    std::vector<long long> out(moduli.size(), 0);
    for (size_t i = 0; i < moduli.size(); ++i)
        for (size_t j = 0; j < moduli.size(); ++j) out[i] += m[i][j] * v[j];
    return reduce(out);
}

int Fiber::index(const std::vector<int>& v) const {
    int idx = 0;
    for (size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + v[i];
    return idx;
}

std::vector<int> Fiber::element(int idx) const {
    std::vector<int> v(moduli.size());
    for (size_t i = moduli.size(); i-- > 0;) {
        v[i] = idx % moduli[i];
        idx /= moduli[i];
    }
    return v;
}

bool Fiber::invertible(const std::vector<std::vector<long long>>& m) const {
    check_mat_shape(m, rank(), "fiber");
    std::vector<char> hit(order(), 0);
    for (int i = 0; i < order(); ++i) {
        int j = index(apply(m, element(i)));
        if (hit[j]) return false;
        hit[j] = 1;
    }
    return true;
}

int DynamicalCocycle::phi_at(int a1, int a2, int x1, int x2) const {
    const int n = base.size;
    return phi[(((size_t)a1 * fiber_size + a2) * n + x1) * n + x2];
}

void DynamicalCocycle::validate() const {
    base.validate();
    if (fiber_size < 1)
        throw std::invalid_argument("dynamical cocycle: fiber_size");
    size_t want = (size_t)fiber_size * fiber_size * base.size * base.size;
    if (phi.size() != want)
        throw std::invalid_argument("dynamical cocycle: phi table size");
    for (int v : phi)
        if (v < 0 || v >= fiber_size)
            throw std::invalid_argument("dynamical cocycle: phi value range");
}

ExtendResult extend(const DynamicalCocycle& c, ExtendKind kind) {
    c.validate();
    const int n = c.base.size, A = c.fiber_size;
    ExtendResult r;
    r.product.size = A * n;
    r.product.table.assign(A * n, std::vector<int>(A * n));
    for (int a1 = 0; a1 < A; ++a1)
        for (int x1 = 0; x1 < n; ++x1)
            for (int a2 = 0; a2 < A; ++a2)
                for (int x2 = 0; x2 < n; ++x2)
                    r.product.table[a1 * n + x1][a2 * n + x2] =
                        c.phi_at(a1, a2, x1, x2) * n + c.base.op(x1, x2);

    r.cocycle_identity = true;
    auto fail = [&](std::string w) {
        if (r.cocycle_identity) r.witness = std::move(w);
        r.cocycle_identity = false;
    };
    if (kind == ExtendKind::associative || kind == ExtendKind::distributive) {
        for (int a1 = 0; a1 < A && r.cocycle_identity; ++a1)
            for (int a2 = 0; a2 < A && r.cocycle_identity; ++a2)
                for (int a3 = 0; a3 < A && r.cocycle_identity; ++a3)
                    for (int x1 = 0; x1 < n; ++x1)
                        for (int x2 = 0; x2 < n; ++x2)
                            for (int x3 = 0; x3 < n; ++x3) {
                                int lhs = c.phi_at(c.phi_at(a1, a2, x1, x2), a3,
                                                   c.base.op(x1, x2), x3);
                                int rhs =
                                    kind == ExtendKind::associative
                                        ? c.phi_at(a1, c.phi_at(a2, a3, x2, x3),
                                                   x1, c.base.op(x2, x3))
                                        : c.phi_at(c.phi_at(a1, a3, x1, x3),
                                                   c.phi_at(a2, a3, x2, x3),
                                                   c.base.op(x1, x3),
                                                   c.base.op(x2, x3));
                                if (lhs != rhs) {
                                    fail(tuple_witness(
                                        {a1, a2, a3, x1, x2, x3}));
                                    break;
                                }
                            }
    } else {
        for (int a1 = 0; a1 < A && r.cocycle_identity; ++a1)
            for (int a2 = 0; a2 < A && r.cocycle_identity; ++a2)
                for (int a3 = 0; a3 < A && r.cocycle_identity; ++a3)
                    for (int a4 = 0; a4 < A && r.cocycle_identity; ++a4)
                        for (int x1 = 0; x1 < n && r.cocycle_identity; ++x1)
                            for (int x2 = 0; x2 < n; ++x2)
                                for (int x3 = 0; x3 < n; ++x3)
                                    for (int x4 = 0; x4 < n; ++x4) {
                                        int lhs = c.phi_at(
                                            c.phi_at(a1, a2, x1, x2),
                                            c.phi_at(a3, a4, x3, x4),
                                            c.base.op(x1, x2),
                                            c.base.op(x3, x4));
                                        int rhs = c.phi_at(
                                            c.phi_at(a1, a3, x1, x3),
                                            c.phi_at(a2, a4, x2, x4),
                                            c.base.op(x1, x3),
                                            c.base.op(x2, x4));
                                        if (lhs != rhs) {
                                            fail(tuple_witness({a1, a2, a3, a4,
                                                                x1, x2, x3,
                                                                x4}));
                                            break;
                                        }
                                    }
    }

    switch (kind) {
        case ExtendKind::associative:
            r.magma_axiom = is_associative(r.product);
            break;
        case ExtendKind::distributive:
            r.magma_axiom = check_axioms(r.product).shelf;
            break;
        case ExtendKind::entropic:
            r.magma_axiom = check_axioms(r.product).entropic;
            break;
    }
    return r;
}

void TwoCocycle::validate() const {
    base.validate();
    if (fiber.moduli.empty())
        throw std::invalid_argument("two-cocycle: empty fiber");
    fiber.order();
    check_mat_shape(t, fiber.rank(), "two-cocycle t");
    if (!fiber.invertible(t))
        throw std::invalid_argument("two-cocycle: t is not invertible");
    if ((int)f.size() != base.size)
        throw std::invalid_argument("two-cocycle: f table shape");
    for (const auto& row : f) {
        if ((int)row.size() != base.size)
            throw std::invalid_argument("two-cocycle: f table shape");
        for (const auto& v : row) {
            if ((int)v.size() != fiber.rank())
                throw std::invalid_argument("two-cocycle: f value length");
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] < 0 || v[i] >= fiber.moduli[i])
                    throw std::invalid_argument("two-cocycle: f value range");
        }
    }
}

CocycleCheck check_two_cocycle(const TwoCocycle& c, CocycleKind kind,
                               const std::vector<std::vector<long long>>& s) {
    c.validate();
    const int n = c.base.size;
    const Fiber& F = c.fiber;
    if (kind == CocycleKind::group && !is_associative(c.base))
        throw std::invalid_argument("group cocycle: base is not a semigroup");
    if (kind == CocycleKind::twisted_rack && !check_axioms(c.base).shelf)
        throw std::invalid_argument("twisted rack cocycle: base is not a shelf");
    if (kind == CocycleKind::entropic) {
        if (!check_axioms(c.base).entropic)
            throw std::invalid_argument(
                "entropic cocycle: base is not entropic");
        check_mat_shape(s, F.rank(), "entropic cocycle s");
        for (int i = 0; i < F.order(); ++i) {
            auto e = F.element(i);
            if (F.apply(c.t, F.apply(s, e)) != F.apply(s, F.apply(c.t, e)))
                throw std::invalid_argument(
                    "entropic cocycle: t and s do not commute");
        }
    }

    CocycleCheck out;
    out.ok = true;
    auto zero = F.zero();
    if (kind == CocycleKind::group) {
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int x3 = 0; x3 < n; ++x3) {
                    auto v = F.sub(
                        F.add(c.f[x2][x3], c.f[x1][c.base.op(x2, x3)]),
                        F.add(c.f[c.base.op(x1, x2)][x3], c.f[x1][x2]));
                    if (v != zero)
                        return {false, tuple_witness({x1, x2, x3})};
                }
    } else if (kind == CocycleKind::twisted_rack) {
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int x3 = 0; x3 < n; ++x3) {
                    auto tw = F.apply(
                        c.t, F.add(F.sub(c.f[x2][x3], c.f[x1][x3]),
                                   c.f[x1][x2]));
                    auto v = F.add(
                        F.sub(tw, c.f[x2][x3]),
                        F.sub(c.f[c.base.op(x1, x2)][x3],
                              c.f[c.base.op(x1, x3)][c.base.op(x2, x3)]));
                    if (v != zero)
                        return {false, tuple_witness({x1, x2, x3})};
                }
    } else {
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int x3 = 0; x3 < n; ++x3)
                    for (int x4 = 0; x4 < n; ++x4) {
                        auto v = F.add(
                            F.sub(F.apply(c.t, c.f[x1][x2]),
                                  F.apply(c.t, c.f[x1][x3])),
                            F.sub(F.apply(s, c.f[x3][x4]),
                                  F.apply(s, c.f[x2][x4])));
                        v = F.add(
                            v, F.sub(c.f[c.base.op(x1, x2)][c.base.op(x3, x4)],
                                     c.f[c.base.op(x1, x3)][c.base.op(x2, x4)]));
                        if (v != zero)
                            return {false, tuple_witness({x1, x2, x3, x4})};
                    }
    }
    return out;
}

TwoCocycle coboundary(const FiniteMagma& base, const Fiber& fiber,
                      const std::vector<std::vector<long long>>& t,
                      const std::vector<std::vector<int>>& c) {
    if ((int)c.size() != base.size)
        throw std::invalid_argument("coboundary: c table size");
    auto one_minus_t = mat_sub(identity_mat(fiber.rank()), t);
    TwoCocycle out;
    out.base = base;
    out.fiber = fiber;
    out.t = t;
    out.f.assign(base.size, std::vector<std::vector<int>>(base.size));
    for (int x1 = 0; x1 < base.size; ++x1)
        for (int x2 = 0; x2 < base.size; ++x2)
            out.f[x1][x2] = fiber.sub(
                fiber.add(fiber.apply(t, c[x1]),
                          fiber.apply(one_minus_t, c[x2])),
                c[base.op(x1, x2)]);
    out.validate();
    return out;
}

std::optional<CoboundaryWitness> is_coboundary(const TwoCocycle& f1,
                                               const TwoCocycle& f2) {
    f1.validate();
    f2.validate();
    if (f1.base.table != f2.base.table ||
        f1.fiber.moduli != f2.fiber.moduli || f1.t != f2.t)
        throw std::invalid_argument(
            "is_coboundary: base, fiber, and t must match");
    const int n = f1.base.size;
    const Fiber& F = f1.fiber;
    const int r = F.rank();

    // target d = f1 - f2
    std::vector<std::vector<std::vector<int>>> d(
        n, std::vector<std::vector<int>>(n));
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            d[x1][x2] = F.sub(f1.f[x1][x2], f2.f[x1][x2]);

    auto matches = [&](const std::vector<std::vector<int>>& c) {
        TwoCocycle dc = coboundary(f1.base, F, f1.t, c);
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
                if (dc.f[x1][x2] != d[x1][x2]) return false;
        return true;
    };

    double space = 1;
    for (int x = 0; x < n; ++x) space *= F.order();
    if (space <= 1e6) {
        long long total = 1;
        for (int x = 0; x < n; ++x) total *= F.order();
        std::vector<std::vector<int>> c(n, F.zero());
        for (long long idx = 0; idx < total; ++idx) {
            long long k = idx;
            for (int x = 0; x < n; ++x) {
                c[x] = F.element((int)(k % F.order()));
                k /= F.order();
            }
            if (matches(c)) return CoboundaryWitness{c, "exhaustive"};
        }
        return std::nullopt;
    }

    // linear route: unknowns c[x][j] plus one slack per congruence
    auto one_minus_t = mat_sub(identity_mat(r), f1.t);
    const int unknowns = n * r, eqs = n * n * r;
    IntMatrix a(eqs, unknowns + eqs);
    std::vector<Int> b(eqs);
    int e = 0;
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            for (int i = 0; i < r; ++i, ++e) {
                for (int j = 0; j < r; ++j) {
                    a.at(e, x1 * r + j) += f1.t[i][j];
                    a.at(e, x2 * r + j) += one_minus_t[i][j];
                }
                a.at(e, f1.base.op(x1, x2) * r + i) -= 1;
                a.at(e, unknowns + e) = F.moduli[i];
                b[e] = d[x1][x2][i];
            }
    SmithDecomposition sd = smith_normal_form(a);
    // solve D w = U b, then y = V w
    std::vector<Int> ub(eqs, 0);
    for (int i = 0; i < eqs; ++i)
        for (int j = 0; j < eqs; ++j) ub[i] += sd.U.at(i, j) * b[j];
    std::vector<Int> w(unknowns + eqs, 0);
    for (int i = 0; i < eqs; ++i) {
        if (i < (int)sd.rank) {
            Int di = sd.invariants[i];
            if (ub[i] % di != 0) return std::nullopt;
            w[i] = ub[i] / di;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<std::vector<int>> c(n, F.zero());
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < r; ++j) {
            Int y = 0;
            for (int k = 0; k < unknowns + eqs; ++k)
                y += sd.V.at(x * r + j, k) * w[k];
            c[x][j] = (int)mod_ll((long long)(y % F.moduli[j]), F.moduli[j]);
        }
    if (!matches(c)) return std::nullopt;
    return CoboundaryWitness{c, "linear"};
}

DynamicalCocycle alexander_cocycle(const TwoCocycle& c) {
    c.validate();
    return entropic_cocycle(
        c, mat_sub(identity_mat(c.fiber.rank()), c.t), c.fiber.zero());
}

DynamicalCocycle entropic_cocycle(const TwoCocycle& c,
                                  const std::vector<std::vector<long long>>& s,
                                  const std::vector<int>& a0) {
    c.validate();
    const Fiber& F = c.fiber;
    check_mat_shape(s, F.rank(), "entropic_cocycle s");
    const int n = c.base.size, A = F.order();
    DynamicalCocycle out;
    out.base = c.base;
    out.fiber_size = A;
    out.phi.resize((size_t)A * A * n * n);
    for (int a1 = 0; a1 < A; ++a1)
        for (int a2 = 0; a2 < A; ++a2) {
            auto affine = F.add(F.add(F.apply(c.t, F.element(a1)),
                                      F.apply(s, F.element(a2))),
                                F.reduce(std::vector<long long>(a0.begin(),
                                                                a0.end())));
            for (int x1 = 0; x1 < n; ++x1)
                for (int x2 = 0; x2 < n; ++x2)
                    out.phi[(((size_t)a1 * A + a2) * n + x1) * n + x2] =
                        F.index(F.add(affine, c.f[x1][x2]));
        }
    return out;
}

FiniteMagma hull(const std::vector<FiniteMagma>& a_ops,
                 const FiniteMagma& base, bool twisted) {
    base.validate();
    if ((int)a_ops.size() != base.size)
        throw std::invalid_argument("hull: need one operation on A per base element");
    if (a_ops.empty()) throw std::invalid_argument("hull: empty family");
    const int A = a_ops[0].size, n = base.size;
    for (const FiniteMagma& op : a_ops) {
        op.validate();
        if (op.size != A)
            throw std::invalid_argument("hull: operations on different carriers");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const FiniteMagma& ox = a_ops[x];
            const FiniteMagma& oy = a_ops[y];
            const FiniteMagma& inner = twisted ? a_ops[base.op(x, y)] : ox;
            for (int a = 0; a < A; ++a)
                for (int b = 0; b < A; ++b)
                    for (int c = 0; c < A; ++c)
                        if (oy.op(ox.op(a, b), c) !=
                            inner.op(oy.op(a, c), oy.op(b, c)))
                            throw std::invalid_argument(
                                "hull: indexed distributivity fails at " +
                                tuple_witness({a, b, c, x, y}));
        }
    FiniteMagma out;
    out.size = A * n;
    out.table.assign(A * n, std::vector<int>(A * n));
    for (int a1 = 0; a1 < A; ++a1)
        for (int x1 = 0; x1 < n; ++x1)
            for (int a2 = 0; a2 < A; ++a2)
                for (int x2 = 0; x2 < n; ++x2)
                    out.table[a1 * n + x1][a2 * n + x2] =
                        a_ops[x2].op(a1, a2) * n +
                        (twisted ? base.op(x1, x2) : x1);
    return out;
}

}  // namespace dh

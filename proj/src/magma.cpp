#include "dh/magma.hpp"

#include <numeric>

namespace dh {

FiniteMagma::FiniteMagma(int n, std::vector<std::vector<int>> t)
    : size(n), table(std::move(t)) {
    validate();
}

void FiniteMagma::validate() const {
    if (size < 1) throw std::invalid_argument("magma size must be >= 1");
    if ((int)table.size() != size)
        throw std::invalid_argument("magma table has wrong row count");
    for (const auto& row : table) {
        if ((int)row.size() != size)
            throw std::invalid_argument("magma table has wrong column count");
        for (int v : row)
            if (v < 0 || v >= size)
                throw std::invalid_argument("magma table entry out of range");
    }
}

FiniteMagma trivial_op(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = a;
    return FiniteMagma(n, std::move(t));
}

FiniteMagma compose(const FiniteMagma& op1, const FiniteMagma& op2) {
    if (op1.size != op2.size)
        throw std::invalid_argument("compose: carrier size mismatch");
    int n = op1.size;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = op2.op(op1.op(a, b), b);
    return FiniteMagma(n, std::move(t));
}

AxiomReport check_axioms(const FiniteMagma& m) {
    const int n = m.size;
    AxiomReport r;
    r.shelf = r.left_distributive = r.entropic = r.kei = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (m.op(m.op(a, b), b) != a) r.kei = false;
            for (int c = 0; c < n; ++c) {
                if (m.op(m.op(a, b), c) != m.op(m.op(a, c), m.op(b, c)))
                    r.shelf = false;
                if (m.op(a, m.op(b, c)) != m.op(m.op(a, b), m.op(a, c)))
                    r.left_distributive = false;
                for (int d = 0; d < n; ++d)
                    if (m.op(m.op(a, b), m.op(c, d)) != m.op(m.op(a, c), m.op(b, d)))
                        r.entropic = false;
            }
        }
    bool idem = true;
    for (int a = 0; a < n; ++a)
        if (m.op(a, a) != a) idem = false;
    bool bijective_columns = true;
    for (int b = 0; b < n; ++b) {
        std::vector<bool> seen(n, false);
        for (int a = 0; a < n; ++a) seen[m.op(a, b)] = true;
        for (int a = 0; a < n; ++a)
            if (!seen[a]) bijective_columns = false;
    }
    r.spindle = r.shelf && idem;
    r.rack = r.shelf && bijective_columns;
    r.quandle = r.rack && idem;
    r.kei = r.kei && r.quandle;
    return r;
}

std::optional<std::array<int, 3>> shelf_witness(const FiniteMagma& m) {
    const int n = m.size;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.op(m.op(a, b), c) != m.op(m.op(a, c), m.op(b, c)))
                    return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

bool is_distributive_set(const MagmaSet& s) {
    const int n = s.carrier_size;
    for (const auto& oa : s.ops)
        for (const auto& ob : s.ops)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (ob.op(oa.op(a, b), c) !=
                            oa.op(ob.op(a, c), ob.op(b, c)))
                            return false;
    return true;
}

bool is_entropic_set(const MagmaSet& s) {
    const int n = s.carrier_size;
    for (const auto& oa : s.ops)
        for (const auto& ob : s.ops)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int d = 0; d < n; ++d)
                            if (ob.op(oa.op(a, b), oa.op(c, d)) !=
                                oa.op(ob.op(a, c), ob.op(b, d)))
                                return false;
    return true;
}

bool is_weakly_distributive_pair(const FiniteMagma& op1, const FiniteMagma& op2) {
    // Condition 6.4 as a multiset equality of formal sums:
    //   (a*1 b)*2 c + (a*2 b)*1 c  vs  (a*1 c)*2(b*1 c) + (a*2 c)*1(b*2 c)
    const int n = op1.size;
    if (op2.size != n) throw std::invalid_argument("carrier size mismatch");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int l1 = op2.op(op1.op(a, b), c);
                int l2 = op1.op(op2.op(a, b), c);
                int r1 = op2.op(op1.op(a, c), op1.op(b, c));
                int r2 = op1.op(op2.op(a, c), op2.op(b, c));
                bool eq = (l1 == r1 && l2 == r2) || (l1 == r2 && l2 == r1);
                if (!eq) return false;
            }
    return true;
}

static int imod(long long v, int n) {
    long long r = v % n;
    return (int)(r < 0 ? r + n : r);
}

FiniteMagma takasaki(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = imod(2LL * b - a, n);
    return FiniteMagma(n, std::move(t));
}

FiniteMagma alexander(int n, int tt) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = imod((long long)tt * a + (1LL - tt) * b, n);
    return FiniteMagma(n, std::move(t));
}

int group_identity(const FiniteMagma& g) {
    for (int e = 0; e < g.size; ++e) {
        bool ok = true;
        for (int x = 0; x < g.size; ++x)
            if (g.op(e, x) != x || g.op(x, e) != x) ok = false;
        if (ok) return e;
    }
    throw std::invalid_argument("table has no identity element");
}

void validate_group(const FiniteMagma& g) {
    const int n = g.size;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw std::invalid_argument("table is not associative");
    int e = group_identity(g);
    for (int a = 0; a < n; ++a) {
        bool inv = false;
        for (int b = 0; b < n; ++b)
            if (g.op(a, b) == e && g.op(b, a) == e) inv = true;
        if (!inv) throw std::invalid_argument("element has no inverse");
    }
}

std::vector<int> group_inverses(const FiniteMagma& g) {
    int e = group_identity(g);
    std::vector<int> inv(g.size, -1);
    for (int a = 0; a < g.size; ++a)
        for (int b = 0; b < g.size; ++b)
            if (g.op(a, b) == e && g.op(b, a) == e) inv[a] = b;
    for (int v : inv)
        if (v < 0) throw std::invalid_argument("element has no inverse");
    return inv;
}

bool is_endomorphism(const FiniteMagma& g, const std::vector<int>& t) {
    if ((int)t.size() != g.size) return false;
    for (int v : t)
        if (v < 0 || v >= g.size) return false;
    for (int a = 0; a < g.size; ++a)
        for (int b = 0; b < g.size; ++b)
            if (t[g.op(a, b)] != g.op(t[a], t[b])) return false;
    return true;
}

FiniteMagma conjugation(const FiniteMagma& group) {
    validate_group(group);
    auto inv = group_inverses(group);
    int n = group.size;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = group.op(group.op(inv[b], a), b);
    return FiniteMagma(n, std::move(t));
}

FiniteMagma core(const FiniteMagma& group) {
    validate_group(group);
    auto inv = group_inverses(group);
    int n = group.size;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = group.op(group.op(b, inv[a]), b);
    return FiniteMagma(n, std::move(t));
}

FiniteMagma joyce1(const FiniteMagma& group, const std::vector<int>& t) {
    validate_group(group);
    if (!is_endomorphism(group, t))
        throw std::invalid_argument("t is not a group endomorphism");
    auto inv = group_inverses(group);
    int n = group.size;
    std::vector<std::vector<int>> tab(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            tab[a][b] = group.op(t[group.op(a, inv[b])], b);
    return FiniteMagma(n, std::move(tab));
}

FiniteMagma joyce2(const FiniteMagma& group, const std::vector<int>& t) {
    validate_group(group);
    if (!is_endomorphism(group, t))
        throw std::invalid_argument("t is not a group endomorphism");
    auto inv = group_inverses(group);
    int n = group.size;
    std::vector<std::vector<int>> tab(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            tab[a][b] = group.op(t[group.op(inv[b], a)], b);
    return FiniteMagma(n, std::move(tab));
}

FiniteMagma half_conjugacy(const FiniteMagma& group, int g) {
    validate_group(group);
    if (g < 0 || g >= group.size)
        throw std::invalid_argument("half_conjugacy: g out of range");
    auto inv = group_inverses(group);
    int n = group.size;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = group.op(group.op(a, group.op(inv[b], g)), b);
    return FiniteMagma(n, std::move(t));
}

FiniteMagma invert(const FiniteMagma& m) {
    const int n = m.size;
    std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
    for (int b = 0; b < n; ++b) {
        std::vector<int> inv(n, -1);
        for (int a = 0; a < n; ++a) {
            if (inv[m.op(a, b)] != -1)
                throw std::invalid_argument(
                    "not a rack: column " + std::to_string(b) +
                    " is not a bijection");
            inv[m.op(a, b)] = a;
        }
        for (int c = 0; c < n; ++c) t[c][b] = inv[c];
    }
    return FiniteMagma(n, std::move(t));
}

FiniteMagma s3_group() {
    // Permutations of {0,1,2} in one-line notation, composed left-to-right
    // (x -> p(x) then q): (p q)(x) = q(p(x)). Elements enumerated 0..5.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
                return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[j][perms[i][x]];
            t[i][j] = find(comp);
        }
    return FiniteMagma(6, std::move(t));
}

}  // namespace dh

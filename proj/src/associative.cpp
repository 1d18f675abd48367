#include "dh/associative.hpp"
#include "dh/distributive.hpp"

#include <stdexcept>

namespace dh {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

SemigroupData semigroup(const FiniteMagma& m) {
    const int n = m.size;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c)))
                    throw std::invalid_argument(
                        "not associative at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    SemigroupData s{m, std::nullopt};
    for (int e = 0; e < n; ++e) {
        bool unit = true;
        for (int x = 0; x < n; ++x)
            if (m.op(e, x) != x || m.op(x, e) != x) unit = false;
        if (unit) {
            s.identity = e;
            break;
        }
    }
    return s;
}

WallAction point_wall(WallSide side) {
    WallAction w;
    w.side = side;
    w.carrier = 1;
    return w;
}

WallAction multiplication_wall(const SemigroupData& s, WallSide side) {
    WallAction w;
    w.side = side;
    w.carrier = s.magma.size;
    if (side != WallSide::left) w.right_table = s.magma.table;
    if (side != WallSide::right) w.left_table = s.magma.table;
    return w;
}

std::optional<std::string> validate_wall(const WallAction& w,
                                         const SemigroupData& s) {
    const int n = s.magma.size;
    auto need = [&](const std::vector<std::vector<int>>& t, bool e_first,
                    const char* name) -> std::optional<std::string> {
        int r = e_first ? w.carrier : n, c = e_first ? n : w.carrier;
        if ((int)t.size() != r) return std::string(name) + " table shape";
        for (const auto& row : t) {
            if ((int)row.size() != c) return std::string(name) + " table shape";
            for (int v : row)
                if (v < 0 || v >= w.carrier)
                    return std::string(name) + " entry out of range";
        }
        return std::nullopt;
    };
    // a one-point wall may omit its tables: the action is forced
    bool has_right = w.side != WallSide::left &&
                     !(w.carrier == 1 && w.right_table.empty());
    bool has_left = w.side != WallSide::right &&
                    !(w.carrier == 1 && w.left_table.empty());
    if (w.carrier < 1) return "wall carrier must be nonempty";
    if (has_right)
        if (auto err = need(w.right_table, true, "right action")) return err;
    if (has_left)
        if (auto err = need(w.left_table, false, "left action")) return err;

    if (has_right)
        for (int e = 0; e < w.carrier; ++e)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (w.right_table[w.right_table[e][a]][b] !=
                        w.right_table[e][s.magma.op(a, b)])
                        return "(e*a)*b != e*(a*b) at (" + std::to_string(e) +
                               "," + std::to_string(a) + "," +
                               std::to_string(b) + ")";
    if (has_left)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int e = 0; e < w.carrier; ++e)
                    if (w.left_table[s.magma.op(a, b)][e] !=
                        w.left_table[a][w.left_table[b][e]])
                        return "(a*b)*e != a*(b*e) at (" + std::to_string(a) +
                               "," + std::to_string(b) + "," +
                               std::to_string(e) + ")";
    if (w.side == WallSide::bi && has_right && has_left)
        for (int a = 0; a < n; ++a)
            for (int e = 0; e < w.carrier; ++e)
                for (int b = 0; b < n; ++b)
                    if (w.right_table[w.left_table[a][e]][b] !=
                        w.left_table[a][w.right_table[e][b]])
                        return "(a*e)*b != a*(e*b) at (" + std::to_string(a) +
                               "," + std::to_string(e) + "," +
                               std::to_string(b) + ")";
    return std::nullopt;
}

namespace {

struct BarIndexer {
    int nx, ne0, new_;
    long long index(int deg, int e0, long long tup, int ew) const {
        return (e0 * ipow(nx, deg) + tup) * new_ + ew;
    }
    std::string label(int deg, long long g, int nx_) const {
        int ew = (int)(g % new_);
        long long rest = g / new_;
        long long tup = rest % ipow(nx_, deg);
        int e0 = (int)(rest / ipow(nx_, deg));
        std::string body = tuple_label(tuple_unrank(tup, deg, nx_));
        if (ne0 == 1 && new_ == 1) return body;
        return std::to_string(e0) + "|" + body + "|" + std::to_string(ew);
    }
};

}  // namespace

FaceSystem bar_face_system(const SemigroupData& s,
                           const std::optional<WallAction>& e0,
                           const std::optional<WallAction>& ew, int max_degree,
                           bool with_degeneracies) {
    WallAction w0 = e0.value_or(point_wall(WallSide::right));
    WallAction ww = ew.value_or(point_wall(WallSide::left));
    if (w0.side == WallSide::left)
        throw std::invalid_argument("e0 wall must carry a right action");
    if (ww.side == WallSide::right)
        throw std::invalid_argument("ew wall must carry a left action");
    if (auto err = validate_wall(w0, s))
        throw std::invalid_argument("e0 wall: " + *err);
    if (auto err = validate_wall(ww, s))
        throw std::invalid_argument("ew wall: " + *err);

    const int n = s.magma.size;
    BarIndexer ix{n, w0.carrier, ww.carrier};
    FiniteMagma m = s.magma;
    bool pointy = w0.carrier == 1 && ww.carrier == 1;

    FaceSystem f;
    f.lo = 0;
    f.hi = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<std::string> labels;
        long long total = (long long)w0.carrier * ipow(n, d) * ww.carrier;
        for (long long g = 0; g < total; ++g) labels.push_back(ix.label(d, g, n));
        f.basis[d] = std::move(labels);
    }
    (void)pointy;
    f.num_faces = [](int deg) { return deg + 1; };
    auto r0 = w0.right_table;
    auto lw = ww.left_table;
    f.face = [ix, m, n, r0, lw](int deg, int i, int gen) -> Chain {
        int ew = (int)(gen % ix.new_);
        long long rest = gen / ix.new_;
        long long tup = rest % ipow(n, deg);
        int e0 = (int)(rest / ipow(n, deg));
        auto xs = tuple_unrank(tup, deg, n);
        std::vector<int> out;
        int ne0 = e0, newall = ew;
        if (i == 0) {
            newall = ew;
            ne0 = r0.empty() ? e0 : r0[e0][xs[0]];
            out.assign(xs.begin() + 1, xs.end());
        } else if (i == deg) {
            newall = lw.empty() ? ew : lw[xs[deg - 1]][ew];
            out.assign(xs.begin(), xs.end() - 1);
        } else {
            out = xs;
            out[i - 1] = m.op(xs[i - 1], xs[i]);
            out.erase(out.begin() + i);
        }
        return {{(int)ix.index(deg - 1, ne0, tuple_rank(out, n), newall), 1}};
    };
    if (with_degeneracies) {
        if (!s.identity)
            throw std::invalid_argument("degeneracies need a monoid identity");
        int one = *s.identity;
        f.num_degeneracies = [](int deg) { return deg + 1; };
        f.degeneracy = [ix, n, one](int deg, int i, int gen) {
            int ew = (int)(gen % ix.new_);
            long long rest = gen / ix.new_;
            long long tup = rest % ipow(n, deg);
            int e0 = (int)(rest / ipow(n, deg));
            auto xs = tuple_unrank(tup, deg, n);
            xs.insert(xs.begin() + i, one);
            return (int)ix.index(deg + 1, e0, tuple_rank(xs, n), ew);
        };
    }
    return f;
}

ChainComplex bar_complex(const SemigroupData& s,
                         const std::optional<WallAction>& e0,
                         const std::optional<WallAction>& ew, int max_degree) {
    return assemble(bar_face_system(s, e0, ew, max_degree + 1, false));
}

ChainComplex hochschild_complex(const SemigroupData& s, const WallAction& e,
                                int max_degree) {
    if (e.side != WallSide::bi)
        throw std::invalid_argument("hochschild_complex needs a biset wall");
    if (auto err = validate_wall(e, s))
        throw std::invalid_argument("biset wall: " + *err);
    const int n = s.magma.size;
    const int ne = e.carrier;
    ChainComplex c;
    c.lo = 0;
    c.hi = max_degree + 1;
    for (int d = 0; d <= c.hi; ++d) {
        std::vector<std::string> labels;
        for (int v = 0; v < ne; ++v)
            for (long long t = 0; t < ipow(n, d); ++t)
                labels.push_back(std::to_string(v) + "|" +
                                 tuple_label(tuple_unrank(t, d, n)));
        c.basis[d] = std::move(labels);
    }
    for (int d = 1; d <= c.hi; ++d) {
        long long lower = ipow(n, d - 1), upper = ipow(n, d);
        IntMatrix mat((int)(ne * lower), (int)(ne * upper));
        for (int v = 0; v < ne; ++v)
            for (long long t = 0; t < upper; ++t) {
                auto xs = tuple_unrank(t, d, n);
                for (int i = 0; i <= d; ++i) {
                    long long sign = (i % 2 == 0) ? 1 : -1;
                    int nv = v;
                    std::vector<int> out;
                    if (i == 0) {
                        nv = e.right_table.empty() ? v
                                                   : e.right_table[v][xs[0]];
                        out.assign(xs.begin() + 1, xs.end());
                    } else if (i == d) {
                        nv = e.left_table.empty() ? v
                                                  : e.left_table[xs[d - 1]][v];
                        out.assign(xs.begin(), xs.end() - 1);
                    } else {
                        out = xs;
                        out[i - 1] = s.magma.op(xs[i - 1], xs[i]);
                        out.erase(out.begin() + i);
                    }
                    mat.at((int)(nv * lower + tuple_rank(out, n)),
                           (int)(v * upper + t)) += sign;
                }
            }
        c.boundary[d] = std::move(mat);
    }
    if (auto w = c.check_dd_zero())
        throw std::runtime_error("hochschild_complex: " + *w);
    return c;
}

ChainComplex bar_degenerate_subcomplex(const SemigroupData& s, int max_degree) {
    if (!s.identity)
        throw std::invalid_argument("degenerate subcomplex needs a monoid");
    int one = *s.identity;
    ChainComplex full = bar_complex(s, std::nullopt, std::nullopt, max_degree);
    const int n = s.magma.size;
    std::map<int, std::vector<int>> keep;  // indices of identity-containing tuples
    for (int d = 0; d <= full.hi; ++d)
        for (long long t = 0; t < ipow(n, d); ++t) {
            auto xs = tuple_unrank(t, d, n);
            bool has_one = false;
            for (int x : xs)
                if (x == one) has_one = true;
            if (has_one) keep[d].push_back((int)t);
        }
    ChainComplex out;
    out.lo = 0;
    out.hi = full.hi;
    for (int d = 0; d <= full.hi; ++d) {
        std::vector<std::string> labels;
        for (int g : keep[d]) labels.push_back(full.basis.at(d)[g]);
        out.basis[d] = std::move(labels);
        if (d == 0) continue;
        const IntMatrix& m = full.boundary.at(d);
        IntMatrix sub((int)keep[d - 1].size(), (int)keep[d].size());
        for (size_t j = 0; j < keep[d].size(); ++j) {
            // closure: the column must be supported on degenerate rows
            for (int r = 0; r < m.rows; ++r)
                if (m.at(r, keep[d][j]) != 0 &&
                    !std::binary_search(keep[d - 1].begin(), keep[d - 1].end(),
                                        r))
                    throw std::runtime_error(
                        "degenerate part not closed at degree " +
                        std::to_string(d));
            for (size_t i = 0; i < keep[d - 1].size(); ++i)
                sub.at((int)i, (int)j) = m.at(keep[d - 1][i], keep[d][j]);
        }
        out.boundary[d] = std::move(sub);
    }
    if (auto w = out.check_dd_zero())
        throw std::runtime_error("bar_degenerate_subcomplex: " + *w);
    return out;
}

TruncatedReport truncated_acyclicity(const SemigroupData& s, WallSide side,
                                     int max_degree) {
    if (side == WallSide::bi)
        throw std::invalid_argument("truncation side must be left or right");
    const int n = s.magma.size;
    TruncatedReport rep;
    rep.monoid = s.is_monoid();
    ChainComplex& c = rep.complex;
    c.lo = 0;
    c.hi = max_degree + 1;
    for (int d = 0; d <= c.hi; ++d) {
        std::vector<std::string> labels;
        for (long long t = 0; t < ipow(n, d); ++t)
            labels.push_back(tuple_label(tuple_unrank(t, d, n)));
        c.basis[d] = std::move(labels);
    }
    for (int d = 1; d <= c.hi; ++d) {
        IntMatrix m((int)ipow(n, d - 1), (int)ipow(n, d));
        int lo_i = side == WallSide::left ? 1 : 0;
        int hi_i = side == WallSide::left ? d : d - 1;
        for (long long t = 0; t < ipow(n, d); ++t) {
            auto xs = tuple_unrank(t, d, n);
            for (int i = lo_i; i <= hi_i; ++i) {
                long long sign = (i % 2 == 0) ? 1 : -1;
                std::vector<int> out;
                if (i == 0) {
                    out.assign(xs.begin() + 1, xs.end());
                } else if (i == d) {
                    out.assign(xs.begin(), xs.end() - 1);
                } else {
                    out = xs;
                    out[i - 1] = s.magma.op(xs[i - 1], xs[i]);
                    out.erase(out.begin() + i);
                }
                m.at((int)tuple_rank(out, n), (int)t) += sign;
            }
        }
        c.boundary[d] = std::move(m);
    }
    if (auto w = c.check_dd_zero())
        throw std::runtime_error("truncated complex: " + *w);
    rep.acyclic = true;
    for (int d = 0; d <= max_degree; ++d) {
        HomologyGroup h = homology(c, d);
        if (h.free_rank != 0 || !h.torsion.empty()) rep.acyclic = false;
        rep.homology.push_back(std::move(h));
    }
    return rep;
}

}  // namespace dh

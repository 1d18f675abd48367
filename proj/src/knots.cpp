#include "dh/knots.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <set>

namespace dh {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct Occ {
    int ci, pos;
};

// position 0 is under-in and 2 under-out; positions 1,3 carry the over-strand
// whose direction od[ci] (true: b -> d) is solved from the two-occurrence
// constraints: every label is incoming exactly once and outgoing exactly once.
std::vector<bool> solve_orientation(
    const std::vector<PdCrossing>& crossings,
    const std::map<int, std::vector<Occ>>& labels) {
    const int nc = (int)crossings.size();
    auto is_in_literal = [](int pos) { return pos == 1; };

    std::map<int, bool> forced;
    struct Edge {
        int c1, c2;
        bool same;
    };
    std::vector<Edge> edges;
    for (const auto& [l, occ] : labels) {
        auto [o1, o2] = std::pair{occ[0], occ[1]};
        bool f1 = o1.pos == 0 || o1.pos == 2, f2 = o2.pos == 0 || o2.pos == 2;
        if (f1 && f2) {
            if ((o1.pos == 0) == (o2.pos == 0))
                throw std::invalid_argument(
                    "inconsistent orientation at label " + std::to_string(l));
        } else if (f1 || f2) {
            if (!f1) std::swap(o1, o2);
            bool need_in = o1.pos == 2;  // the other occurrence must flow in
            bool val = is_in_literal(o2.pos) ? need_in : !need_in;
            auto it = forced.find(o2.ci);
            if (it != forced.end() && it->second != val)
                throw std::invalid_argument(
                    "inconsistent orientation at label " + std::to_string(l));
            forced[o2.ci] = val;
        } else {
            if (o1.ci == o2.ci) continue;  // over-loop: both directions fine
            bool same = is_in_literal(o1.pos) != is_in_literal(o2.pos);
            edges.push_back({o1.ci, o2.ci, same});
        }
    }

    std::vector<int> par(nc);
    std::vector<bool> rel(nc, false);  // parity relative to parent
    for (int i = 0; i < nc; ++i) par[i] = i;
    std::function<std::pair<int, bool>(int)> find =
        [&](int x) -> std::pair<int, bool> {
        if (par[x] == x) return {x, false};
        auto [r, pr] = find(par[x]);
        par[x] = r;
        rel[x] = rel[x] ^ pr;
        return {r, rel[x]};
    };
    for (const Edge& e : edges) {
        auto [ra, pa] = find(e.c1);
        auto [rb, pb] = find(e.c2);
        bool want = pa ^ pb ^ !e.same;
        if (ra == rb) {
            if (want)
                throw std::invalid_argument(
                    "inconsistent orientation (parity)");
        } else {
            par[ra] = rb;
            rel[ra] = want;
        }
    }
    std::vector<int> od(nc, -1);
    for (const auto& [ci, val] : forced) {
        auto [r, p] = find(ci);
        int v = val ^ p;
        if (od[r] != -1 && od[r] != v)
            throw std::invalid_argument("inconsistent orientation (forced)");
        od[r] = v;
    }
    // unforced components: the smallest crossing index runs b -> d
    for (int ci = 0; ci < nc; ++ci) {
        auto [r, p] = find(ci);
        if (od[r] == -1) od[r] = !p;
    }
    std::vector<bool> out(nc);
    for (int ci = 0; ci < nc; ++ci) {
        auto [r, p] = find(ci);
        out[ci] = od[r] ^ p;
    }
    for (const auto& [l, occ] : labels) {
        int ins = 0, outs = 0;
        for (const Occ& o : occ) {
            if (o.pos == 0)
                ++ins;
            else if (o.pos == 2)
                ++outs;
            else if (o.pos == 1)
                out[o.ci] ? ++ins : ++outs;
            else
                out[o.ci] ? ++outs : ++ins;
        }
        if (ins != 1 || outs != 1)
            throw std::invalid_argument("inconsistent orientation at label " +
                                        std::to_string(l));
    }
    return out;
}

// colors in arc order; returns the pair (count, colorings) machinery shared
// by color_count / enumerate_colorings
std::vector<Coloring> colorings_of(const LinkDiagram& d,
                                   const FiniteMagma& q) {
    const int n = q.size;
    const int na = (int)d.arcs.size();
    std::vector<Coloring> out;
    Coloring col(na, 0);
    long long total = ipow(n, na);
    for (long long idx = 0; idx < total; ++idx) {
        long long k = idx;
        for (int i = 0; i < na; ++i) {
            col[i] = (int)(k % n);
            k /= n;
        }
        if (coloring_valid(d, q, col)) out.push_back(col);
    }
    return out;
}

}  // namespace

int LinkDiagram::arc(int label) const {
    auto it = std::lower_bound(semi_arcs.begin(), semi_arcs.end(), label);
    if (it == semi_arcs.end() || *it != label)
        throw std::invalid_argument("unknown semi-arc label " +
                                    std::to_string(label));
    // semi_arcs and arc reps were computed together in make_diagram
    return arc_rep_[it - semi_arcs.begin()];
}

int LinkDiagram::arc_index(int label) const {
    int rep = arc(label);
    return (int)(std::lower_bound(arcs.begin(), arcs.end(), rep) -
                 arcs.begin());
}

LinkDiagram make_diagram(const std::vector<PdCrossing>& crossings,
                         int unknots) {
    if (unknots < 0) throw std::invalid_argument("negative unknot count");
    LinkDiagram d;
    d.crossings = crossings;
    d.unknots = unknots;

    std::map<int, std::vector<Occ>> labels;
    for (int ci = 0; ci < (int)crossings.size(); ++ci) {
        const PdCrossing& q = crossings[ci];
        int vals[4] = {q.a, q.b, q.c, q.d};
        for (int pos = 0; pos < 4; ++pos) {
            if (vals[pos] < 1)
                throw std::invalid_argument("semi-arc labels must be positive");
            labels[vals[pos]].push_back({ci, pos});
        }
    }
    for (const auto& [l, occ] : labels)
        if (occ.size() != 2)
            throw std::invalid_argument(
                "label " + std::to_string(l) + " appears " +
                std::to_string(occ.size()) + " times, expected 2");

    d.over_dir = solve_orientation(crossings, labels);
    for (bool od : d.over_dir) d.signs.push_back(od ? 1 : -1);

    for (const auto& [l, occ] : labels) d.semi_arcs.push_back(l);
    std::sort(d.semi_arcs.begin(), d.semi_arcs.end());

    // arcs: merge (b,d) at each crossing, minimal label as representative
    std::map<int, int> parent;
    for (int l : d.semi_arcs) parent[l] = l;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const PdCrossing& q : crossings) {
        int rx = find(q.b), ry = find(q.d);
        if (rx != ry) {
            if (rx < ry) std::swap(rx, ry);
            parent[rx] = ry;
        }
    }
    d.arc_rep_.reserve(d.semi_arcs.size());
    for (int l : d.semi_arcs) d.arc_rep_.push_back(find(l));
    std::set<int> reps(d.arc_rep_.begin(), d.arc_rep_.end());
    d.arcs.assign(reps.begin(), reps.end());

    // components: successor map out of each crossing
    std::map<int, int> nxt;
    for (int ci = 0; ci < (int)crossings.size(); ++ci) {
        const PdCrossing& q = crossings[ci];
        nxt[q.a] = q.c;
        if (d.over_dir[ci])
            nxt[q.b] = q.d;
        else
            nxt[q.d] = q.b;
    }
    std::set<int> seen;
    int comps = 0;
    for (int l : d.semi_arcs) {
        if (seen.count(l)) continue;
        ++comps;
        int x = l;
        while (!seen.count(x)) {
            seen.insert(x);
            x = nxt.at(x);
        }
    }
    d.components = comps + unknots;
    return d;
}

LinkDiagram parse_pd(const std::string& text) {
    std::vector<PdCrossing> crossings;
    std::vector<std::pair<int, int>> positions;  // line/col per crossing
    int unknots = 0;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto error = [&](const std::string& msg, int l, int c) {
        throw PdParseError(msg, l, c);
    };
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace((unsigned char)ch)) {
            advance(1);
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (ch == 'X') {
            int tl = line, tc = col;
            advance(1);
            if (i >= text.size() || text[i] != '[')
                error("expected '[' after X", line, col);
            advance(1);
            int vals[4];
            for (int k = 0; k < 4; ++k) {
                if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
                    error("expected a label", line, col);
                long long v = 0;
                while (i < text.size() &&
                       std::isdigit((unsigned char)text[i])) {
                    v = v * 10 + (text[i] - '0');
                    if (v > 1000000) error("label too large", line, col);
                    advance(1);
                }
                if (v < 1) error("labels must be positive", line, col);
                vals[k] = (int)v;
                char want = k < 3 ? ',' : ']';
                if (i >= text.size() || text[i] != want)
                    error(std::string("expected '") + want + "'", line, col);
                advance(1);
            }
            crossings.push_back({vals[0], vals[1], vals[2], vals[3]});
            positions.emplace_back(tl, tc);
        } else if (std::isalpha((unsigned char)ch)) {
            int tl = line, tc = col;
            std::string word;
            while (i < text.size() &&
                   std::isalpha((unsigned char)text[i])) {
                word += text[i];
                advance(1);
            }
            if (word == "unknot")
                ++unknots;
            else
                error("unknown token '" + word + "'", tl, tc);
        } else {
            error(std::string("unexpected character '") + ch + "'", line, col);
        }
    }
    if (crossings.empty() && unknots == 0)
        error("empty input: an explicit `unknot` token is required", line,
              col);

    // early label-count check so the error can point at a crossing
    std::map<int, std::vector<int>> where;
    for (int ci = 0; ci < (int)crossings.size(); ++ci)
        for (int v : {crossings[ci].a, crossings[ci].b, crossings[ci].c,
                      crossings[ci].d})
            where[v].push_back(ci);
    for (const auto& [l, occ] : where)
        if (occ.size() != 2) {
            auto [pl, pc] = positions[occ.back()];
            error("label " + std::to_string(l) + " appears " +
                      std::to_string(occ.size()) + " times, expected 2",
                  pl, pc);
        }
    try {
        return make_diagram(crossings, unknots);
    } catch (const std::invalid_argument& e) {
        auto [pl, pc] = positions.empty() ? std::pair{1, 1} : positions[0];
        throw PdParseError(e.what(), pl, pc);
    }
}

std::vector<PdCrossing> braid_pd(const std::vector<int>& word, int strands) {
    if (strands < 1) throw std::invalid_argument("braid: strands must be >= 1");
    for (int let : word)
        if (let == 0 || std::abs(let) >= strands)
            throw std::invalid_argument("braid: letter out of range");
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        parent.try_emplace(x, x);
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[ra] = rb;
    };
    int next = 0;
    auto fresh = [&] { return ++next; };
    std::vector<int> cur(strands);
    for (int& v : cur) v = fresh();
    std::vector<int> first = cur;
    std::vector<std::array<int, 4>> raw;
    for (int let : word) {
        int i = std::abs(let) - 1;
        int tl = cur[i], tr = cur[i + 1];
        int bl = fresh(), br = fresh();
        if (let > 0)
            raw.push_back({tr, tl, bl, br});  // under-in at NE, CCW
        else
            raw.push_back({tl, bl, br, tr});  // under-in at NW, CCW
        cur[i] = bl;
        cur[i + 1] = br;
    }
    for (int j = 0; j < strands; ++j) unite(cur[j], first[j]);
    std::map<int, int> canon;
    auto cl = [&](int x) {
        int r = find(x);
        auto [it, fresh_entry] = canon.try_emplace(r, (int)canon.size() + 1);
        return it->second;
    };
    std::vector<PdCrossing> out;
    for (const auto& q : raw)
        out.push_back({cl(q[0]), cl(q[1]), cl(q[2]), cl(q[3])});
    return out;
}

bool coloring_valid(const LinkDiagram& d, const FiniteMagma& q,
                    const Coloring& col) {
    const int n = q.size;
    if ((int)col.size() != (int)d.arcs.size())
        throw std::invalid_argument("coloring: wrong arc count");
    for (int v : col)
        if (v < 0 || v >= n)
            throw std::invalid_argument("coloring: color out of range");
    // tbar only exists columnwise where the translation is invertible
    std::vector<std::vector<int>> tbar(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tbar[q.op(a, b)][b] = a;
    for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
        const PdCrossing& x = d.crossings[ci];
        int in = col[d.arc_index(x.a)];
        int out = col[d.arc_index(x.c)];
        int over = col[d.arc_index(x.b)];
        int want = d.signs[ci] > 0 ? q.op(in, over) : tbar[in][over];
        if (want != out) return false;
    }
    return true;
}

long long color_count(const LinkDiagram& d, const FiniteMagma& q) {
    q.validate();
    return (long long)colorings_of(d, q).size() * ipow(q.size, d.unknots);
}

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d,
                                          const FiniteMagma& q) {
    q.validate();
    return colorings_of(d, q);
}

ComposeResult entropic_compose(const LinkDiagram& d, const FiniteMagma& op1,
                               const Coloring& f, const Coloring& g,
                               const FiniteMagma& op2) {
    if (f.size() != g.size() || (int)f.size() != (int)d.arcs.size())
        throw std::invalid_argument("entropic_compose: arc count mismatch");
    Coloring out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = op2.op(f[i], g[i]);
    return {out, coloring_valid(d, op1, out)};
}

GroupRing cocycle_state_sum(const LinkDiagram& d, const FiniteMagma& q,
                            const TwoCocycle& f) {
    q.validate();
    f.validate();
    if (f.base.table != q.table)
        throw std::invalid_argument(
            "cocycle_state_sum: cocycle base does not match the quandle");
    const Fiber& F = f.fiber;
    for (int j = 0; j < F.rank(); ++j) {
        std::vector<int> e = F.zero();
        e[j] = 1 % F.moduli[j];
        if (F.apply(f.t, e) != e)
            throw std::invalid_argument(
                "cocycle_state_sum: requires the untwisted case t = 1");
    }
    if (!check_two_cocycle(f, CocycleKind::twisted_rack).ok)
        throw std::invalid_argument(
            "cocycle_state_sum: f is not a rack 2-cocycle");
    for (int x = 0; x < q.size; ++x)
        if (f.f[x][x] != F.zero())
            throw std::invalid_argument(
                "cocycle_state_sum: f(x,x) != 0 at x = " + std::to_string(x));

    GroupRing gr;
    for (const Coloring& col : colorings_of(d, q)) {
        std::vector<int> acc = F.zero();
        for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
            const PdCrossing& x = d.crossings[ci];
            int over = col[d.arc_index(x.b)];
            // the source arc is the x1 with x1 * over = the other under-arc
            int src = d.signs[ci] > 0 ? col[d.arc_index(x.a)]
                                      : col[d.arc_index(x.c)];
            const std::vector<int>& w = f.f[src][over];
            acc = d.signs[ci] > 0 ? F.add(acc, w) : F.sub(acc, w);
        }
        gr[acc] += 1;
    }
    long long factor = ipow(q.size, d.unknots);
    for (auto& [k, v] : gr) v *= factor;
    return gr;
}

Int& StateSumWeights::R(int a, int b, int c, int d) {
    return r[(((size_t)a * n + b) * n + c) * n + d];
}
Int& StateSumWeights::Rbar(int a, int b, int c, int d) {
    return rbar[(((size_t)a * n + b) * n + c) * n + d];
}
const Int& StateSumWeights::R(int a, int b, int c, int d) const {
    return r[(((size_t)a * n + b) * n + c) * n + d];
}
const Int& StateSumWeights::Rbar(int a, int b, int c, int d) const {
    return rbar[(((size_t)a * n + b) * n + c) * n + d];
}

StateSumWeights zero_weights(int n) {
    StateSumWeights w;
    w.n = n;
    w.r.assign((size_t)n * n * n * n, 0);
    w.rbar.assign((size_t)n * n * n * n, 0);
    return w;
}

StateSumWeights ones_weights(int n) {
    StateSumWeights w = zero_weights(n);
    for (Int& v : w.r) v = 1;
    for (Int& v : w.rbar) v = 1;
    return w;
}

StateSumWeights delta_weights(const FiniteMagma& q) {
    if (!check_axioms(q).rack)
        throw std::invalid_argument("delta_weights: requires a rack");
    StateSumWeights w = zero_weights(q.size);
    for (int a = 0; a < q.size; ++a)
        for (int b = 0; b < q.size; ++b) {
            w.R(a, b, b, q.op(a, b)) = 1;  // (a,b) -> (b, a*b)
            // negative: the under-out u satisfies u * over = under-in
            w.Rbar(q.op(a, b), b, b, a) = 1;
        }
    return w;
}

Int boltzmann_state_sum(const LinkDiagram& d, const StateSumWeights& w) {
    const int n = w.n;
    const auto& sa = d.semi_arcs;
    const int ns = (int)sa.size();
    std::map<int, int> li;
    for (int i = 0; i < ns; ++i) li[sa[i]] = i;

    // crossing -> (under-in, over-in, over-out, under-out) semi-arc indices
    struct Cr {
        int a, oin, oout, c;
    };
    std::vector<Cr> crs;
    for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
        const PdCrossing& x = d.crossings[ci];
        int oin = d.over_dir[ci] ? x.b : x.d;
        int oout = d.over_dir[ci] ? x.d : x.b;
        crs.push_back({li[x.a], li[oin], li[oout], li[x.c]});
    }
    // crossings that become fully assigned at semi-arc index k
    std::vector<std::vector<int>> ready(ns);
    for (int ci = 0; ci < (int)crs.size(); ++ci) {
        int top = std::max({crs[ci].a, crs[ci].oin, crs[ci].oout, crs[ci].c});
        ready[top].push_back(ci);
    }
    std::vector<int> ass(ns, 0);
    Int total = 0;
    std::function<void(int, Int)> rec = [&](int k, Int weight) {
        if (k == ns) {
            total += weight;
            return;
        }
        for (int v = 0; v < n; ++v) {
            ass[k] = v;
            Int wgt = weight;
            for (int ci : ready[k]) {
                const Cr& c = crs[ci];
                const Int& e =
                    d.signs[ci] > 0
                        ? w.R(ass[c.a], ass[c.oin], ass[c.oout], ass[c.c])
                        : w.Rbar(ass[c.a], ass[c.oin], ass[c.oout],
                                 ass[c.c]);
                wgt *= e;
                if (wgt == 0) break;
            }
            if (wgt != 0) rec(k + 1, wgt);
        }
    };
    if (ns == 0)
        total = 1;
    else
        rec(0, 1);
    // 0-crossing unknot components contribute a free factor n each
    for (int u = 0; u < d.unknots; ++u) total *= n;
    return total;
}

std::string format_group_ring(const GroupRing& g) {
    if (g.empty()) return "0";
    std::string out;
    for (const auto& [elem, mult] : g) {
        if (!out.empty()) out += " + ";
        out += std::to_string(mult) + "*[";
        for (size_t i = 0; i < elem.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(elem[i]);
        }
        out += "]";
    }
    return out;
}

}  // namespace dh

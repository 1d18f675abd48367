#include "dh/functor.hpp"
#include "dh/distributive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dh {

namespace {

bool simplex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<int> support(const std::vector<int>& tuple) {
    std::vector<int> s(tuple);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool degenerate(const std::vector<int>& tuple) {
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] == tuple[i + 1]) return true;
    return false;
}

// All tuples of the given length whose support spans a simplex, in odometer
// order (last coordinate fastest), optionally filtered by degeneracy.
enum class TupleFilter { all, nondegenerate, degenerate_only };

std::vector<std::vector<int>> tuples_of(const SimplicialComplex& k, int length,
                                        TupleFilter filter) {
    std::vector<std::vector<int>> out;
    if (length == 0) return out;
    std::vector<int> t(length, 0);
    while (true) {
        bool keep = k.has(support(t));
        if (keep && filter == TupleFilter::nondegenerate) keep = !degenerate(t);
        if (keep && filter == TupleFilter::degenerate_only) keep = degenerate(t);
        if (keep) out.push_back(t);
        int pos = length - 1;
        while (pos >= 0 && t[pos] == k.vertex_count - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return out;
}

ChainComplex tuple_complex(const SimplicialComplex& k, int max_degree,
                           TupleFilter filter) {
    k.validate();
    if (max_degree < 0) throw std::invalid_argument("asc: negative degree");
    ChainComplex c;
    c.lo = 0;
    c.hi = max_degree + 1;
    std::map<int, std::map<std::vector<int>, int>> index;
    for (int deg = 0; deg <= c.hi; ++deg) {
        std::vector<std::vector<int>> ts = tuples_of(k, deg + 1, filter);
        std::vector<std::string> labels;
        for (int i = 0; i < (int)ts.size(); ++i) {
            index[deg][ts[i]] = i;
            labels.push_back(tuple_label(ts[i]));
        }
        c.basis[deg] = std::move(labels);
    }
    for (int deg = 1; deg <= c.hi; ++deg) {
        std::vector<std::vector<int>> ts = tuples_of(k, deg + 1, filter);
        IntMatrix m((int)index[deg - 1].size(), (int)ts.size());
        // faces landing outside the filtered span must cancel in the sum;
        // track them to catch a non-subcomplex early
        std::map<std::vector<int>, long long> dropped;
        for (int col = 0; col < (int)ts.size(); ++col) {
            for (int i = 0; i <= deg; ++i) {
                std::vector<int> f(ts[col]);
                f.erase(f.begin() + i);
                long long sign = (i % 2 == 0) ? 1 : -1;
                auto it = index[deg - 1].find(f);
                if (it != index[deg - 1].end())
                    m.at(it->second, col) += sign;
                else if (filter == TupleFilter::degenerate_only)
                    dropped[f] += sign;
            }
            if (filter == TupleFilter::degenerate_only)
                for (auto& [f, coeff] : dropped)
                    if (coeff != 0)
                        throw std::logic_error(
                            "degenerate subcomplex: boundary escapes at " +
                            tuple_label(ts[col]));
            dropped.clear();
        }
        c.boundary[deg] = std::move(m);
    }
    if (auto bad = c.check_dd_zero())
        throw std::logic_error("asc complex: dd != 0: " + *bad);
    return c;
}

ChainComplex oriented_complex(const SimplicialComplex& k, int max_degree) {
    k.validate();
    ChainComplex c;
    c.lo = 0;
    c.hi = max_degree + 1;
    std::map<int, std::map<std::vector<int>, int>> index;
    for (int deg = 0; deg <= c.hi; ++deg) {
        std::vector<std::string> labels;
        for (const auto& s : k.simplices) {
            if ((int)s.size() != deg + 1) continue;
            index[deg][s] = (int)labels.size();
            labels.push_back(tuple_label(s));
        }
        c.basis[deg] = std::move(labels);
    }
    for (int deg = 1; deg <= c.hi; ++deg) {
        IntMatrix m((int)index[deg - 1].size(), (int)index[deg].size());
        for (const auto& [s, col] : index[deg]) {
            for (int i = 0; i <= deg; ++i) {
                std::vector<int> f(s);
                f.erase(f.begin() + i);
                m.at(index[deg - 1].at(f), col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        c.boundary[deg] = std::move(m);
    }
    if (auto bad = c.check_dd_zero())
        throw std::logic_error("asc complex: dd != 0: " + *bad);
    return c;
}

}  // namespace

bool SimplicialComplex::has(const std::vector<int>& s) const {
    return std::binary_search(simplices.begin(), simplices.end(), s,
                              simplex_less);
}

void SimplicialComplex::validate() const {
    if (vertex_count < 1)
        throw std::invalid_argument("simplicial complex: no vertices");
    if (!std::is_sorted(simplices.begin(), simplices.end(), simplex_less))
        throw std::invalid_argument("simplicial complex: unsorted simplex list");
    for (const auto& s : simplices) {
        if (s.empty())
            throw std::invalid_argument("simplicial complex: empty simplex");
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= vertex_count)
                throw std::invalid_argument(
                    "simplicial complex: vertex out of range in " +
                    tuple_label(s));
            if (i > 0 && s[i - 1] >= s[i])
                throw std::invalid_argument(
                    "simplicial complex: simplex not strictly increasing: " +
                    tuple_label(s));
        }
        if (s.size() > 1)
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> f(s);
                f.erase(f.begin() + i);
                if (!has(f))
                    throw std::invalid_argument(
                        "simplicial complex: missing face " + tuple_label(f) +
                        " of " + tuple_label(s));
            }
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!has({v}))
            throw std::invalid_argument("simplicial complex: missing vertex " +
                                        std::to_string(v));
}

SimplicialComplex make_complex(int vertex_count,
                               const std::vector<std::vector<int>>& maximal) {
    if (vertex_count < 1)
        throw std::invalid_argument("simplicial complex: no vertices");
    std::set<std::vector<int>> closed;
    for (int v = 0; v < vertex_count; ++v) closed.insert({v});
    for (const auto& raw : maximal) {
        std::vector<int> s = support(raw);
        if (s.size() != raw.size())
            throw std::invalid_argument("make_complex: repeated vertex in " +
                                        tuple_label(raw));
        if (s.empty() || s.front() < 0 || s.back() >= vertex_count)
            throw std::invalid_argument("make_complex: vertex out of range in " +
                                        tuple_label(raw));
        // all nonempty subsets, by bitmask
        int n = (int)s.size();
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) sub.push_back(s[i]);
            closed.insert(std::move(sub));
        }
    }
    SimplicialComplex k;
    k.vertex_count = vertex_count;
    k.simplices.assign(closed.begin(), closed.end());
    std::sort(k.simplices.begin(), k.simplices.end(), simplex_less);
    k.validate();
    return k;
}

ChainComplex asc_complex(const SimplicialComplex& k, AscVariant variant,
                         int max_degree) {
    switch (variant) {
        case AscVariant::ordered:
            return tuple_complex(k, max_degree, TupleFilter::all);
        case AscVariant::normalized:
            return tuple_complex(k, max_degree, TupleFilter::nondegenerate);
        case AscVariant::oriented:
            return oriented_complex(k, max_degree);
    }
    throw std::invalid_argument("asc_complex: unknown variant");
}

std::vector<HomologyGroup> asc_homology(const SimplicialComplex& k,
                                        AscVariant variant, int max_degree) {
    ChainComplex c = asc_complex(k, variant, max_degree);
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= max_degree; ++n) out.push_back(homology(c, n));
    return out;
}

ChainComplex ordered_degenerate_subcomplex(const SimplicialComplex& k,
                                           int max_degree) {
    return tuple_complex(k, max_degree, TupleFilter::degenerate_only);
}

SimplexFunctor constant_functor() {
    SimplexFunctor f;
    f.rank = [](const std::vector<int>&) { return 1; };
    f.restriction = [](const std::vector<int>&, int) {
        IntMatrix m(1, 1);
        m.at(0, 0) = 1;
        return m;
    };
    return f;
}

SimplexFunctor zero_functor() {
    SimplexFunctor f;
    f.rank = [](const std::vector<int>&) { return 0; };
    f.restriction = [](const std::vector<int>&, int) { return IntMatrix(0, 0); };
    return f;
}

ChainComplex functor_complex(const SimplicialComplex& k,
                             const SimplexFunctor& f, int max_degree) {
    k.validate();
    if (max_degree < 0)
        throw std::invalid_argument("functor_complex: negative degree");
    const int top = max_degree + 2;  // largest simplex size involved
    // shape checks, then functoriality on every two-step chain
    for (const auto& s : k.simplices) {
        if ((int)s.size() > top) continue;
        int r = f.rank(s);
        if (r < 0) throw std::invalid_argument("functor_complex: negative rank");
        if (s.size() < 2) continue;
        for (int i = 0; i < (int)s.size(); ++i) {
            std::vector<int> face(s);
            face.erase(face.begin() + i);
            IntMatrix m = f.restriction(s, i);
            if (m.rows != f.rank(face) || m.cols != r)
                throw std::invalid_argument(
                    "functor_complex: restriction shape mismatch at " +
                    tuple_label(s) + " removing vertex " +
                    std::to_string(s[i]));
        }
    }
    for (const auto& s : k.simplices) {
        if ((int)s.size() > top || s.size() < 3) continue;
        for (int i = 0; i < (int)s.size(); ++i)
            for (int j = i + 1; j < (int)s.size(); ++j) {
                std::vector<int> si(s), sj(s);
                si.erase(si.begin() + i);  // s minus s[i]; s[j] is at j-1
                sj.erase(sj.begin() + j);  // s minus s[j]; s[i] is at i
                IntMatrix via_i = f.restriction(si, j - 1).mul(f.restriction(s, i));
                IntMatrix via_j = f.restriction(sj, i).mul(f.restriction(s, j));
                if (!(via_i == via_j))
                    throw std::invalid_argument(
                        "functor_complex: functoriality fails on " +
                        tuple_label(s) + " removing vertices " +
                        std::to_string(s[i]) + "," + std::to_string(s[j]));
            }
    }
    ChainComplex c;
    c.lo = 0;
    c.hi = max_degree + 1;
    std::map<int, std::vector<std::vector<int>>> by_deg;
    std::map<int, std::map<std::vector<int>, int>> offset;
    for (int deg = 0; deg <= c.hi; ++deg) {
        std::vector<std::string> labels;
        for (const auto& s : k.simplices) {
            if ((int)s.size() != deg + 1) continue;
            by_deg[deg].push_back(s);
            offset[deg][s] = (int)labels.size();
            int r = f.rank(s);
            for (int i = 0; i < r; ++i)
                labels.push_back(tuple_label(s) + ":" + std::to_string(i));
        }
        c.basis[deg] = std::move(labels);
    }
    for (int deg = 1; deg <= c.hi; ++deg) {
        IntMatrix m((int)c.basis[deg - 1].size(), (int)c.basis[deg].size());
        for (const auto& s : by_deg[deg]) {
            int col0 = offset[deg].at(s);
            for (int i = 0; i <= deg; ++i) {
                std::vector<int> face(s);
                face.erase(face.begin() + i);
                int row0 = offset[deg - 1].at(face);
                IntMatrix r = f.restriction(s, i);
                long long sign = (i % 2 == 0) ? 1 : -1;
                for (int a = 0; a < r.rows; ++a)
                    for (int b = 0; b < r.cols; ++b)
                        m.at(row0 + a, col0 + b) += sign * r.at(a, b);
            }
        }
        c.boundary[deg] = std::move(m);
    }
    if (auto bad = c.check_dd_zero())
        throw std::logic_error("functor_complex: dd != 0: " + *bad);
    return c;
}

FrobeniusAlgebraData frobenius_algebra(int m) {
    if (m < 2) throw std::invalid_argument("frobenius algebra: need m >= 2");
    FrobeniusAlgebraData a;
    a.m = m;
    a.mu.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a.mu[i][j] = (i + j < m) ? i + j : -1;
    a.delta.resize(m);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i) {
            int j = m - 1 + k - i;
            if (j >= 0 && j < m) a.delta[k].push_back({i, j});
        }
    return a;
}

FrobeniusCheck check_frobenius(const FrobeniusAlgebraData& a) {
    const int m = a.m;
    if (m < 2 || (int)a.mu.size() != m || (int)a.delta.size() != m)
        throw std::invalid_argument("frobenius algebra: table shape");
    for (const auto& row : a.mu) {
        if ((int)row.size() != m)
            throw std::invalid_argument("frobenius algebra: table shape");
        for (int v : row)
            if (v < -1 || v >= m)
                throw std::invalid_argument("frobenius algebra: bad product");
    }
    for (const auto& terms : a.delta)
        for (auto [i, j] : terms)
            if (i < 0 || i >= m || j < 0 || j >= m)
                throw std::invalid_argument("frobenius algebra: bad coproduct");
    FrobeniusCheck out;
    out.commutative = true;
    for (int i = 0; i < m && out.commutative; ++i)
        for (int j = 0; j < m; ++j)
            if (a.mu[i][j] != a.mu[j][i]) {
                out.commutative = false;
                break;
            }
    out.cocommutative = true;
    for (int k = 0; k < m && out.cocommutative; ++k) {
        std::map<std::pair<int, int>, int> cnt;
        for (auto [i, j] : a.delta[k]) {
            cnt[{i, j}] += 1;
            cnt[{j, i}] -= 1;
        }
        for (auto& [_, v] : cnt)
            if (v != 0) {
                out.cocommutative = false;
                break;
            }
    }
    // Delta mu = (mu x Id)(Id x Delta) = (Id x mu)(Delta x Id) on x^a (x) x^b
    out.frobenius = true;
    for (int x = 0; x < m && out.frobenius; ++x)
        for (int y = 0; y < m && out.frobenius; ++y) {
            std::map<std::pair<int, int>, long long> left, right;
            if (a.mu[x][y] >= 0)
                for (auto [i, j] : a.delta[a.mu[x][y]]) {
                    left[{i, j}] += 1;
                    right[{i, j}] += 1;
                }
            for (auto [i, j] : a.delta[y])
                if (a.mu[x][i] >= 0) left[{a.mu[x][i], j}] -= 1;
            for (auto [i, j] : a.delta[x])
                if (a.mu[j][y] >= 0) right[{i, a.mu[j][y]}] -= 1;
            for (auto& [_, v] : left)
                if (v != 0) out.frobenius = false;
            for (auto& [_, v] : right)
                if (v != 0) out.frobenius = false;
        }
    return out;
}

namespace {

// Circles of a full resolution: union-find over semi-arc labels, components
// sorted by their sorted label lists; unknot components get sentinel labels.
std::vector<std::vector<int>> resolution_circles(const LinkDiagram& d,
                                                 const std::vector<int>& bits,
                                                 bool one_is_ab) {
    std::map<int, int> parent;
    for (const auto& c : d.crossings)
        for (int l : {c.a, c.b, c.c, c.d}) parent.emplace(l, l);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const PdCrossing& c = d.crossings[i];
        if ((bits[i] == 1) == one_is_ab) {
            unite(c.a, c.b);
            unite(c.c, c.d);
        } else {
            unite(c.a, c.d);
            unite(c.b, c.c);
        }
    }
    std::map<int, std::vector<int>> comps;
    for (auto& [l, _] : parent) comps[find(l)].push_back(l);
    std::vector<std::vector<int>> out;
    for (auto& [_, ls] : comps) {
        std::sort(ls.begin(), ls.end());
        out.push_back(ls);
    }
    std::sort(out.begin(), out.end());
    for (int u = 0; u < d.unknots; ++u) out.push_back({-(u + 1)});
    return out;
}

std::string cube_label(const std::vector<int>& bits,
                       const std::vector<int>& ass) {
    std::string s;
    for (int b : bits) s += char('0' + b);
    if (bits.empty()) s = "-";
    return s + ":" + tuple_label(ass);
}

}  // namespace

CubeHomology khovanov_cube(const LinkDiagram& d,
                           const FrobeniusAlgebraData& alg, bool one_is_ab) {
    check_frobenius(alg);  // shape validation only; verdicts gate nothing here
    const int m = alg.m;
    const int nc = (int)d.crossings.size();
    const int nstates = 1 << nc;
    // states in lexicographic bit order, bits[0] most significant
    std::vector<std::vector<int>> state_bits(nstates);
    std::vector<std::vector<std::vector<int>>> state_circles(nstates);
    for (int code = 0; code < nstates; ++code) {
        std::vector<int> bits(nc);
        for (int i = 0; i < nc; ++i) bits[i] = (code >> (nc - 1 - i)) & 1;
        state_circles[code] = resolution_circles(d, bits, one_is_ab);
        state_bits[code] = std::move(bits);
    }
    // per cube degree k: states with |bits|=k in order, each contributing a
    // block of m^{#circles} assignments in odometer order
    std::vector<std::vector<int>> level(nc + 1);
    std::vector<std::map<int, long long>> state_offset(nc + 1);
    std::vector<long long> dim(nc + 1, 0);
    for (int code = 0; code < nstates; ++code) {
        int k = 0;
        for (int b : state_bits[code]) k += b;
        level[k].push_back(code);
        state_offset[k][code] = dim[k];
        dim[k] += ipow(m, (int)state_circles[code].size());
    }
    auto ass_rank = [&](const std::vector<int>& ass) {
        long long r = 0;
        for (int v : ass) r = r * m + v;
        return r;
    };
    CubeHomology out;
    out.crossings = nc;
    out.complex.lo = 0;
    out.complex.hi = nc;
    for (int k = 0; k <= nc; ++k) {
        std::vector<std::string> labels;
        for (int code : level[k]) {
            int ncirc = (int)state_circles[code].size();
            std::vector<int> ass(ncirc, 0);
            long long total = ipow(m, ncirc);
            for (long long t = 0; t < total; ++t) {
                labels.push_back(cube_label(state_bits[code], ass));
                int pos = ncirc - 1;
                while (pos >= 0 && ass[pos] == m - 1) ass[pos--] = 0;
                if (pos >= 0) ++ass[pos];
            }
        }
        out.complex.basis[nc - k] = std::move(labels);
    }
    for (int k = 0; k < nc; ++k) {
        IntMatrix mat((int)dim[k + 1], (int)dim[k]);
        for (int code : level[k]) {
            const auto& src = state_circles[code];
            const auto& bits = state_bits[code];
            std::map<std::vector<int>, int> circ_pos;
            for (int i = 0; i < (int)src.size(); ++i) circ_pos[src[i]] = i;
            int ncirc = (int)src.size();
            std::vector<int> ass(ncirc, 0);
            long long total = ipow(m, ncirc);
            for (long long t = 0; t < total; ++t) {
                long long col = state_offset[k].at(code) + t;
                for (int v = 0; v < nc; ++v) {
                    if (bits[v] == 1) continue;
                    int tcode = code | (1 << (nc - 1 - v));
                    const auto& tgt = state_circles[tcode];
                    long long sgn = 1;
                    for (int j = 0; j < v; ++j)
                        if (bits[j]) sgn = -sgn;
                    std::set<std::vector<int>> srcset(src.begin(), src.end());
                    std::set<std::vector<int>> tgtset(tgt.begin(), tgt.end());
                    std::vector<std::vector<int>> ch_src, ch_tgt;
                    for (const auto& c : src)
                        if (!tgtset.count(c)) ch_src.push_back(c);
                    for (const auto& c : tgt)
                        if (!srcset.count(c)) ch_tgt.push_back(c);
                    auto emit = [&](const std::vector<int>& newass) {
                        long long row = state_offset[k + 1].at(tcode) +
                                        ass_rank(newass);
                        mat.at((int)row, (int)col) += sgn;
                    };
                    if (ch_src.size() == 2 && ch_tgt.size() == 1) {
                        int a1 = ass[circ_pos.at(ch_src[0])];
                        int a2 = ass[circ_pos.at(ch_src[1])];
                        int p = alg.mu[a1][a2];
                        if (p < 0) continue;
                        std::vector<int> newass;
                        for (const auto& c : tgt)
                            newass.push_back(c == ch_tgt[0]
                                                 ? p
                                                 : ass[circ_pos.at(c)]);
                        emit(newass);
                    } else if (ch_src.size() == 1 && ch_tgt.size() == 2) {
                        int a0 = ass[circ_pos.at(ch_src[0])];
                        for (auto [i, j] : alg.delta[a0]) {
                            std::vector<int> newass;
                            for (const auto& c : tgt) {
                                if (c == ch_tgt[0])
                                    newass.push_back(i);
                                else if (c == ch_tgt[1])
                                    newass.push_back(j);
                                else
                                    newass.push_back(ass[circ_pos.at(c)]);
                            }
                            emit(newass);
                        }
                    } else {
                        throw std::logic_error(
                            "khovanov cube: unexpected circle change");
                    }
                }
                int pos = ncirc - 1;
                while (pos >= 0 && ass[pos] == m - 1) ass[pos--] = 0;
                if (pos >= 0) ++ass[pos];
            }
        }
        // the cube map C_k -> C_{k+1} is the stored boundary at chain
        // degree nc-k
        out.complex.boundary[nc - k] = std::move(mat);
    }
    if (auto bad = out.complex.check_dd_zero())
        throw std::invalid_argument(
            "khovanov cube: the edge maps do not square to zero (the algebra "
            "is not Frobenius): " +
            *bad);
    for (int k = 0; k <= nc; ++k)
        out.by_cube_degree.push_back(homology(out.complex, nc - k));
    return out;
}

CubeHomology khovanov_cube(const LinkDiagram& d, int m, bool one_is_ab) {
    return khovanov_cube(d, frobenius_algebra(m), one_is_ab);
}

}  // namespace dh

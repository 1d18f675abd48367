#include "dh/distributive.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dh {

long long tuple_rank(const std::vector<int>& t, int n) {
    long long r = 0;
    for (int x : t) r = r * n + x;
    return r;
}

std::vector<int> tuple_unrank(long long r, int len, int n) {
    std::vector<int> t(len);
    for (int k = len - 1; k >= 0; --k) {
        t[k] = (int)(r % n);
        r /= n;
    }
    return t;
}

std::string tuple_label(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<std::string> tuple_basis(int len, int n) {
    std::vector<std::string> out;
    out.reserve(ipow(n, len));
    for (long long r = 0; r < ipow(n, len); ++r)
        out.push_back(tuple_label(tuple_unrank(r, len, n)));
    return out;
}

// one-term face: d_i acts by *x_i on everything left of i, then deletes i
std::vector<int> one_term_face(const FiniteMagma& m, const std::vector<int>& t,
                               int i) {
    std::vector<int> out;
    out.reserve(t.size() - 1);
    for (int k = 0; k < (int)t.size(); ++k) {
        if (k == i) continue;
        out.push_back(k < i ? m.op(t[k], t[i]) : t[k]);
    }
    return out;
}

}  // namespace

FaceSystem one_term_face_system(const FiniteMagma& shelf, int max_degree,
                                bool with_degeneracies) {
    const int n = shelf.size;
    FaceSystem f;
    f.lo = 0;
    f.hi = max_degree;
    for (int d = 0; d <= max_degree; ++d) f.basis[d] = tuple_basis(d + 1, n);
    f.num_faces = [](int deg) { return deg + 1; };
    FiniteMagma m = shelf;
    f.face = [m, n](int deg, int i, int gen) -> Chain {
        auto t = tuple_unrank(gen, deg + 1, n);
        return {{(int)tuple_rank(one_term_face(m, t, i), n), 1}};
    };
    if (with_degeneracies) {
        f.num_degeneracies = [](int deg) { return deg + 1; };
        f.degeneracy = [n](int deg, int i, int gen) {
            auto t = tuple_unrank(gen, deg + 1, n);
            t.insert(t.begin() + i, t[i]);
            return (int)tuple_rank(t, n);
        };
    }
    return f;
}

ChainComplex one_term_complex(const FiniteMagma& shelf, int max_degree) {
    if (auto w = shelf_witness(shelf))
        throw std::invalid_argument(
            "one_term_complex: not a shelf, witness (" +
            std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
            std::to_string((*w)[2]) + ")");
    return assemble(one_term_face_system(shelf, max_degree + 1, false));
}

ChainComplex multi_term_complex(const MagmaSet& ops,
                                const std::vector<long long>& coeffs,
                                int max_degree) {
    if (ops.ops.empty() || ops.ops.size() != coeffs.size())
        throw std::invalid_argument("multi_term_complex: ops/coeffs mismatch");
    for (size_t a = 0; a < ops.ops.size(); ++a)
        for (size_t b = a; b < ops.ops.size(); ++b)
            if (!is_weakly_distributive_pair(ops.ops[a], ops.ops[b]))
                throw std::invalid_argument(
                    "multi_term_complex: ops " + std::to_string(a) + "," +
                    std::to_string(b) + " are not weakly distributive");
    const int n = ops.carrier_size;
    ChainComplex c;
    c.lo = 0;
    c.hi = max_degree + 1;
    for (int d = 0; d <= c.hi; ++d) c.basis[d] = tuple_basis(d + 1, n);
    for (int d = 1; d <= c.hi; ++d) {
        IntMatrix m((int)ipow(n, d), (int)ipow(n, d + 1));
        for (long long g = 0; g < m.cols; ++g) {
            auto t = tuple_unrank(g, d + 1, n);
            for (int i = 0; i <= d; ++i) {
                long long sign = (i % 2 == 0) ? 1 : -1;
                for (size_t j = 0; j < ops.ops.size(); ++j) {
                    long long h = tuple_rank(one_term_face(ops.ops[j], t, i), n);
                    m.at((int)h, (int)g) += sign * coeffs[j];
                }
            }
        }
        c.boundary[d] = std::move(m);
    }
    if (auto w = c.check_dd_zero())
        throw std::runtime_error("multi_term_complex: " + *w);
    return c;
}

namespace {

bool has_adjacent_repeat(const std::vector<int>& t) {
    for (size_t k = 0; k + 1 < t.size(); ++k)
        if (t[k] == t[k + 1]) return true;
    return false;
}

}  // namespace

RackComplexes rack_quandle_complexes(const FiniteMagma& q, int max_degree) {
    if (auto w = shelf_witness(q))
        throw std::invalid_argument("rack_quandle_complexes: not a shelf");
    const int n = q.size;
    RackComplexes out;
    ChainComplex& rack = out.rack;
    rack.lo = 0;
    rack.hi = max_degree + 1;
    for (int d = 0; d <= rack.hi; ++d) rack.basis[d] = tuple_basis(d, n);
    for (int d = 1; d <= rack.hi; ++d) {
        IntMatrix m((int)ipow(n, d - 1), (int)ipow(n, d));
        for (long long g = 0; g < m.cols; ++g) {
            auto t = tuple_unrank(g, d, n);
            for (int i = 1; i < d; ++i) {
                long long sign = (i % 2 == 0) ? 1 : -1;
                // d^{(*)} acts, d^{(*0)} just deletes; the i=0 terms cancel
                std::vector<int> act, del;
                for (int k = 0; k < d; ++k) {
                    if (k == i) continue;
                    act.push_back(k < i ? q.op(t[k], t[i]) : t[k]);
                    del.push_back(t[k]);
                }
                m.at((int)tuple_rank(act, n), (int)g) += sign;
                m.at((int)tuple_rank(del, n), (int)g) -= sign;
            }
        }
        rack.boundary[d] = std::move(m);
    }
    if (auto w = rack.check_dd_zero())
        throw std::runtime_error("rack complex: " + *w);

    // degenerate subcomplex / quandle quotient need idempotency to split off
    bool spindle = true;
    for (int a = 0; a < n; ++a)
        if (q.op(a, a) != a) spindle = false;
    if (!spindle) return out;

    std::map<int, std::vector<int>> deg_idx, nor_idx;  // per degree, basis picks
    for (int d = 0; d <= rack.hi; ++d) {
        for (long long g = 0; g < ipow(n, d); ++g) {
            if (has_adjacent_repeat(tuple_unrank(g, d, n)))
                deg_idx[d].push_back((int)g);
            else
                nor_idx[d].push_back((int)g);
        }
    }
    auto restrict = [&](const IntMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
        IntMatrix out((int)rows.size(), (int)cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                out.at((int)i, (int)j) = m.at(rows[i], cols[j]);
        return out;
    };

    for (auto [cplx, idx] :
         {std::pair{&out.degenerate, &deg_idx}, {&out.quandle, &nor_idx}}) {
        cplx->lo = 0;
        cplx->hi = rack.hi;
        for (int d = 0; d <= rack.hi; ++d) {
            std::vector<std::string> labels;
            for (int g : (*idx)[d])
                labels.push_back(tuple_label(tuple_unrank(g, d, n)));
            cplx->basis[d] = std::move(labels);
            if (d >= 1)
                cplx->boundary[d] =
                    restrict(rack.boundary.at(d), (*idx)[d - 1], (*idx)[d]);
        }
    }
    // the degenerate part must be closed under the boundary (spindle case)
    for (int d = 1; d <= rack.hi; ++d) {
        const IntMatrix& m = rack.boundary.at(d);
        for (int g : deg_idx[d])
            for (int h : nor_idx[d - 1])
                if (m.at(h, g) != 0)
                    throw std::runtime_error(
                        "degenerate subcomplex not closed at degree " +
                        std::to_string(d));
    }
    if (auto w = out.degenerate.check_dd_zero())
        throw std::runtime_error("degenerate complex: " + *w);
    if (auto w = out.quandle.check_dd_zero())
        throw std::runtime_error("quandle complex: " + *w);
    return out;
}

bool splitting_holds(const RackComplexes& rc, int degree) {
    if (rc.degenerate.hi < 0) return false;
    HomologyGroup r = homology(rc.rack, degree);
    HomologyGroup d = homology(rc.degenerate, degree);
    HomologyGroup q = homology(rc.quandle, degree);
    if (r.free_rank != d.free_rank + q.free_rank) return false;
    std::vector<Int> lhs = r.torsion, rhs = d.torsion;
    rhs.insert(rhs.end(), q.torsion.begin(), q.torsion.end());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

bool xset_axiom_holds(const FiniteMagma& shelf,
                      const std::vector<std::vector<int>>& xset,
                      std::string* witness) {
    const int n = shelf.size;
    const int ny = (int)xset.size();
    for (int y = 0; y < ny; ++y) {
        if ((int)xset[y].size() != n) {
            if (witness) *witness = "action table row " + std::to_string(y);
            return false;
        }
        for (int v : xset[y])
            if (v < 0 || v >= ny) {
                if (witness) *witness = "action entry out of range";
                return false;
            }
    }
    for (int y = 0; y < ny; ++y)
        for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
                if (xset[xset[y][x1]][x2] !=
                    xset[xset[y][x2]][shelf.op(x1, x2)]) {
                    if (witness)
                        *witness = "(" + std::to_string(y) + "," +
                                   std::to_string(x1) + "," +
                                   std::to_string(x2) + ")";
                    return false;
                }
    return true;
}

ChainComplex shelf_set_complex(const FiniteMagma& shelf,
                               const std::vector<std::vector<int>>& xset,
                               int max_degree) {
    std::string w;
    if (!xset_axiom_holds(shelf, xset, &w))
        throw std::invalid_argument("shelf_set_complex: axiom fails at " + w);
    const int n = shelf.size;
    const int ny = (int)xset.size();
    ChainComplex c;
    c.lo = 0;
    c.hi = max_degree + 1;
    for (int d = 0; d <= c.hi; ++d) {
        std::vector<std::string> labels;
        for (int y = 0; y < ny; ++y)
            for (long long g = 0; g < ipow(n, d + 1); ++g)
                labels.push_back("[" + std::to_string(y) + "]" +
                                 tuple_label(tuple_unrank(g, d + 1, n)));
        c.basis[d] = std::move(labels);
    }
    for (int d = 1; d <= c.hi; ++d) {
        long long lower = ipow(n, d), upper = ipow(n, d + 1);
        IntMatrix m((int)(ny * lower), (int)(ny * upper));
        for (int y = 0; y < ny; ++y)
            for (long long g = 0; g < upper; ++g) {
                auto t = tuple_unrank(g, d + 1, n);
                for (int i = 0; i <= d; ++i) {
                    long long sign = (i % 2 == 0) ? 1 : -1;
                    int hy = xset[y][t[i]];
                    long long hg = tuple_rank(one_term_face(shelf, t, i), n);
                    m.at((int)(hy * lower + hg), (int)(y * upper + g)) += sign;
                }
            }
        c.boundary[d] = std::move(m);
    }
    if (auto w2 = c.check_dd_zero())
        throw std::runtime_error("shelf_set_complex: " + *w2);
    return c;
}

// ---- structural maps (degeneracy/projection identities, t-maps, duality,
// filtrations, u-hat, split map) on the one-term system of q ----

namespace {

using Tup = std::vector<int>;
using FChain = std::map<Tup, long long>;

void acc(FChain& c, const Tup& t, long long k) {
    auto it = c.emplace(t, 0).first;
    it->second += k;
    if (it->second == 0) c.erase(it);
}

FChain boundary_of(const FiniteMagma& m, const FChain& c) {
    FChain out;
    for (const auto& [t, k] : c)
        for (int i = 0; i < (int)t.size(); ++i)
            acc(out, one_term_face(m, t, i), (i % 2 == 0 ? 1 : -1) * k);
    return out;
}

Tup degen(const Tup& t, int i) {
    Tup s = t;
    s.insert(s.begin() + i, t[i]);
    return s;
}

FChain map_chain(const FChain& c, const std::function<Tup(const Tup&)>& f) {
    FChain out;
    for (const auto& [t, k] : c) acc(out, f(t), k);
    return out;
}

// t_i = d_i s_i - d_{i+1} s_i as a map on single tuples -> chains
FChain tmap(const FiniteMagma& m, const Tup& t, int i) {
    Tup s = degen(t, i);
    FChain out;
    acc(out, one_term_face(m, s, i), 1);
    acc(out, one_term_face(m, s, i + 1), -1);
    return out;
}

FChain tmap_chain(const FiniteMagma& m, const FChain& c, int i) {
    FChain out;
    for (const auto& [t, k] : c)
        for (const auto& [u, l] : tmap(m, t, i)) acc(out, u, k * l);
    return out;
}

// positive braiding (a,b) -> (b, a*b) at absolute positions (u, u+1)
Tup braid_at(const FiniteMagma& m, const Tup& t, int u) {
    Tup s = t;
    int a = s[u], b = s[u + 1];
    s[u] = b;
    s[u + 1] = m.op(a, b);
    return s;
}

// u-hat_i on s-hat_p images at degree n: apply sigma_j for j = i..p in order,
// sigma_j acting at absolute positions (n-1-j, n-j)
Tup uhat(const FiniteMagma& m, Tup t, int i, int p) {
    int n = (int)t.size() - 1;
    for (int j = i; j <= p; ++j) t = braid_at(m, t, n - 1 - j);
    return t;
}

Tup dhat(const FiniteMagma& m, const Tup& t, int i) {
    return one_term_face(m, t, (int)t.size() - 1 - i);
}

Tup shat(const Tup& t, int i) {
    return degen(t, (int)t.size() - 1 - i);
}

void all_tuples(int len, int n, const std::function<void(const Tup&)>& f) {
    Tup t(len, 0);
    while (true) {
        f(t);
        int k = len - 1;
        while (k >= 0 && t[k] == n - 1) t[k--] = 0;
        if (k < 0) return;
        ++t[k];
    }
}

}  // namespace

StructuralReport structural_maps_report(const FiniteMagma& q, int max_degree) {
    if (auto w = shelf_witness(q))
        throw std::invalid_argument("structural_maps_report: not a shelf");
    const int n = q.size;
    StructuralReport r;
    auto fail = [&](const std::string& msg) {
        if (r.failures.size() < 64) r.failures.push_back(msg);
    };

    // (a) degeneracy identity: ds0 + s0d = s0 d0, on C_deg for
    // deg = 1..max_degree-1
    r.degeneracy_identity = true;
    for (int deg = 1; deg + 1 <= max_degree; ++deg)
        all_tuples(deg + 1, n, [&](const Tup& t) {
            FChain lhs;
            FChain s0t;
            acc(s0t, degen(t, 0), 1);
            for (const auto& [u, k] : boundary_of(q, s0t)) acc(lhs, u, k);
            FChain dt;
            acc(dt, t, 1);
            for (const auto& [u, k] :
                 map_chain(boundary_of(q, dt),
                           [&](const Tup& v) { return degen(v, 0); }))
                acc(lhs, u, k);
            FChain rhs;
            acc(rhs, degen(one_term_face(q, t, 0), 0), 1);
            if (lhs != rhs) {
                r.degeneracy_identity = false;
                fail("degeneracy identity at " + tuple_label(t));
            }
        });

    // (b) projection identity: pd + dp = p d0, p = delete first, on C_deg,
    // deg >= 2
    r.projection_identity = true;
    auto pdel = [](const Tup& t) { return Tup(t.begin() + 1, t.end()); };
    for (int deg = 2; deg <= max_degree; ++deg)
        all_tuples(deg + 1, n, [&](const Tup& t) {
            FChain lhs;
            FChain dt;
            acc(dt, t, 1);
            for (const auto& [u, k] : map_chain(boundary_of(q, dt), pdel))
                acc(lhs, u, k);
            FChain pt;
            acc(pt, pdel(t), 1);
            for (const auto& [u, k] : boundary_of(q, pt)) acc(lhs, u, k);
            FChain rhs;
            acc(rhs, pdel(one_term_face(q, t, 0)), 1);
            if (lhs != rhs) {
                r.projection_identity = false;
                fail("projection identity at " + tuple_label(t));
            }
        });

    // (c) t-map relations
    r.tmaps = true;
    for (int deg = 1; deg + 1 <= max_degree; ++deg)
        all_tuples(deg + 1, n, [&](const Tup& t) {
            for (int j = 0; j <= deg; ++j) {
                FChain tj = tmap(q, t, j);
                for (int i = 0; i <= deg; ++i) {
                    FChain lhs;
                    for (const auto& [u, k] : tj)
                        acc(lhs, one_term_face(q, u, i), k);
                    FChain rhs;
                    if (i == j) {
                        // d_i t_i = 0
                    } else if (i < j) {
                        FChain di;
                        acc(di, one_term_face(q, t, i), 1);
                        rhs = tmap_chain(q, di, j - 1);
                    } else {
                        FChain di;
                        acc(di, one_term_face(q, t, i), 1);
                        rhs = tmap_chain(q, di, j);
                    }
                    if (lhs != rhs) {
                        r.tmaps = false;
                        fail("d" + std::to_string(i) + " t" +
                             std::to_string(j) + " at " + tuple_label(t));
                    }
                }
                for (int i = 0; i < j; ++i) {
                    FChain lhs = tmap_chain(q, tj, i);
                    FChain rhs = tmap_chain(q, tmap(q, t, i), j);
                    if (lhs != rhs) {
                        r.tmaps = false;
                        fail("t" + std::to_string(i) + " t" +
                             std::to_string(j) + " at " + tuple_label(t));
                    }
                }
            }
        });

    // (d) duality: the hat-dual system has the same axiom class
    {
        FaceSystem orig = one_term_face_system(q, max_degree, true);
        FaceSystem dual = orig;
        dual.face = [orig](int deg, int i, int gen) {
            return orig.face(deg, deg - i, gen);
        };
        dual.degeneracy = [orig](int deg, int i, int gen) {
            return orig.degeneracy(deg, deg - i, gen);
        };
        SimplicialReport a = verify_simplicial_axioms(orig);
        SimplicialReport b = verify_simplicial_axioms(dual);
        r.duality = a.presimplicial == b.presimplicial &&
                    a.degen_commute == b.degen_commute && a.mixed == b.mixed &&
                    a.weak_unit == b.weak_unit && a.unit == b.unit;
        if (!r.duality) fail("dual system axiom class differs");
    }

    // (e) degenerate filtrations, both directions
    r.filtrations = true;
    for (int deg = 2; deg <= max_degree; ++deg)
        all_tuples(deg + 1, n, [&](const Tup& t) {
            int lo_rep = -1, hi_rep = -1;
            for (int k = 0; k + 1 <= deg; ++k)
                if (t[k] == t[k + 1]) {
                    if (lo_rep < 0) lo_rep = k;
                    hi_rep = k;
                }
            if (lo_rep < 0) return;
            FChain dt;
            acc(dt, t, 1);
            for (const auto& [u, k] : boundary_of(q, dt)) {
                int ulo = -1, uhi = -1;
                for (int kk = 0; kk + 1 <= deg - 1; ++kk)
                    if (u[kk] == u[kk + 1]) {
                        if (ulo < 0) ulo = kk;
                        uhi = kk;
                    }
                // left filtration F^p with p = lo_rep; right with the mirror
                if (ulo < 0 || ulo > lo_rep) {
                    r.filtrations = false;
                    fail("left filtration leak at " + tuple_label(t));
                }
                int p_right = (deg - 1) - hi_rep;
                if (uhi < 0 || ((deg - 2) - uhi) > p_right) {
                    r.filtrations = false;
                    fail("right filtration leak at " + tuple_label(t));
                }
            }
        });

    // (f) u-hat integration identities (1), (2), (2') on s-hat_p images
    r.uhat = true;
    for (int deg = 2; deg <= max_degree; ++deg) {
        int m = deg;  // y = shat_p(z) with z of length m, y of length m+1
        for (int p = 1; p < m; ++p)
            all_tuples(m, n, [&](const Tup& z) {
                Tup y = shat(z, p);
                for (int i = 0; i < p; ++i) {
                    Tup uy = uhat(q, y, i, p);
                    if (dhat(q, y, i) != dhat(q, uy, p + 1)) {
                        r.uhat = false;
                        fail("uhat (1) at " + tuple_label(y));
                    }
                }
                for (int i2 = 1; i2 < p; ++i2)
                    for (int i1 = 0; i1 < i2; ++i1) {
                        Tup u1 = uhat(q, y, i1, p);
                        Tup u21 = uhat(q, u1, i2 - 1, p - 1);
                        if (dhat(q, u21, p + 1) !=
                            dhat(q, uhat(q, y, i2, p), i1)) {
                            r.uhat = false;
                            fail("uhat (2) at " + tuple_label(y));
                        }
                        if (dhat(q, u21, p) != dhat(q, u1, i2 - 1)) {
                            r.uhat = false;
                            fail("uhat (2') at " + tuple_label(y));
                        }
                    }
            });
    }

    // (g) split map for affine (Alexander-type) tables: the difference map D
    // matches degenerate tuples with zero-containing ones and the partial-sum
    // map S is a two-sided inverse
    int affine_t = -1;
    for (int tt = 0; tt < n && affine_t < 0; ++tt) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b)
                if (q.op(a, b) != ((tt * a + (1 - tt) * b) % n + n) % n) {
                    ok = false;
                    break;
                }
        if (ok) affine_t = tt;
    }
    r.split_map_applicable = affine_t >= 0;
    if (r.split_map_applicable) {
        r.split_map = true;
        auto D = [&](const Tup& t) {
            Tup out(t.size());
            out[0] = t[0];
            for (size_t k = 1; k < t.size(); ++k)
                out[k] = ((t[k] - t[k - 1]) % n + n) % n;
            return out;
        };
        auto S = [&](const Tup& t) {
            Tup out(t.size());
            int run = 0;
            for (size_t k = 0; k < t.size(); ++k) {
                run = (run + t[k]) % n;
                out[k] = run;
            }
            return out;
        };
        for (int deg = 1; deg <= max_degree; ++deg)
            all_tuples(deg + 1, n, [&](const Tup& t) {
                Tup d = D(t);
                if (S(d) != t || D(S(t)) != t) {
                    r.split_map = false;
                    fail("split map inverse fails at " + tuple_label(t));
                }
                bool dg = has_adjacent_repeat(t);
                bool z = false;
                for (size_t k = 1; k < d.size(); ++k)
                    if (d[k] == 0) z = true;
                if (dg != z) {
                    r.split_map = false;
                    fail("split map degeneracy mismatch at " + tuple_label(t));
                }
            });
    }
    return r;
}

}  // namespace dh

#include "dh/chain.hpp"

#include <stdexcept>

namespace dh {

namespace {

std::map<int, long long> normalize(const Chain& c) {
    std::map<int, long long> out;
    for (auto [g, k] : c) {
        out[g] += k;
        if (out[g] == 0) out.erase(g);
    }
    return out;
}

// d_i applied to a formal combination
std::map<int, long long> face_of_chain(const FaceSystem& f, int deg, int i,
                                       const std::map<int, long long>& c) {
    std::map<int, long long> out;
    for (auto [g, k] : c)
        for (auto [h, l] : f.face(deg, i, g)) {
            out[h] += k * l;
            if (out[h] == 0) out.erase(h);
        }
    return out;
}

}  // namespace

std::optional<std::string> ChainComplex::check_dd_zero() const {
    for (int n = lo + 2; n <= hi; ++n) {
        auto itn = boundary.find(n);
        auto itm = boundary.find(n - 1);
        if (itn == boundary.end() || itm == boundary.end()) continue;
        IntMatrix prod = itm->second.mul(itn->second);
        for (int j = 0; j < prod.cols; ++j)
            for (int i = 0; i < prod.rows; ++i)
                if (prod.at(i, j) != 0) {
                    const auto& labels = basis.at(n);
                    return "dd != 0 at degree " + std::to_string(n) +
                           " on generator " + labels[j];
                }
    }
    return std::nullopt;
}

HomologyGroup homology(const ChainComplex& c, int n) {
    if (n < c.lo || n > c.hi)
        throw std::out_of_range("homology: degree out of range");
    long long dn = c.dim(n);
    long long rank_dn = 0;
    if (auto it = c.boundary.find(n); it != c.boundary.end())
        rank_dn = matrix_rank(it->second);
    std::vector<Int> inv;
    if (auto it = c.boundary.find(n + 1); it != c.boundary.end())
        inv = smith_invariants(it->second);
    HomologyGroup h;
    h.free_rank = dn - rank_dn - (long long)inv.size();
    for (Int& d : inv)
        if (d > 1) h.torsion.push_back(std::move(d));
    return h;
}

Chain apply_boundary(const FaceSystem& f, int deg, int gen) {
    Chain out;
    int nf = f.num_faces(deg);
    for (int i = 0; i < nf; ++i) {
        long long sign = (i % 2 == 0) ? 1 : -1;
        for (auto [h, l] : f.face(deg, i, gen)) out.emplace_back(h, sign * l);
    }
    return out;
}

SimplicialReport verify_simplicial_axioms(const FaceSystem& f) {
    SimplicialReport r;
    r.presimplicial = true;
    auto note = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (r.failures.size() < 32) r.failures.push_back(msg);
    };

    for (int n = f.lo + 2; n <= f.hi; ++n) {
        int nf = f.num_faces(n);
        for (int g = 0; g < (int)f.dim(n); ++g)
            for (int j = 1; j < nf; ++j)
                for (int i = 0; i < j; ++i) {
                    auto lhs = face_of_chain(f, n - 1, i,
                                             normalize(f.face(n, j, g)));
                    auto rhs = face_of_chain(f, n - 1, j - 1,
                                             normalize(f.face(n, i, g)));
                    if (lhs != rhs)
                        note(r.presimplicial,
                             "(1) d" + std::to_string(i) + "d" +
                                 std::to_string(j) + " at deg " +
                                 std::to_string(n) + " gen " +
                                 f.basis.at(n)[g]);
                }
    }

    if (!f.num_degeneracies) return r;
    r.degen_commute = r.mixed = r.weak_unit = r.unit = true;

    for (int n = f.lo; n <= f.hi - 2; ++n) {
        int ns = f.num_degeneracies(n);
        for (int g = 0; g < (int)f.dim(n); ++g)
            for (int j = 0; j < ns; ++j)
                for (int i = 0; i <= j; ++i) {
                    // (2) s_i s_j = s_{j+1} s_i (i <= j)
                    int lhs = f.degeneracy(n + 1, i, f.degeneracy(n, j, g));
                    int rhs = f.degeneracy(n + 1, j + 1, f.degeneracy(n, i, g));
                    if (lhs != rhs)
                        note(r.degen_commute,
                             "(2) s" + std::to_string(i) + "s" +
                                 std::to_string(j) + " at deg " +
                                 std::to_string(n) + " gen " +
                                 f.basis.at(n)[g]);
                }
    }

    for (int n = f.lo; n <= f.hi - 1; ++n) {
        int ns = f.num_degeneracies(n);
        int nf_up = f.num_faces(n + 1);
        for (int g = 0; g < (int)f.dim(n); ++g)
            for (int j = 0; j < ns; ++j) {
                int sg = f.degeneracy(n, j, g);
                for (int i = 0; i < nf_up; ++i) {
                    auto ds = normalize(f.face(n + 1, i, sg));
                    if (i == j || i == j + 1) {
                        // (4') both equal; (4) both equal Id
                        if (i == j) {
                            auto ds2 = normalize(f.face(n + 1, j + 1, sg));
                            if (ds != ds2)
                                note(r.weak_unit,
                                     "(4') d" + std::to_string(j) + "s" +
                                         std::to_string(j) + " at deg " +
                                         std::to_string(n) + " gen " +
                                         f.basis.at(n)[g]);
                            std::map<int, long long> id{{g, 1}};
                            if (ds != id)
                                note(r.unit, "(4) d" + std::to_string(j) +
                                                 "s" + std::to_string(j) +
                                                 " at deg " +
                                                 std::to_string(n) + " gen " +
                                                 f.basis.at(n)[g]);
                        }
                        continue;
                    }
                    if (n == f.lo) continue;  // d_i on degree lo is undefined
                    std::map<int, long long> expect;
                    if (i < j) {
                        // (3) d_i s_j = s_{j-1} d_i
                        for (auto [h, k] : normalize(f.face(n, i, g)))
                            expect[f.degeneracy(n - 1, j - 1, h)] += k;
                    } else {
                        // (3) d_i s_j = s_j d_{i-1}
                        for (auto [h, k] : normalize(f.face(n, i - 1, g)))
                            expect[f.degeneracy(n - 1, j, h)] += k;
                    }
                    if (ds != expect)
                        note(r.mixed, "(3) d" + std::to_string(i) + "s" +
                                          std::to_string(j) + " at deg " +
                                          std::to_string(n) + " gen " +
                                          f.basis.at(n)[g]);
                }
            }
    }
    return r;
}

ChainComplex assemble(const FaceSystem& f, bool skip_presimplicial_check) {
    if (!skip_presimplicial_check) {
        auto r = verify_simplicial_axioms(f);
        if (!r.presimplicial)
            throw std::runtime_error("assemble: presimplicial identity fails: " +
                                     (r.failures.empty() ? std::string("?")
                                                         : r.failures.front()));
    }
    ChainComplex c;
    c.lo = f.lo;
    c.hi = f.hi;
    c.basis = f.basis;
    for (int n = f.lo + 1; n <= f.hi; ++n) {
        IntMatrix m((int)f.dim(n - 1), (int)f.dim(n));
        for (int g = 0; g < m.cols; ++g)
            for (auto [h, k] : apply_boundary(f, n, g)) m.at(h, g) += k;
        c.boundary[n] = std::move(m);
    }
    if (auto w = c.check_dd_zero())
        throw std::runtime_error("assemble: " + *w);
    return c;
}

ChainComplex augmented(const ChainComplex& c) {
    if (c.lo != 0) throw std::invalid_argument("augmented: complex must start at 0");
    ChainComplex out = c;
    out.lo = -1;
    out.basis[-1] = {"*"};
    IntMatrix aug(1, (int)c.dim(0));
    for (int j = 0; j < aug.cols; ++j) aug.at(0, j) = 1;
    out.boundary[0] = std::move(aug);
    if (auto w = out.check_dd_zero())
        throw std::runtime_error("augmented: " + *w);
    return out;
}

}  // namespace dh

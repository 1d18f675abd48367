#include "dh/leibniz.hpp"
#include "dh/distributive.hpp"

#include <stdexcept>

namespace dh {

namespace {

using Vec = std::vector<long long>;

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// bracket of coefficient vectors via the structure constants
Vec br(const LeibnizAlgebraData& l, const Vec& u, const Vec& v) {
    Vec out(l.dim, 0);
    for (int i = 0; i < l.dim; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < l.dim; ++j) {
            if (v[j] == 0) continue;
            for (int k = 0; k < l.dim; ++k)
                out[k] += u[i] * v[j] * l.bracket[i][j][k];
        }
    }
    return out;
}

// [m, x] through the module action, m a module vector, x an algebra vector
Vec act(const LeibnizAlgebraData& l, const Vec& m, const Vec& x) {
    Vec out(l.dim_m, 0);
    if (!l.has_action()) return out;
    for (int a = 0; a < l.dim_m; ++a) {
        if (m[a] == 0) continue;
        for (int i = 0; i < l.dim; ++i) {
            if (x[i] == 0) continue;
            for (int k = 0; k < l.dim_m; ++k)
                out[k] += m[a] * x[i] * l.action[a][i][k];
        }
    }
    return out;
}

Vec basis(int dim, int i) {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void validate_shape(const LeibnizAlgebraData& l) {
    if (l.dim < 1 || l.dim_m < 1)
        throw std::invalid_argument("leibniz: dimensions must be >= 1");
    if ((int)l.bracket.size() != l.dim)
        throw std::invalid_argument("leibniz: bracket table shape");
    for (const auto& row : l.bracket) {
        if ((int)row.size() != l.dim)
            throw std::invalid_argument("leibniz: bracket table shape");
        for (const auto& v : row)
            if ((int)v.size() != l.dim)
                throw std::invalid_argument("leibniz: bracket vector length");
    }
    if (l.has_action()) {
        if ((int)l.action.size() != l.dim_m)
            throw std::invalid_argument("leibniz: action table shape");
        for (const auto& row : l.action) {
            if ((int)row.size() != l.dim)
                throw std::invalid_argument("leibniz: action table shape");
            for (const auto& v : row)
                if ((int)v.size() != l.dim_m)
                    throw std::invalid_argument("leibniz: action vector length");
        }
    }
}

}  // namespace

LeibnizReport check_leibniz(const LeibnizAlgebraData& l) {
    validate_shape(l);
    LeibnizReport r;
    r.bracket_ok = r.module_ok = r.squares_vanish = true;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (r.failures.size() < 32) r.failures.push_back(msg);
    };
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < l.dim; ++j)
            for (int k = 0; k < l.dim; ++k) {
                Vec lhs = br(l, basis(l.dim, i), l.bracket[j][k]);
                Vec r1 = br(l, l.bracket[i][j], basis(l.dim, k));
                Vec r2 = br(l, l.bracket[i][k], basis(l.dim, j));
                Vec defect(l.dim);
                bool bad = false;
                for (int v = 0; v < l.dim; ++v) {
                    defect[v] = lhs[v] - r1[v] + r2[v];
                    if (defect[v] != 0) bad = true;
                }
                if (bad)
                    fail(r.bracket_ok,
                         "bracket (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) +
                             ") defect " + vec_str(defect));
            }
    for (int i = 0; i < l.dim; ++i)
        for (long long v : l.bracket[i][i])
            if (v != 0) r.squares_vanish = false;
    if (l.has_action())
        for (int a = 0; a < l.dim_m; ++a)
            for (int j = 0; j < l.dim; ++j)
                for (int k = 0; k < l.dim; ++k) {
                    Vec lhs = act(l, basis(l.dim_m, a), l.bracket[j][k]);
                    Vec r1 = act(l, l.action[a][j], basis(l.dim, k));
                    Vec r2 = act(l, l.action[a][k], basis(l.dim, j));
                    Vec defect(l.dim_m);
                    bool bad = false;
                    for (int v = 0; v < l.dim_m; ++v) {
                        defect[v] = lhs[v] - r1[v] + r2[v];
                        if (defect[v] != 0) bad = true;
                    }
                    if (bad)
                        fail(r.module_ok,
                             "module (" + std::to_string(a) + "," +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 ") defect " + vec_str(defect));
                }
    return r;
}

FaceSystem leibniz_face_system(const LeibnizAlgebraData& l, int max_degree,
                               bool with_degeneracies) {
    validate_shape(l);
    const int d = l.dim, dm = l.dim_m;
    FaceSystem f;
    f.lo = 0;
    f.hi = max_degree;
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<std::string> labels;
        for (int m = 0; m < dm; ++m)
            for (long long t = 0; t < ipow(d, n + 1); ++t)
                labels.push_back("m" + std::to_string(m) + "|" +
                                 tuple_label(tuple_unrank(t, n + 1, d)));
        f.basis[n] = std::move(labels);
    }
    f.num_faces = [](int deg) { return deg + 1; };
    LeibnizAlgebraData lg = l;
    f.face = [lg, d, dm](int deg, int i, int gen) -> Chain {
        int len = deg + 1;
        int m = (int)(gen / ipow(d, len));
        auto xs = tuple_unrank(gen % ipow(d, len), len, d);
        Chain out;
        for (int j = -1; j < i; ++j) {
            if (j == -1) {
                if (!lg.has_action()) continue;
                const auto& vec = lg.action[m][xs[i]];
                for (int k = 0; k < dm; ++k) {
                    if (vec[k] == 0) continue;
                    auto img = xs;
                    img.erase(img.begin() + i);
                    out.emplace_back(
                        (int)(k * ipow(d, len - 1) + tuple_rank(img, d)),
                        vec[k]);
                }
            } else {
                const auto& vec = lg.bracket[xs[j]][xs[i]];
                for (int k = 0; k < d; ++k) {
                    if (vec[k] == 0) continue;
                    auto img = xs;
                    img[j] = k;
                    img.erase(img.begin() + i);
                    out.emplace_back(
                        (int)(m * ipow(d, len - 1) + tuple_rank(img, d)),
                        vec[k]);
                }
            }
        }
        return out;
    };
    if (with_degeneracies) {
        f.num_degeneracies = [](int deg) { return deg + 1; };
        f.degeneracy = [d](int deg, int i, int gen) {
            int len = deg + 1;
            int m = (int)(gen / ipow(d, len));
            auto xs = tuple_unrank(gen % ipow(d, len), len, d);
            xs.insert(xs.begin() + i, xs[i]);
            return (int)(m * ipow(d, len + 1) + tuple_rank(xs, d));
        };
    }
    return f;
}

ChainComplex leibniz_complex(const LeibnizAlgebraData& l, int max_degree) {
    LeibnizReport r = check_leibniz(l);
    if (!r.ok())
        throw std::invalid_argument(
            "leibniz_complex: identity fails: " +
            (r.failures.empty() ? std::string("?") : r.failures.front()));
    return assemble(leibniz_face_system(l, max_degree + 1, false));
}

LeibnizAlgebraData abelian_leibniz(int dim) {
    LeibnizAlgebraData l;
    l.dim = dim;
    l.bracket.assign(dim, std::vector<std::vector<long long>>(
                              dim, std::vector<long long>(dim, 0)));
    return l;
}

LeibnizAlgebraData nonlie_leibniz() {
    LeibnizAlgebraData l = abelian_leibniz(2);
    l.bracket[1][1][0] = 1;
    return l;
}

LeibnizAlgebraData sl2_leibniz() {
    // basis e, f, h = 0, 1, 2
    LeibnizAlgebraData l = abelian_leibniz(3);
    l.bracket[0][1][2] = 1;   // [e,f] = h
    l.bracket[1][0][2] = -1;  // [f,e] = -h
    l.bracket[2][0][0] = 2;   // [h,e] = 2e
    l.bracket[0][2][0] = -2;  // [e,h] = -2e
    l.bracket[2][1][1] = -2;  // [h,f] = -2f
    l.bracket[1][2][1] = 2;   // [f,h] = 2f
    return l;
}

}  // namespace dh

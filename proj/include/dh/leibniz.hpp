#pragma once

#include "dh/chain.hpp"

namespace dh {

// A Leibniz (BLL) algebra over Z by structure constants, with an optional
// module: bracket[i][j] is the coefficient vector of [e_i, e_j]; the module
// action[a][x] is the coefficient vector of [m_a, e_x] in the module basis.
// An empty action means the zero action (trivial module of rank dim_m).
struct LeibnizAlgebraData {
    int dim = 0;
    std::vector<std::vector<std::vector<long long>>> bracket;
    int dim_m = 1;
    std::vector<std::vector<std::vector<long long>>> action;

    bool has_action() const { return !action.empty(); }
};

struct LeibnizReport {
    bool bracket_ok = false;  // [x,[y,z]] = [[x,y],z] - [[x,z],y] on basis triples
    bool module_ok = false;   // same identity with x in M (vacuous if no action)
    bool squares_vanish = false;  // [e_i, e_i] = 0 for every basis vector
    std::vector<std::string> failures;

    bool ok() const { return bracket_ok && module_ok; }
};

LeibnizReport check_leibniz(const LeibnizAlgebraData& l);

// C_n = M (x) V^{(x)(n+1)}; d_i = sum_{-1 <= j < i} (bracket [x_j, x_i] in
// slot j, slot i deleted), the j = -1 term acting through the module.
// Degeneracies (when requested) double slot i.
FaceSystem leibniz_face_system(const LeibnizAlgebraData& l, int max_degree,
                               bool with_degeneracies);

// Assembled complex, degrees 0..max_degree+1; refuses invalid data.
ChainComplex leibniz_complex(const LeibnizAlgebraData& l, int max_degree);

// Convenience constructors for fixtures.
LeibnizAlgebraData abelian_leibniz(int dim);
LeibnizAlgebraData nonlie_leibniz();  // dim 2, [e1,e1] = e0, all else 0
LeibnizAlgebraData sl2_leibniz();     // basis e,f,h with the usual brackets

}  // namespace dh

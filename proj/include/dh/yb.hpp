#pragma once

#include "dh/chain.hpp"
#include "dh/magma.hpp"
#include "dh/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dh {

// Set-theoretic Yang-Baxter operator R(x,y) = (R1(x,y), R2(x,y)).
struct SetYBOperator {
    int size = 0;
    std::vector<std::vector<std::pair<int, int>>> map;  // map[x][y]

    std::pair<int, int> at(int x, int y) const { return map[x][y]; }
    bool invertible() const;  // R is a bijection of X^2
    void validate() const;
};

// Linear operator on (Z^n)^{x2} as an n^2 x n^2 integer matrix; entry
// at (row = output pair (c,d), col = input pair (a,b)) is R^{a,b}_{c,d}.
struct LinearYBOperator {
    int dim = 0;
    IntMatrix matrix;
};

struct YbeCheck {
    bool ok = false;
    std::string witness;
};

// (R x Id)(Id x R)(R x Id) = (Id x R)(R x Id)(Id x R), exhaustively on X^3
// for the set case and as exact matrix products for the linear case.
YbeCheck check_ybe(const SetYBOperator& r);
YbeCheck check_ybe(const LinearYBOperator& r);

// R(a,b) = (b, a*b); passes the YBE exactly when m is a shelf and is
// invertible exactly when m is a rack.
SetYBOperator from_shelf(const FiniteMagma& m);

// Permutation-style 0/1 matrix of the set map.
LinearYBOperator linearize(const SetYBOperator& r);

// d_i^l threads x_i leftward through R (keeping second outputs), d_i^r
// threads it rightward (keeping first outputs); returned matrices are the
// signed sums over i at the given degree, mapping X^deg to X^{deg-1}.
struct YbBoundaryParts {
    IntMatrix left, right;  // boundary = left - right
};
YbBoundaryParts yb_boundary_parts(const SetYBOperator& r, int degree);

// Two-term complex with basis X^n in degree n; refuses YBE failures.
ChainComplex yb_complex(const SetYBOperator& r, int max_degree);

}  // namespace dh

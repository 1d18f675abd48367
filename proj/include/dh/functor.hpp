#pragma once

#include "dh/chain.hpp"
#include "dh/knots.hpp"
#include "dh/matrix.hpp"

#include <functional>
#include <vector>

namespace dh {

// Abstract simplicial complex on vertices 0..vertex_count-1; simplices are
// sorted vertex lists, closed downward, all singletons present.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> simplices;  // sorted by (size, lex)

    bool has(const std::vector<int>& s) const;
    void validate() const;  // throws on closure / singleton violations
};

// Downward closure of a family of maximal simplices.
SimplicialComplex make_complex(int vertex_count,
                               const std::vector<std::vector<int>>& maximal);

enum class AscVariant { ordered, normalized, oriented };

// ordered: tuples (v0..vn) whose support spans a simplex, repetitions
// allowed; normalized: the quotient by tuples with an adjacent repetition;
// oriented: one generator per simplex in increasing vertex order.
ChainComplex asc_complex(const SimplicialComplex& k, AscVariant variant,
                         int max_degree);

std::vector<HomologyGroup> asc_homology(const SimplicialComplex& k,
                                        AscVariant variant, int max_degree);

// Span of the tuples with an adjacent repetition inside the ordered complex.
ChainComplex ordered_degenerate_subcomplex(const SimplicialComplex& k,
                                           int max_degree);

// Coefficient functor on the simplex poset: a free rank per simplex and an
// integer matrix per codimension-1 restriction (removing the i-th vertex).
struct SimplexFunctor {
    std::function<int(const std::vector<int>&)> rank;
    std::function<IntMatrix(const std::vector<int>&, int)> restriction;
};

SimplexFunctor constant_functor();  // rank 1, all restrictions [1]
SimplexFunctor zero_functor();

// C_n = (+) over n-simplices of F(s), d = alternating sum of restrictions;
// functoriality is verified on all two-step chains first (throws a witness).
ChainComplex functor_complex(const SimplicialComplex& k,
                             const SimplexFunctor& f, int max_degree);

// A = Z[x]/(x^m) with Delta(x^k) = sum_{i+j=m-1+k} x^i (x) x^j, stored as
// explicit tables so corruptions are expressible.
struct FrobeniusAlgebraData {
    int m = 0;
    std::vector<std::vector<int>> mu;  // exponent of x^i * x^j, or -1 for 0
    std::vector<std::vector<std::pair<int, int>>> delta;  // per x^k
};

FrobeniusAlgebraData frobenius_algebra(int m);  // m >= 2

struct FrobeniusCheck {
    bool frobenius = false;      // Delta mu = (mu x Id)(Id x Delta)
    bool commutative = false;
    bool cocommutative = false;

    bool ok() const { return frobenius && commutative && cocommutative; }
};

FrobeniusCheck check_frobenius(const FrobeniusAlgebraData& a);

// Cube of resolutions: chain degree n stores cube degree (#crossings - n),
// so the stored boundary maps run toward higher cube degree as required.
struct CubeHomology {
    int crossings = 0;
    ChainComplex complex;
    std::vector<HomologyGroup> by_cube_degree;  // indexed by |s|
};

// one_is_ab: s(v)=1 joins (a,b),(c,d) — the flipped flag re-indexes the cube.
CubeHomology khovanov_cube(const LinkDiagram& d,
                           const FrobeniusAlgebraData& alg,
                           bool one_is_ab = true);
CubeHomology khovanov_cube(const LinkDiagram& d, int m, bool one_is_ab = true);

}  // namespace dh

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace dh {

using Int = boost::multiprecision::cpp_int;

// Dense arbitrary-precision integer matrix, row-major. Empty dimensions legal.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    Int& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Int& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static IntMatrix identity(int n);
    IntMatrix mul(const IntMatrix& other) const;
    IntMatrix transposed() const;
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;
};

struct SmithDecomposition {
    std::vector<Int> invariants;  // d1 | d2 | ... | dr, all >= 1
    int rank = 0;
    IntMatrix U, V;  // unimodular, U * M * V = diag(invariants)
};

// Full decomposition with transforms; dense, fine for small matrices.
SmithDecomposition smith_normal_form(const IntMatrix& m);

// Invariant factors only: sparse +-1-pivot elimination first, then a dense
// pass on the residual. Used for the larger boundary matrices.
std::vector<Int> smith_invariants(const IntMatrix& m);

int matrix_rank(const IntMatrix& m);

Int determinant(const IntMatrix& m);  // square matrices; fraction-free Bareiss

}  // namespace dh

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dh/matrix.hpp"

using namespace dh;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (Int& v : m.a) v = d(rng);
    return m;
}

void check_decomposition(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    // U m V must be the diagonal of the invariants
    IntMatrix d = s.U.mul(m).mul(s.V);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j) {
            Int want = (i == j && i < s.rank) ? s.invariants[i] : Int(0);
            CHECK(d.at(i, j) == want);
        }
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (size_t k = 0; k + 1 < s.invariants.size(); ++k) {
        CHECK(s.invariants[k] >= 1);
        CHECK(s.invariants[k + 1] % s.invariants[k] == 0);
    }
    // the invariants-only fast path must agree with the full decomposition
    CHECK(smith_invariants(m) == s.invariants);
}

}  // namespace

TEST_CASE("smith normal form of a fixed matrix") {
    IntMatrix m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithDecomposition s = smith_normal_form(m);
    REQUIRE(s.rank == 3);
    CHECK(s.invariants == std::vector<Int>{2, 2, 156});
    check_decomposition(m);
}

TEST_CASE("smith normal form on seeded random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 12; ++trial) {
        int r = 1 + (int)(rng() % 6), c = 1 + (int)(rng() % 6);
        check_decomposition(random_matrix(rng, r, c, -9, 9));
    }
    // sparser and wider shapes exercise the sparse pivot path
    for (int trial = 0; trial < 6; ++trial) {
        IntMatrix m = random_matrix(rng, 8, 12, -1, 1);
        check_decomposition(m);
    }
}

TEST_CASE("determinant agrees with invariant factors") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 8; ++trial) {
        IntMatrix m = random_matrix(rng, 5, 5, -6, 6);
        Int det = determinant(m);
        auto inv = smith_invariants(m);
        if ((int)inv.size() == 5) {
            Int prod = 1;
            for (const Int& d : inv) prod *= d;
            CHECK(abs(det) == prod);
        } else {
            CHECK(det == 0);
        }
    }
}

TEST_CASE("small determinants") {
    CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix(3, 3)) == 0);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("rank and degenerate shapes") {
    CHECK(matrix_rank(IntMatrix::identity(5)) == 5);
    CHECK(matrix_rank(IntMatrix(4, 7)) == 0);
    CHECK(matrix_rank(IntMatrix(0, 5)) == 0);
    CHECK(smith_invariants(IntMatrix(0, 5)).empty());
    CHECK(smith_invariants(IntMatrix(5, 0)).empty());
    IntMatrix m = from_rows({{0, 0}, {0, 3}});
    CHECK(smith_invariants(m) == std::vector<Int>{3});
}

TEST_CASE("matrix multiply and transpose") {
    IntMatrix a = from_rows({{1, 2}, {3, 4}});
    IntMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a.mul(b) == from_rows({{2, 1}, {4, 3}}));
    CHECK(a.transposed() == from_rows({{1, 3}, {2, 4}}));
    CHECK(IntMatrix(3, 4).is_zero());
    CHECK(!a.is_zero());
}

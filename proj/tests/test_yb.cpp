#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dh/distributive.hpp"
#include "dh/yb.hpp"

using namespace dh;

namespace {

SetYBOperator transposition(int n) {
    SetYBOperator r;
    r.size = n;
    r.map.assign(n, std::vector<std::pair<int, int>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) r.map[x][y] = {y, x};
    return r;
}

// R(x,y) = (sigma(y), tau(x)) for commuting permutations is a YB solution
SetYBOperator sigma_tau() {
    int sigma[3] = {1, 2, 0}, tau[3] = {2, 0, 1};
    SetYBOperator r;
    r.size = 3;
    r.map.assign(3, std::vector<std::pair<int, int>>(3));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) r.map[x][y] = {sigma[y], tau[x]};
    return r;
}

FiniteMagma nonshelf2() {
    FiniteMagma m;
    m.size = 2;
    m.table = {{1, 0}, {0, 0}};
    return m;
}

}  // namespace

TEST_CASE("YBE verdicts on the set fixtures") {
    CHECK(check_ybe(transposition(3)).ok);
    CHECK(check_ybe(from_shelf(takasaki(3))).ok);
    CHECK(check_ybe(sigma_tau()).ok);
    YbeCheck bad = check_ybe(from_shelf(nonshelf2()));
    CHECK(!bad.ok);
    CHECK(!bad.witness.empty());
}

TEST_CASE("from_shelf basics") {
    // the right-trivial operation gives the transposition
    CHECK(from_shelf(trivial_op(3)).map == transposition(3).map);
    CHECK(from_shelf(takasaki(3)).invertible());
    // a shelf that is not a rack gives a non-invertible operator
    FiniteMagma a42 = alexander(4, 2);
    CHECK(check_axioms(a42).shelf);
    CHECK(!check_axioms(a42).rack);
    CHECK(check_ybe(from_shelf(a42)).ok);
    CHECK(!from_shelf(a42).invertible());
}

TEST_CASE("linear check matches the set check") {
    for (const SetYBOperator& r :
         {transposition(3), from_shelf(takasaki(3)), sigma_tau(),
          from_shelf(nonshelf2()), transposition(2)}) {
        CHECK(check_ybe(linearize(r)).ok == check_ybe(r).ok);
    }
}

TEST_CASE("yb boundaries of a shelf equal the rack boundaries") {
    RackComplexes rc = rack_quandle_complexes(takasaki(3), 3);
    ChainComplex yb = yb_complex(from_shelf(takasaki(3)), 3);
    for (int deg = 2; deg <= 3; ++deg)
        CHECK(yb.boundary.at(deg) == rc.rack.boundary.at(deg));
}

TEST_CASE("transposition yields the zero differential") {
    for (int n : {2, 3}) {
        ChainComplex c = yb_complex(transposition(n), 2);
        for (int deg = 1; deg <= 3; ++deg)
            CHECK(c.boundary.at(deg).is_zero());
        for (int deg = 0; deg <= 2; ++deg) {
            HomologyGroup h = homology(c, deg);
            long long want = 1;
            for (int k = 0; k < deg; ++k) want *= n;
            CHECK(h.free_rank == want);
            CHECK(h.torsion.empty());
        }
    }
}

TEST_CASE("left and right parts square to zero and anticommute") {
    for (const SetYBOperator& r :
         {from_shelf(takasaki(3)), sigma_tau(), transposition(2)}) {
        for (int deg = 2; deg <= 3; ++deg) {
            YbBoundaryParts hi = yb_boundary_parts(r, deg);
            YbBoundaryParts lo = yb_boundary_parts(r, deg - 1);
            CHECK(lo.left.mul(hi.left).is_zero());
            CHECK(lo.right.mul(hi.right).is_zero());
            IntMatrix mixed = lo.left.mul(hi.right);
            IntMatrix other = lo.right.mul(hi.left);
            for (size_t k = 0; k < mixed.a.size(); ++k)
                mixed.a[k] += other.a[k];
            CHECK(mixed.is_zero());
        }
    }
}

TEST_CASE("a non-shelf YB solution still gives a complex") {
    ChainComplex c = yb_complex(sigma_tau(), 3);
    CHECK(!c.check_dd_zero().has_value());
}

TEST_CASE("yb_complex refuses YBE failures") {
    CHECK_THROWS_AS(yb_complex(from_shelf(nonshelf2()), 2),
                    std::invalid_argument);
}

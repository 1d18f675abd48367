#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dh/leibniz.hpp"

using namespace dh;

namespace {

void check_h(const ChainComplex& c, int deg, long long free_rank,
             std::vector<long long> torsion) {
    HomologyGroup h = homology(c, deg);
    CHECK(h.free_rank == free_rank);
    REQUIRE(h.torsion.size() == torsion.size());
    for (size_t k = 0; k < torsion.size(); ++k)
        CHECK(h.torsion[k] == torsion[k]);
}

// adjoint module: M = V with [m,x] = [m,x] through the bracket itself
LeibnizAlgebraData with_adjoint_module(LeibnizAlgebraData l) {
    l.dim_m = l.dim;
    l.action = l.bracket;
    return l;
}

}  // namespace

TEST_CASE("identity check on fixtures") {
    CHECK(check_leibniz(abelian_leibniz(3)).ok());
    LeibnizReport nl = check_leibniz(nonlie_leibniz());
    CHECK(nl.ok());
    CHECK(!nl.squares_vanish);  // [e1,e1] = e0
    LeibnizReport sl = check_leibniz(sl2_leibniz());
    CHECK(sl.ok());
    CHECK(sl.squares_vanish);
}

TEST_CASE("a corrupted bracket is rejected with a defect witness") {
    LeibnizAlgebraData l = sl2_leibniz();
    l.bracket[2][0][0] = 3;  // [h,e] = 3e breaks the identity
    LeibnizReport r = check_leibniz(l);
    CHECK(!r.bracket_ok);
    CHECK(!r.failures.empty());
    CHECK_THROWS_AS(leibniz_complex(l, 2), std::invalid_argument);
}

TEST_CASE("abelian bracket gives the zero differential") {
    ChainComplex c = leibniz_complex(abelian_leibniz(2), 2);
    for (int n = 1; n <= 3; ++n) CHECK(c.boundary.at(n).is_zero());
    for (int n = 0; n <= 2; ++n) check_h(c, n, 1LL << (n + 1), {});
}

TEST_CASE("homology of the non-Lie example") {
    ChainComplex c = leibniz_complex(nonlie_leibniz(), 2);
    CHECK(!c.check_dd_zero().has_value());
    check_h(c, 0, 1, {});
    check_h(c, 1, 1, {});
    check_h(c, 2, 1, {});
}

TEST_CASE("homology of sl2 over Z") {
    ChainComplex c = leibniz_complex(sl2_leibniz(), 2);
    check_h(c, 0, 0, {2, 2});
    check_h(c, 1, 0, {2, 4, 4});
    check_h(c, 2, 0, {2, 2, 2, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("presimplicial identity holds; adjoint module too") {
    for (const LeibnizAlgebraData& l :
         {nonlie_leibniz(), sl2_leibniz(),
          with_adjoint_module(sl2_leibniz())}) {
        FaceSystem f = leibniz_face_system(l, 3, false);
        CHECK(verify_simplicial_axioms(f).presimplicial);
    }
}

TEST_CASE("corrupting the module action breaks d0 d1 = d0 d0") {
    LeibnizAlgebraData l = with_adjoint_module(sl2_leibniz());
    l.action[2][0][0] = 5;  // [h,e] acts wrongly on the module side only
    CHECK(!check_leibniz(l).module_ok);
    CHECK(check_leibniz(l).bracket_ok);
    FaceSystem f = leibniz_face_system(l, 3, false);
    SimplicialReport r = verify_simplicial_axioms(f);
    CHECK(!r.presimplicial);
    bool d0d1 = false;
    for (const std::string& w : r.failures)
        if (w.find("d0d1") != std::string::npos) d0d1 = true;
    CHECK(d0d1);
}

TEST_CASE("doubling degeneracy satisfies (4') iff squares vanish") {
    FaceSystem lie = leibniz_face_system(sl2_leibniz(), 3, true);
    CHECK(verify_simplicial_axioms(lie).weak_unit);
    FaceSystem ab = leibniz_face_system(abelian_leibniz(2), 3, true);
    CHECK(verify_simplicial_axioms(ab).weak_unit);
    FaceSystem nl = leibniz_face_system(nonlie_leibniz(), 3, true);
    CHECK(!verify_simplicial_axioms(nl).weak_unit);
}

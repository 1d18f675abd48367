#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dh/magma.hpp"

using namespace dh;

namespace {

FiniteMagma add_mod(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteMagma(n, t);
}

}  // namespace

TEST_CASE("takasaki is an entropic kei") {
    AxiomReport r = check_axioms(takasaki(3));
    CHECK(r.shelf);
    CHECK(r.spindle);
    CHECK(r.rack);
    CHECK(r.quandle);
    CHECK(r.kei);
    CHECK(r.entropic);
    CHECK(r.left_distributive);
    CHECK(!shelf_witness(takasaki(3)).has_value());
}

TEST_CASE("takasaki equals alexander at t = n-1") {
    CHECK(takasaki(5) == alexander(5, 4));
    CHECK(takasaki(3) == alexander(3, 2));
}

TEST_CASE("alexander(5,2) is an entropic non-kei quandle") {
    AxiomReport r = check_axioms(alexander(5, 2));
    CHECK(r.quandle);
    CHECK(!r.kei);
    CHECK(r.entropic);
}

TEST_CASE("trivial op satisfies everything") {
    AxiomReport r = check_axioms(trivial_op(4));
    CHECK(r.shelf);
    CHECK(r.rack);
    CHECK(r.quandle);
    CHECK(r.kei);
    CHECK(r.entropic);
    CHECK(r.left_distributive);
}

TEST_CASE("addition mod n is not a shelf and yields a real witness") {
    FiniteMagma m = add_mod(3);
    auto w = shelf_witness(m);
    REQUIRE(w.has_value());
    auto [a, b, c] = *w;
    CHECK(m.op(m.op(a, b), c) != m.op(m.op(a, c), m.op(b, c)));
    CHECK(!check_axioms(m).shelf);
}

TEST_CASE("S3 group table validates") {
    FiniteMagma g = s3_group();
    validate_group(g);
    int e = group_identity(g);
    auto inv = group_inverses(g);
    for (int a = 0; a < 6; ++a) {
        CHECK(g.op(a, inv[a]) == e);
        CHECK(g.op(inv[a], a) == e);
    }
}

TEST_CASE("conjugation quandle of S3") {
    AxiomReport r = check_axioms(conjugation(s3_group()));
    CHECK(r.quandle);
    CHECK(!r.kei);
    CHECK(!r.entropic);
    CHECK(!r.left_distributive);
}

TEST_CASE("core of S3 is a kei but not entropic") {
    AxiomReport r = check_axioms(core(s3_group()));
    CHECK(r.quandle);
    CHECK(r.kei);
    CHECK(!r.entropic);
}

TEST_CASE("joyce constructions") {
    FiniteMagma g = s3_group();
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    CHECK(is_endomorphism(g, id));
    CHECK(joyce1(g, id) == trivial_op(6));

    auto inv = group_inverses(g);
    for (int h = 0; h < 6; ++h) {
        // t = conjugation by h is always an endomorphism
        std::vector<int> t(6);
        for (int x = 0; x < 6; ++x) t[x] = g.op(g.op(inv[h], x), h);
        CHECK(is_endomorphism(g, t));
        CHECK(check_axioms(joyce1(g, t)).quandle);
        CHECK(check_axioms(joyce2(g, t)).quandle);
    }
}

TEST_CASE("half-conjugacy shelves on S3") {
    FiniteMagma g = s3_group();
    int e = group_identity(g);
    CHECK(half_conjugacy(g, e) == trivial_op(6));
    int spindles = 0, keis = 0, involutive = 0;
    for (int x = 0; x < 6; ++x) {
        FiniteMagma hc = half_conjugacy(g, x);
        AxiomReport r = check_axioms(hc);
        CHECK(r.shelf);
        CHECK(r.rack);
        CHECK(r.entropic);
        if (r.spindle) ++spindles;
        if (r.kei) ++keis;
        bool inv2 = true;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                if (hc.op(hc.op(a, b), b) != a) inv2 = false;
        if (inv2) ++involutive;
    }
    CHECK(spindles == 1);    // only g = e gives a spindle (the trivial op)
    CHECK(keis == 1);        // kei demands a quandle, so again only g = e
    CHECK(involutive == 4);  // e and the three involutions act involutively
}

TEST_CASE("Bin(X) composition is a monoid with *0 as identity") {
    FiniteMagma a = conjugation(s3_group());
    FiniteMagma b = core(s3_group());
    FiniteMagma c = half_conjugacy(s3_group(), 1);
    FiniteMagma t = trivial_op(6);
    CHECK(compose(a, t) == a);
    CHECK(compose(t, a) == a);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("rack inverses in Bin(X)") {
    for (const FiniteMagma& m :
         {takasaki(3), conjugation(s3_group()), alexander(5, 2)}) {
        FiniteMagma mi = invert(m);
        CHECK(compose(m, mi) == trivial_op(m.size));
        CHECK(compose(mi, m) == trivial_op(m.size));
    }
    // alexander(4,2) is a shelf but not a rack: no inverse exists
    CHECK(check_axioms(alexander(4, 2)).shelf);
    CHECK(!check_axioms(alexander(4, 2)).rack);
    CHECK_THROWS_AS(invert(alexander(4, 2)), std::invalid_argument);
}

TEST_CASE("weak distributivity pairs") {
    CHECK(is_weakly_distributive_pair(takasaki(3), trivial_op(3)));
    CHECK(is_weakly_distributive_pair(takasaki(3), takasaki(3)));
    CHECK(is_weakly_distributive_pair(conjugation(s3_group()), trivial_op(6)));
    CHECK(!is_weakly_distributive_pair(takasaki(3), add_mod(3)));
}

TEST_CASE("distributive and entropic sets") {
    MagmaSet s{3, {takasaki(3), trivial_op(3)}};
    CHECK(is_distributive_set(s));
    CHECK(is_entropic_set(MagmaSet{3, {takasaki(3)}}));
    CHECK(!is_entropic_set(MagmaSet{6, {conjugation(s3_group())}}));
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(FiniteMagma(2, {{0, 1}, {0}}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteMagma(2, {{0, 2}, {0, 1}}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_group(takasaki(3)), std::invalid_argument);
}

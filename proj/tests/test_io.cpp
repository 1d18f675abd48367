#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dh/io.hpp"
#include "dh/knots.hpp"
#include "dh/yb.hpp"

#include <sstream>

using namespace dh;

namespace {

std::string fx(const std::string& name) {
    return std::string(DH_FIXTURES) + "/" + name;
}

// F4 = {0,1,w,w^2} as 0..3; a*b = w a + w^2 b over the field multiplication
FiniteMagma alex4() {
    int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    FiniteMagma m;
    m.size = 4;
    m.table.assign(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) m.table[a][b] = mul[2][a] ^ mul[3][b];
    return m;
}

template <typename T, typename F>
T parse(F reader, const std::string& text) {
    std::istringstream in(text);
    return reader(in);
}

}  // namespace

TEST_CASE("magma format round trip") {
    FiniteMagma m = takasaki(3);
    CHECK(parse<FiniteMagma>(read_magma, format_magma(m)) == m);
    // comments and blank lines are skipped
    CHECK(parse<FiniteMagma>(read_magma,
                             "# a quandle\nmagma 2\n\n0 0\n# mid\n1 1\n") ==
          trivial_op(2));
}

TEST_CASE("magma format errors carry line numbers") {
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_magma(in);
            return -1;
        } catch (const FormatError& e) {
            return e.line;
        }
    };
    CHECK(bad("magna 2\n0 0\n1 1\n") == 1);    // wrong keyword
    CHECK(bad("magma 2\n0 0 0\n1 1\n") == 2);  // wrong row width
    CHECK(bad("magma 2\n0 x\n1 1\n") == 2);    // not an integer
    CHECK(bad("magma 2\n0 0\n") == 2);         // truncated
    CHECK(bad("magma 2\n0 0\n1 1\n0 0\n") == 4);  // trailing rows
    // out-of-range entries are a validation error, not a format error
    std::istringstream in("magma 2\n0 5\n1 1\n");
    CHECK_THROWS_AS(read_magma(in), std::invalid_argument);
}

TEST_CASE("magma fixtures parse to the built-in constructions") {
    CHECK(load_magma(fx("takasaki3.magma")) == takasaki(3));
    CHECK(load_magma(fx("takasaki4.magma")) == takasaki(4));
    CHECK(load_magma(fx("takasaki5.magma")) == takasaki(5));
    CHECK(load_magma(fx("s3conj.magma")) == conjugation(s3_group()));
    CHECK(load_magma(fx("trivial3.magma")) == trivial_op(3));
    CHECK(load_magma(fx("alex4.magma")) == alex4());
    CHECK(load_magma(fx("z2.magma")) == FiniteMagma(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS(load_magma(fx("no_such_file.magma")));
}

TEST_CASE("leibniz format") {
    LeibnizAlgebraData l = load_leibniz(fx("nonlie.leibniz"));
    CHECK(l.dim == 2);
    CHECK(l.bracket == nonlie_leibniz().bracket);
    CHECK(check_leibniz(l).ok());
    std::istringstream bad("leibniz 2\n1 1 1 0\n");
    CHECK_THROWS_AS(read_leibniz(bad), FormatError);
    std::istringstream oob("leibniz 2\n2 0 : 1 0\n");
    CHECK_THROWS_AS(read_leibniz(oob), FormatError);
}

TEST_CASE("cocycle files carry fiber, table, twist and base") {
    CocycleFile cf = load_cocycle(fx("alex4z2.cocycle"));
    CHECK(cf.n == 4);
    CHECK(cf.fiber.moduli == std::vector<int>{2});
    REQUIRE(cf.base.has_value());
    CHECK(*cf.base == alex4());
    REQUIRE(cf.t.has_value());
    CHECK((*cf.t)[0][0] == 1);
    TwoCocycle f = cf.two_cocycle();
    CHECK(check_two_cocycle(f, CocycleKind::twisted_rack).ok);
    CHECK(f.f[1][2] == std::vector<int>{1});

    // without a base section the cocycle cannot be assembled
    CocycleFile headless = parse<CocycleFile>(
        read_cocycle, "cocycle 1 Z3\n0 0 : 2\n");
    CHECK(headless.f[0][0] == std::vector<int>{2});
    CHECK_THROWS_AS(headless.two_cocycle(), std::invalid_argument);

    // multi-factor fiber specs
    CocycleFile two = parse<CocycleFile>(
        read_cocycle, "cocycle 1 Z3xZ2\n0 0 : 5 3\n");
    CHECK(two.fiber.moduli == std::vector<int>{3, 2});
    CHECK(two.f[0][0] == std::vector<int>{2, 1});  // reduced mod the moduli

    std::istringstream dup("cocycle 1 Z2\n0 0 : 1\n0 0 : 1\n");
    CHECK_THROWS_AS(read_cocycle(dup), FormatError);
    std::istringstream badfib("cocycle 1 Zx\n0 0 : 1\n");
    CHECK_THROWS_AS(read_cocycle(badfib), FormatError);
}

TEST_CASE("ybop files") {
    SetYBOperator r = load_ybop(fx("takasaki3.ybop"));
    CHECK(r.map == from_shelf(takasaki(3)).map);
    CHECK(check_ybe(r).ok);
    std::istringstream missing("ybop 2\n0 0 : 0 0\n");
    CHECK_THROWS_AS(read_ybop(missing), FormatError);
}

TEST_CASE("weights files drive the Boltzmann sum") {
    StateSumWeights w = load_weights(fx("takasaki3delta.weights"));
    StateSumWeights expect = delta_weights(takasaki(3));
    CHECK(w.r == expect.r);
    CHECK(w.rbar == expect.rbar);
    LinkDiagram trefoil = parse_pd(load_text(fx("trefoil.pd")));
    CHECK(boltzmann_state_sum(trefoil, w) == 9);
}

TEST_CASE("chain complex dump format") {
    ChainComplex c;
    c.lo = 0;
    c.hi = 1;
    c.basis[0] = {"a"};
    c.basis[1] = {"b", "c"};
    IntMatrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    c.boundary[1] = m;
    CHECK(dump_complex(c) == "deg 0 dim 1\ndeg 1 dim 2\n1 -1\n");
}

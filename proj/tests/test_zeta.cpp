#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <curvezeta/fuzz.hpp>
#include <curvezeta/polynomial.hpp>
#include <curvezeta/zeta.hpp>

#include <random>

using namespace curvezeta;
using namespace fixtures;

namespace {

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<std::pair<long, long>> den) {
    std::vector<Integer> c;
    for (long x : num) c.emplace_back(x);
    std::vector<LinearFactor> f;
    for (auto [N, nu] : den) f.push_back({N, nu});
    return RationalFunction::term(IntPoly(c), f);
}

IntPoly ip(std::initializer_list<long> xs) {
    std::vector<Integer> c;
    for (long x : xs) c.emplace_back(x);
    return IntPoly(c);
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("integer polynomials") {
    auto p = ip({5, 4});
    CHECK(to_string(p, "s") == "4s + 5");
    CHECK(to_string(ip({0, -1, 0, 3}), "t") == "3t^3 - t");
    CHECK(p.degree() == 1);
    CHECK(IntPoly().degree() == -1);
    CHECK(mul_linear(ip({1}), 6, 5) == ip({5, 6}));
    CHECK(has_root(ip({5, 6}), 6, 5));
    CHECK_FALSE(has_root(ip({5, 4}), 6, 5));
    CHECK(div_linear(mul_linear(ip({1, 2, 3}), 7, 3), 7, 3) == ip({1, 2, 3}));
    CHECK_THROWS(div_linear(ip({5, 4}), 6, 5));
    CHECK(content(ip({6, -9, 12})) == 3);
    CHECK(evaluate(ip({5, 4}), q(-5, 4)) == 0);
}

TEST_CASE("rational polynomial gcd") {
    RatPoly g{q(1), q(-2), q(1)};
    auto d = gcd(g, g.derivative());
    CHECK(d == RatPoly{q(-1), q(1)});
    RatPoly h{q(-1), q(0), q(1)};
    CHECK(gcd(h, h.derivative()).degree() == 0);
    auto [quo, rem] = divmod(h, RatPoly{q(-1), q(1)});
    CHECK(quo == RatPoly{q(1), q(1)});
    CHECK(rem.is_zero());
}

TEST_CASE("rational function arithmetic") {
    CHECK(rf({1}, {{1, 1}}) + rf({1}, {{1, 1}}) == rf({2}, {{1, 1}}));
    CHECK(rf({5}, {{6, 5}}) - rf({0, 1}, {{1, 1}, {6, 5}}) == rf({5, 4}, {{1, 1}, {6, 5}}));
    CHECK(rf({1, 1}, {{1, 1}}) == RationalFunction(1));
    CHECK((rf({1, 1}, {{1, 1}}) - RationalFunction(1)).is_zero());
    CHECK(rf({1}, {{2, 2}}) == rf({1}, {{1, 1}}) * RationalFunction::term(1, {{0, 2}}));
    CHECK(rf({5, 4}, {{1, 1}, {6, 5}}).str() == "(4s + 5)/((s + 1)(6s + 5))");
    CHECK(rf({1}, {{1, 1}, {1, 1}}).str() == "1/(s + 1)^2");
    CHECK(RationalFunction::term(1, {{2, 2}, {2, 2}}).str() == "1/(4(s + 1)^2)");
    CHECK_THROWS_AS(RationalFunction(1).divided_by(0), std::domain_error);
    CHECK(rf({1}, {{1, 1}}).divided_by(q(1, 2)) == rf({2}, {{1, 1}}));
}

TEST_CASE("property: arithmetic agrees with evaluation") {
    std::mt19937_64 rng(5);
    auto small = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
    auto random_rf = [&]() {
        std::vector<Integer> c;
        for (int j = small(0, 3); j >= 0; --j) c.emplace_back(small(-5, 5));
        std::vector<LinearFactor> f;
        for (int j = small(0, 3); j > 0; --j) f.push_back({small(1, 4), small(1, 6)});
        return RationalFunction::term(IntPoly(c), f);
    };
    for (int iter = 0; iter < 300; ++iter) {
        auto x = random_rf(), y = random_rf();
        Rational at = make_rational(small(1, 50), small(1, 7));  // positive: never a pole
        CHECK((x + y).evaluate(at) == x.evaluate(at) + y.evaluate(at));
        CHECK((x * y).evaluate(at) == x.evaluate(at) * y.evaluate(at));
        CHECK(x + y == y + x);
        CHECK((x - x).is_zero());
        CHECK(sum({x, y, x}) == x + y + x);
        // canonical form
        const RationalFunction xy = x + y;
        for (const auto& [f, e] : xy.factors()) {
            CHECK(f.N >= 1);
            CHECK(f.nu >= 1);
            CHECK(gcd(f.N, f.nu) == 1);
            CHECK_FALSE(has_root(xy.numerator(), f.N, f.nu));
        }
    }
}

TEST_CASE("poles") {
    CHECK(poles(rf({5, 4}, {{1, 1}, {6, 5}})) == std::vector<Pole>{{q(-1), 1}, {q(-5, 6), 1}});
    CHECK(poles(rf({1}, {{1, 1}, {1, 1}})) == std::vector<Pole>{{q(-1), 2}});
    CHECK(poles(rf({5, 6}, {{6, 5}, {6, 5}, {1, 1}})) == std::vector<Pole>{{q(-1), 1}, {q(-5, 6), 1}});
    CHECK(poles(RationalFunction(3)).empty());
}

TEST_CASE("nondegenerate closed form") {
    CHECK(zeta_nondegenerate(faces({{2, 3, 1}})) == rf({5, 4}, {{1, 1}, {6, 5}}));
    CHECK(zeta_nondegenerate(faces({{1, 1, 2}})) == rf({1}, {{1, 1}, {1, 1}}));
    CHECK(zeta_nondegenerate(faces({{2, 5, 1}})) == rf({7, 6}, {{1, 1}, {10, 7}}));
    // values frozen from the independent definitional computation
    CHECK(zeta_nondegenerate(faces({{3, 2, 1}, {2, 5, 1}})) ==
          RationalFunction::term(ip({35, 71, 24}), std::vector<LinearFactor>{{0, 35}, {1, 1}, {2, 1}, {2, 1}}));
    CHECK(zeta_nondegenerate(faces({{1, 1, 2}, {1, 3, 1}})) == rf({2, -1}, {{1, 1}, {3, 2}}));
    CHECK(zeta_nondegenerate(faces({{3, 5, 1}})) == rf({8, 7}, {{1, 1}, {15, 8}}));
    CHECK(zeta_nondegenerate(faces({{3, 2, 1}, {2, 3, 1}})) ==
          RationalFunction::term(ip({5, 11, 4}), std::vector<LinearFactor>{{0, 5}, {1, 1}, {2, 1}, {2, 1}}));

    CHECK_THROWS_AS(zeta_nondegenerate(faces({})), std::invalid_argument);
    CHECK_THROWS_AS(zeta_nondegenerate(faces({{2, 3, 1}, {3, 2, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(zeta_nondegenerate(faces({{2, 4, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(zeta_nondegenerate(faces({{2, 3, 0}})), std::invalid_argument);
}

TEST_CASE("general closed form") {
    CHECK(zeta_general(annotate(cusp())) == rf({5, 4}, {{1, 1}, {6, 5}}));
    CHECK(zeta_general(annotate(two_pair())) == rf({85, 256, 164}, {{1, 1}, {12, 5}, {38, 17}}));
    CHECK(zeta_general(annotate(two_leaves())) == rf({5, 3}, {{1, 1}, {12, 5}}));
    std::vector<Integer> num{Integer("376200"), Integer("14940855"), Integer("223985309"), Integer("1521125585"),
                             Integer("4178584955"), Integer("1869262512")};
    std::vector<LinearFactor> den{{1, 1}, {57, 5}, {87, 8}, {142, 15}, {199, 19}, {290, 33}};
    CHECK(zeta_general(annotate(deep())) == RationalFunction::term(IntPoly(num), den));
}

TEST_CASE("property: one-bamboo leaf-only trees match the nondegenerate form") {
    FuzzConfig cfg;
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        auto f = random_faces(rng, cfg);
        std::vector<std::tuple<Integer, Integer, Integer>> raw;
        for (const auto& x : f) raw.emplace_back(x.a, x.b, x.r);
        CHECK(zeta_general(annotate(all_leaf_bamboo(raw))) == zeta_nondegenerate(f));
    }
}

TEST_CASE("candidate poles") {
    auto c = candidate_poles(annotate(cusp()));
    REQUIRE(c.size() == 2);
    CHECK(c[0].value == q(-5, 6));
    CHECK(c[0].bamboo_path == "/");
    CHECK(c[0].face == 1);
    CHECK(c[1].universal());
    CHECK(c[1].value == -1);

    c = candidate_poles(annotate(two_pair()));
    REQUIRE(c.size() == 3);
    CHECK(c[0].value == q(-5, 12));
    CHECK(c[1].value == q(-17, 38));
    CHECK(c[1].bamboo_path == "/faces/0/classes/0");

    c = candidate_poles(annotate(bamboo({face(3, 2, {leaf()}), face(2, 3, {leaf()})})));
    CHECK(c[0].value == q(-1, 2));
    CHECK(c[1].value == q(-1, 2));
}

TEST_CASE("pole order predicate") {
    CHECK(pole_order_predicate(annotate(cusp()), 0, 1) == PoleOrderClass::AtMostOne);
    CHECK(annotate(cusp()).root().D[1] == -3);
    auto od = annotate(bamboo({face(3, 2, {leaf()}), face(2, 3, {leaf()})}));
    CHECK(od.root().D[1] == 0);
    CHECK(pole_order_predicate(od, 0, 1) == PoleOrderClass::OrderTwoCandidate);
    auto t25 = annotate(bamboo({face(2, 5, {leaf()})}));
    CHECK(t25.root().D[1] == -5);
    CHECK(pole_order_predicate(t25, 0, 1) == PoleOrderClass::AtMostOne);
    CHECK_THROWS(pole_order_predicate(t25, 0, 2));
}

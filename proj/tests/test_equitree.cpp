#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <curvezeta/fuzz.hpp>

using namespace curvezeta;
using namespace fixtures;

TEST_CASE("validate") {
    CHECK_FALSE(validate(cusp()).has_value());

    auto d = validate(bamboo({face(2, 4, {leaf()})}));
    REQUIRE(d);
    CHECK(d->message == "gcd(a,b) != 1");
    CHECK(d->path == "/faces/0");
    CHECK(d->str() == "gcd(a,b) != 1 at path /faces/0");

    d = validate(bamboo({face(2, 3, {leaf()}), face(3, 2, {leaf()})}));
    REQUIRE(d);
    CHECK(d->message == "slope order violated");
    CHECK(d->path == "/faces/1");

    d = validate(bamboo({face(1, 1, {leaf(), leaf()})}));
    REQUIRE(d);
    CHECK(d->message == "a < 2");

    d = validate(bamboo({}));
    REQUIRE(d);
    CHECK(d->message == "bamboo has no faces");

    d = validate(bamboo({face(2, 3, {})}));
    REQUIRE(d);
    CHECK(d->message == "face has no branch classes");
    CHECK(d->path == "/faces/0/classes");

    d = validate(bamboo({face(2, 3, {leaf(), sub({face(3, 2, {leaf()}), face(4, 6, {leaf()})})})}));
    REQUIRE(d);
    CHECK(d->path == "/faces/0/classes/1/faces/1");
}

TEST_CASE("annotate rejects invalid trees with the diagnostic") {
    try {
        annotate(bamboo({face(1, 1, {leaf(), leaf()})}));
        FAIL("expected TreeError");
    } catch (const TreeError& e) {
        CHECK(e.diagnostic.message == "a < 2");
    }
    CHECK_NOTHROW(annotate_unchecked(bamboo({face(1, 1, {leaf(), leaf()})})));
}

TEST_CASE("class multiplicity") {
    CHECK(class_multiplicity(leaf()) == 1);
    CHECK(class_multiplicity(sub({face(2, 7, {leaf()})})) == 2);
    CHECK(class_multiplicity(sub({face(2, 5, {leaf()}), face(3, 7, {leaf()})})) == 5);
}

TEST_CASE("annotate cusp") {
    auto t = annotate(cusp());
    REQUIRE(t.bamboos().size() == 1);
    const auto& b = t.root();
    CHECK(b.faces[0].N == 6);
    CHECK(b.faces[0].nu == 5);
    CHECK(b.faces[0].multiplicity == 1);
    CHECK(b.alpha == std::vector<Integer>{0, 3});
    CHECK(b.beta == std::vector<Integer>{2, 0});
    CHECK(b.D == std::vector<Integer>{2, -3});
}

TEST_CASE("annotate two-pair tree") {
    auto t = annotate(two_pair());
    REQUIRE(t.bamboos().size() == 2);
    const auto& r = t.bamboos()[0];
    CHECK(r.faces[0].class_multiplicities == std::vector<Integer>{2});
    CHECK(r.faces[0].N == 12);
    CHECK(r.faces[0].nu == 5);
    REQUIRE(r.faces[0].successors[0]);
    const auto& s = t.bamboos()[*r.faces[0].successors[0]];
    CHECK(s.path == "/faces/0/classes/0");
    CHECK(s.parent == std::optional<std::size_t>(0));
    CHECK(s.depth == 2);
    CHECK(s.N_root == 12);
    CHECK(s.nu_root == 5);
    CHECK(s.faces[0].N == 38);
    CHECK(s.faces[0].nu == 17);
}

TEST_CASE("leaves") {
    CHECK(leaves(cusp()).size() == 1);
    CHECK(leaves(two_leaves()).size() == 2);
    auto l = leaves(two_pair());
    REQUIRE(l.size() == 1);
    CHECK(l[0].bamboo_path == "/faces/0/classes/0");
    CHECK(l[0].face == 0);
    CHECK(leaves(deep()).size() == 4);
}

TEST_CASE("all-leaf bamboo") {
    auto b = all_leaf_bamboo({{2, 3, 1}, {1, 2, 3}});
    REQUIRE(b.faces.size() == 2);
    CHECK(b.faces[1].classes.size() == 3);
    for (const auto& c : b.faces[1].classes) CHECK(c.is_leaf());
}

TEST_CASE("property: invariants over random trees") {
    FuzzConfig cfg;
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        auto spec = random_tree(rng, cfg);
        REQUIRE_FALSE(validate(spec).has_value());
        auto t = annotate(spec);
        const auto& root = t.root();
        // N(P_1) = b_1 beta_0 in the root bamboo
        CHECK(root.faces.front().N == root.faces.front().b * root.beta.front());
        for (const auto& b : t.bamboos()) {
            const auto& last = b.faces.back();
            CHECK(last.N == last.a * b.alpha.back());
            CHECK(b.beta.back() == 0);
            for (const auto& f : b.faces) {
                // nu(P) >= a + b, with equality exactly in the root bamboo
                if (b.parent)
                    CHECK(f.nu > f.a + f.b);
                else
                    CHECK(f.nu == f.a + f.b);
                CHECK(f.N > b.N_root);
                CHECK(f.nu > b.nu_root);
            }
        }
        // determinism
        auto again = annotate(spec);
        REQUIRE(again.bamboos().size() == t.bamboos().size());
        for (std::size_t j = 0; j < t.bamboos().size(); ++j) {
            CHECK(again.bamboos()[j].D == t.bamboos()[j].D);
            CHECK(again.bamboos()[j].path == t.bamboos()[j].path);
        }
        // every leaf counted once: root multiplicity = sum of leaf multiplicities along paths
        std::size_t leaf_count = leaves(spec).size();
        std::size_t counted = 0;
        for (const auto& b : t.bamboos())
            for (const auto& f : b.faces)
                for (const auto& s : f.successors) counted += s ? 0 : 1;
        CHECK(counted == leaf_count);
    }
}

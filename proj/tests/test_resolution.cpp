#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <curvezeta/frontend.hpp>
#include <curvezeta/fuzz.hpp>
#include <curvezeta/monodromy.hpp>
#include <curvezeta/resolution.hpp>

using namespace curvezeta;
using namespace fixtures;

namespace {

struct NodeData {
    bool exceptional;
    long N, nu, chi;
    friend bool operator==(const NodeData&, const NodeData&) = default;
};

std::vector<NodeData> data(const ResolutionGraph& g) {
    std::vector<NodeData> out;
    for (const auto& n : g.nodes)
        out.push_back({n.kind == DivisorNode::Kind::Exceptional, n.N.get_si(), n.nu.get_si(), n.chi_open});
    return out;
}

}  // namespace

TEST_CASE("cusp graph") {
    auto g = build_graph(annotate(cusp()));
    CHECK(data(g) == std::vector<NodeData>{{true, 2, 2, 1}, {true, 6, 5, -1}, {true, 3, 3, 1}, {false, 1, 1, 0}});
    CHECK(g.exceptional_count() == 3);
    CHECK(g.nodes[1].principal == 1);
    CHECK(g.nodes[1].vector == PrimitiveVector(2, 3));
    CHECK_FALSE(structure_check(g).has_value());
    CHECK_FALSE(chain_determinant_check(g).has_value());
    CHECK(definitional_zeta(g) == zeta_general(annotate(cusp())));
    CycloProduct expected;
    expected.multiply(6, 1);
    expected.multiply(2, -1);
    expected.multiply(3, -1);
    CHECK(acampo_from_graph(g) == expected);
}

TEST_CASE("node graph") {
    auto g = build_graph_nondegenerate(faces({{1, 1, 2}}));
    CHECK(data(g) == std::vector<NodeData>{{true, 2, 2, 0}, {false, 1, 1, 0}, {false, 1, 1, 0}});
    CHECK(acampo_from_graph(g).is_one());
    CHECK(definitional_zeta(g).str() == "1/(s + 1)^2");
}

TEST_CASE("order-two construction") {
    auto g = build_graph_nondegenerate(faces({{3, 2, 1}, {2, 3, 1}}));
    auto p = poles(definitional_zeta(g));
    REQUIRE(p.size() == 2);
    CHECK(p[1].value == make_rational(-1, 2));
    CHECK(p[1].order == 2);
}

TEST_CASE("chain determinants") {
    auto g = build_graph(annotate(cusp()));
    const auto& chain = g.chains.at(0);
    CHECK(chain.expected_D == std::vector<Integer>{2, -3});
    // (2,2) -> (6,5): 6*2 - 2*5 = 2; (6,5) -> (3,3): 3*5 - 6*3 = -3
    CHECK(chain.segment == std::vector<std::size_t>{0, 1, 1});

    g.nodes[2].N += 1;
    auto v = chain_determinant_check(g);
    REQUIRE(v);
    CHECK(v->edge == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(v->expected == -3);
    CHECK(v->actual == -3 * 1 + 5);
}

TEST_CASE("structure check catches broken graphs") {
    auto g = build_graph(annotate(two_pair()));
    CHECK_FALSE(structure_check(g).has_value());
    auto bad = g;
    bad.nodes[0].chi_open += 1;
    CHECK(structure_check(bad).has_value());
    bad = g;
    bad.edges.pop_back();
    CHECK(structure_check(bad).has_value());
    bad = g;
    bad.edges.push_back({0, 1});
    CHECK(structure_check(bad).has_value());
}

TEST_CASE("extra rays leave the invariants unchanged") {
    for (const auto& spec : {cusp(), two_pair(), two_leaves(), deep()}) {
        auto t = annotate(spec);
        auto g0 = build_graph(t);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = build_graph(t, BuildStrategy::with_extra_rays(seed));
            CHECK(g.exceptional_count() >= g0.exceptional_count() + 3 * t.bamboos().size());
            CHECK(definitional_zeta(g) == definitional_zeta(g0));
            CHECK(acampo_from_graph(g) == acampo_from_graph(g0));
            CHECK_FALSE(chain_determinant_check(g).has_value());
            CHECK_FALSE(structure_check(g).has_value());
        }
    }
}

TEST_CASE("property: oracle equals closed forms on random trees") {
    FuzzConfig cfg;
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 150; ++iter) {
        auto t = annotate(random_tree(rng, cfg));
        auto g = build_graph(t);
        CHECK(definitional_zeta(g) == zeta_general(t));
        CHECK(acampo_from_graph(g) == monodromy_zeta(t));
        CHECK_FALSE(chain_determinant_check(g).has_value());
        CHECK_FALSE(structure_check(g).has_value());
        // principal divisors carry the annotated multiplicities
        for (const auto& chain : g.chains) {
            const auto& b = t.bamboos()[chain.bamboo];
            for (auto id : chain.nodes) {
                const auto& n = g.nodes[id];
                if (n.principal) {
                    CHECK(n.N == b.faces[n.principal - 1].N);
                    CHECK(n.nu == b.faces[n.principal - 1].nu);
                }
            }
        }
    }
}

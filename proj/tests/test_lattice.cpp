#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvezeta/lattice.hpp>

#include <algorithm>
#include <random>

using namespace curvezeta;

namespace {

using V = PrimitiveVector;

std::vector<V> vs(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<V> out;
    for (auto [a, b] : xs) out.emplace_back(a, b);
    return out;
}

bool regular_with_frames(const Subdivision& s) {
    auto r = s.with_frames();
    for (std::size_t j = 0; j + 1 < r.size(); ++j)
        if (det(r[j], r[j + 1]) != 1) return false;
    return true;
}

// Irreducible lattice points of cone(u, v) other than u, v: the rays of the
// minimal regular refinement, found by exhaustive search.
std::vector<V> hilbert_rays(const V& u, const V& v) {
    long ua = u.a().get_si(), ub = u.b().get_si(), va = v.a().get_si(), vb = v.b().get_si();
    long D = ua * vb - ub * va;
    auto in_cone = [&](long x, long y) { return ua * y - ub * x >= 0 && x * vb - y * va >= 0; };
    std::vector<std::pair<long, long>> pts;
    for (long x = 0; x <= ua + va; ++x)
        for (long y = 0; y <= ub + vb; ++y)
            if ((x || y) && in_cone(x, y) && ua * y - ub * x <= D && x * vb - y * va <= D) pts.emplace_back(x, y);
    std::vector<V> out;
    for (auto [x, y] : pts) {
        bool reducible = false;
        for (auto [p, q] : pts)
            if ((p != x || q != y) && in_cone(x - p, y - q)) reducible = true;
        if (!reducible && !(x == ua && y == ub) && !(x == va && y == vb)) out.emplace_back(x, y);
    }
    std::sort(out.begin(), out.end(), slope_less);
    return out;
}

}  // namespace

TEST_CASE("primitive vectors are validated") {
    CHECK_NOTHROW(V(2, 3));
    CHECK_NOTHROW(V(0, 1));
    CHECK_THROWS_AS(V(0, 0), LatticeError);
    CHECK_THROWS_AS(V(2, 4), LatticeError);
    CHECK_THROWS_AS(V(-1, 2), LatticeError);
    CHECK(V(2, 3).str() == "(2,3)");
    CHECK(primitive_part(6, 9) == V(2, 3));
}

TEST_CASE("determinant") {
    CHECK(det(V(1, 0), V(0, 1)) == 1);
    CHECK(det(V(2, 3), V(3, 5)) == 1);
    CHECK(det(V(1, 0), V(2, 3)) == 3);
}

TEST_CASE("slope order") {
    CHECK(slope_less(V(1, 0), V(0, 1)));
    CHECK_FALSE(slope_less(V(2, 3), V(3, 2)));
    CHECK_FALSE(slope_less(V(2, 3), V(2, 3)));
}

TEST_CASE("minimal regular refinement") {
    CHECK(minimal_regular_refinement(V(1, 0), V(0, 1)).empty());
    CHECK(minimal_regular_refinement(V(1, 0), V(2, 3)) == vs({{1, 1}}));
    CHECK(minimal_regular_refinement(V(2, 3), V(0, 1)) == vs({{1, 2}}));
    CHECK(minimal_regular_refinement(V(1, 0), V(1, 7)) == vs({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
    CHECK_THROWS_AS(minimal_regular_refinement(V(0, 1), V(1, 0)), LatticeError);
    CHECK_THROWS_AS(minimal_regular_refinement(V(2, 3), V(2, 3)), LatticeError);
}

TEST_CASE("refinement agrees with exhaustive Hilbert basis on random cones") {
    std::mt19937_64 rng(20241016);
    int checked = 0;
    while (checked < 200) {
        long a = 1 + static_cast<long>(rng() % 12), b = static_cast<long>(rng() % 12);
        long c = static_cast<long>(rng() % 12), d = 1 + static_cast<long>(rng() % 12);
        if (std::gcd(a, b) != 1 || std::gcd(c, d) != 1 || a * d - b * c <= 0) continue;
        V u(a, b), v(c, d);
        auto got = minimal_regular_refinement(u, v);
        CHECK_MESSAGE(got == hilbert_rays(u, v), u.str() << " " << v.str());
        std::vector<V> chain{u};
        chain.insert(chain.end(), got.begin(), got.end());
        chain.push_back(v);
        for (std::size_t j = 0; j + 1 < chain.size(); ++j) CHECK(det(chain[j], chain[j + 1]) == 1);
        ++checked;
    }
}

TEST_CASE("admissible subdivision") {
    auto one = vs({{2, 3}});
    CHECK(admissible_subdivision(one).vectors() == vs({{1, 1}, {2, 3}, {1, 2}}));
    auto node = vs({{1, 1}});
    CHECK(admissible_subdivision(node).vectors() == vs({{1, 1}}));
    auto two = vs({{3, 2}, {2, 3}});
    auto s = admissible_subdivision(two);
    CHECK(s.vectors() == vs({{2, 1}, {3, 2}, {1, 1}, {2, 3}, {1, 2}}));
    CHECK(regular_with_frames(s));
    CHECK(s.find(V(3, 2)) == 1);
    CHECK(s.find(V(5, 2)) == Subdivision::npos);

    auto unsorted = vs({{2, 3}, {3, 2}});
    CHECK_THROWS_AS(admissible_subdivision(unsorted), LatticeError);
    auto axis = vs({{0, 1}});
    CHECK_THROWS_AS(admissible_subdivision(axis), LatticeError);
}

TEST_CASE("subdivision constructor rejects irregular fans") {
    CHECK_NOTHROW(Subdivision(vs({{1, 1}})));
    CHECK_THROWS_AS(Subdivision(vs({{2, 3}})), LatticeError);
    CHECK_THROWS_AS(Subdivision(vs({{1, 2}, {1, 1}})), LatticeError);
}

TEST_CASE("insert rays") {
    Subdivision node(vs({{1, 1}}));
    auto r1 = vs({{2, 1}});
    CHECK(insert_rays(node, r1).vectors() == vs({{2, 1}, {1, 1}}));
    auto dup = vs({{1, 1}});
    CHECK_THROWS_AS(insert_rays(node, dup), LatticeError);

    auto p = vs({{2, 3}});
    auto cusp = admissible_subdivision(p);
    auto extra = vs({{3, 4}});
    auto refined = insert_rays(cusp, extra);
    CHECK(regular_with_frames(refined));
    CHECK(refined.find(V(3, 4)) != Subdivision::npos);
    for (const auto& v : cusp.vectors()) CHECK(refined.find(v) != Subdivision::npos);
}

TEST_CASE("property: random insertions keep every old ray and stay regular") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<V> principal;
        for (int k = 0; k < 3; ++k) {
            long a = 2 + static_cast<long>(rng() % 8), b = 2 + static_cast<long>(rng() % 8);
            if (std::gcd(a, b) == 1) principal.emplace_back(a, b);
        }
        std::sort(principal.begin(), principal.end(), slope_less);
        principal.erase(std::unique(principal.begin(), principal.end()), principal.end());
        if (principal.empty()) continue;
        auto sub = admissible_subdivision(principal);
        REQUIRE(regular_with_frames(sub));
        for (const auto& p : principal) CHECK(sub.find(p) != Subdivision::npos);
        long x = 1 + static_cast<long>(rng() % 20), y = 1 + static_cast<long>(rng() % 20);
        V w = primitive_part(x, y);
        if (sub.find(w) != Subdivision::npos) continue;
        V extra[] = {w};
        auto refined = insert_rays(sub, extra);
        CHECK(regular_with_frames(refined));
        for (const auto& v : sub.vectors()) CHECK(refined.find(v) != Subdivision::npos);
        CHECK(refined.find(w) != Subdivision::npos);
    }
}

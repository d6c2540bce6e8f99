#ifndef CURVEZETA_TEST_FIXTURES_HPP
#define CURVEZETA_TEST_FIXTURES_HPP

#include <curvezeta/equitree.hpp>
#include <curvezeta/zeta.hpp>

#include <vector>

namespace fixtures {

using namespace curvezeta;

inline BranchClass leaf() { return BranchClass::leaf(); }

inline FaceSpec face(long a, long b, std::vector<BranchClass> classes) { return {a, b, std::move(classes)}; }

inline BambooSpec bamboo(std::vector<FaceSpec> faces) { return {std::move(faces)}; }

inline BranchClass sub(std::vector<FaceSpec> faces) { return BranchClass::sub(bamboo(std::move(faces))); }

// y^2 = x^3
inline BambooSpec cusp() { return bamboo({face(2, 3, {leaf()})}); }

// one branch with Puiseux exponents 3/2, 13/4
inline BambooSpec two_pair() { return bamboo({face(2, 3, {sub({face(2, 7, {leaf()})})})}); }

// two cusps with a common Puiseux pair
inline BambooSpec two_leaves() { return bamboo({face(2, 3, {leaf(), leaf()})}); }

// three levels, several faces and classes
inline BambooSpec deep() {
    return bamboo({face(2, 3, {leaf(), sub({face(3, 4, {leaf()}), face(2, 5, {sub({face(2, 3, {leaf()})})})})}),
                   face(3, 5, {leaf()})});
}

inline std::vector<FaceTriple> faces(std::initializer_list<std::tuple<long, long, long>> xs) {
    std::vector<FaceTriple> out;
    for (auto [a, b, r] : xs) out.push_back({a, b, r});
    return out;
}

}  // namespace fixtures

#endif

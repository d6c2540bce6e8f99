#ifndef CURVEZETA_RESOLUTION_HPP
#define CURVEZETA_RESOLUTION_HPP

// Brute-force resolution graph: every exceptional divisor of every bamboo plus
// one node per strict-transform branch, with (N, nu, chi) data. Used as the
// independent oracle for the closed forms in zeta and monodromy.

#include <curvezeta/equitree.hpp>
#include <curvezeta/lattice.hpp>
#include <curvezeta/zeta.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace curvezeta {

struct DivisorNode {
    enum class Kind { Exceptional, Branch };

    std::size_t id = 0;
    Kind kind = Kind::Exceptional;
    std::optional<PrimitiveVector> vector;  // exceptional only
    Integer N;
    Integer nu;
    long chi_open = 0;  // 2 - degree for exceptional nodes, 0 for branches
    std::size_t bamboo = 0;
    std::size_t principal = 0;  // 1-based principal index, 0 if not principal
};

/// One bamboo's chain of exceptional divisors in slope order.
struct BambooChain {
    std::size_t bamboo = 0;
    std::optional<std::size_t> root_node;  // parent principal divisor
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> segment;  // per node: i with P_i <= T < P_{i+1}
    std::vector<Integer> expected_D;   // per segment i = 0..k
};

struct ResolutionGraph {
    std::vector<DivisorNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<BambooChain> chains;

    std::size_t exceptional_count() const;
    std::vector<std::size_t> degrees() const;
};

struct BuildStrategy {
    enum class Kind { Minimal, WithExtraRays };
    Kind kind = Kind::Minimal;
    std::uint64_t seed = 0;
    int extra_rays = 3;  // per bamboo

    static BuildStrategy minimal() { return {}; }
    static BuildStrategy with_extra_rays(std::uint64_t seed, int count = 3) {
        return {Kind::WithExtraRays, seed, count};
    }
};

/// Builds the graph from the tree's face data. Multiplicities are recomputed
/// here as N(c, d) = c N_root + sum_t A_t min(c b_t, d a_t), nu = c nu_root + d,
/// independently of annotate(); the annotated D_i are kept for the chain check.
ResolutionGraph build_graph(const AnnotatedTree& tree, BuildStrategy strategy = BuildStrategy::minimal());

/// sum over exceptional nodes of chi/(N s + nu) plus, for every edge, the
/// intersection point term 1/((N1 s + nu1)(N2 s + nu2)).
RationalFunction definitional_zeta(const ResolutionGraph& graph);

struct ChainViolation {
    std::pair<std::size_t, std::size_t> edge;
    Integer expected;
    Integer actual;
};

/// Checks N(T_{j+1}) nu(T_j) - N(T_j) nu(T_{j+1}) = D_i along every chain.
std::optional<ChainViolation> chain_determinant_check(const ResolutionGraph& graph);

/// Connected tree, branch nodes of degree 1 on principal divisors, chi =
/// 2 - degree, and sum of stratum Euler characteristics = #exceptional + 1.
/// Returns a description of the first failure.
std::optional<std::string> structure_check(const ResolutionGraph& graph);

}  // namespace curvezeta

#endif  // CURVEZETA_RESOLUTION_HPP

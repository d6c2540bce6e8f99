#ifndef CURVEZETA_FUZZ_HPP
#define CURVEZETA_FUZZ_HPP

// Seeded random trees / nondegenerate face lists and the differential
// harness comparing every closed form with the resolution-graph oracle.

#include <curvezeta/equitree.hpp>
#include <curvezeta/monodromy.hpp>
#include <curvezeta/zeta.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace curvezeta {

struct FuzzConfig {
    std::size_t count = 1;
    std::uint64_t seed = 0;
    unsigned max_depth = 3;    // bamboo levels, the root being level 1
    unsigned max_k = 3;        // faces per bamboo
    unsigned max_ab = 9;       // 2 <= a, b <= max_ab
    unsigned max_classes = 3;  // classes per face
    unsigned leaf_num = 1;     // leaf probability leaf_num / leaf_den
    unsigned leaf_den = 2;
    std::uint64_t expansion_cap = kDefaultExpansionCap;  // largest Delta expanded coefficient-wise

    /// Empty when usable, else the reason.
    std::string problem() const;
};

/// Valid random tree; a pure function of the generator state and the bounds.
BambooSpec random_tree(std::mt19937_64& rng, const FuzzConfig& cfg);

/// Random nondegenerate face list: k <= max_k faces with 2 <= a, b <= max_ab
/// in increasing slope order and 1 <= r <= max_classes.
std::vector<FaceTriple> random_faces(std::mt19937_64& rng, const FuzzConfig& cfg);

/// 64-bit FNV-1a of the canonical tree JSON, as 16 hex digits.
std::string tree_hash(const BambooSpec& tree);

struct InstanceResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;  // regenerates the instance: random_tree(mt19937_64(seed), cfg)
    std::string hash;
    BambooSpec tree;
    std::uint64_t mu = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Runs every check on one tree; extra rays are drawn from ray_seed.
std::vector<std::string> check_tree(const BambooSpec& tree, std::uint64_t ray_seed,
                                    std::uint64_t expansion_cap = kDefaultExpansionCap);

/// Same checks for a nondegenerate face list (through zeta_nondegenerate).
std::vector<std::string> check_faces(const std::vector<FaceTriple>& faces, std::uint64_t ray_seed,
                                     std::uint64_t expansion_cap = kDefaultExpansionCap);

struct FuzzSummary {
    std::vector<InstanceResult> instances;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// Generates cfg.count instances and checks them. Failing instances are
/// written to dump_dir (skipped when empty) as fuzz-fail-<hash>.json.
FuzzSummary run_fuzz(const FuzzConfig& cfg, const std::string& dump_dir = "");

}  // namespace curvezeta

#endif  // CURVEZETA_FUZZ_HPP

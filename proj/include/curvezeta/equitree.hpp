#ifndef CURVEZETA_EQUITREE_HPP
#define CURVEZETA_EQUITREE_HPP

// Equisingularity trees: nested bamboos of Newton pairs with branch classes,
// and the multiplicity / discrepancy data attached to every principal vertex.

#include <curvezeta/integer.hpp>
#include <curvezeta/lattice.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace curvezeta {

struct BambooSpec;

/// Either a single smooth branch (leaf) or a successor bamboo.
class BranchClass {
public:
    static BranchClass leaf() { return BranchClass(); }
    static BranchClass sub(BambooSpec bamboo);

    bool is_leaf() const { return !sub_; }
    /// Precondition: !is_leaf().
    const BambooSpec& bamboo() const { return *sub_; }

private:
    BranchClass() = default;
    std::shared_ptr<const BambooSpec> sub_;
};

struct FaceSpec {
    Integer a;
    Integer b;
    std::vector<BranchClass> classes;
};

struct BambooSpec {
    std::vector<FaceSpec> faces;
};

struct Diagnostic {
    std::string path;
    std::string message;
    std::string str() const { return message + " at path " + (path.empty() ? "/" : path); }
};

/// First violated tree constraint, or nullopt when the tree is valid.
std::optional<Diagnostic> validate(const BambooSpec& tree);

/// 1 for a leaf; sum of a'_t * A'_t over the successor bamboo's faces.
Integer class_multiplicity(const BranchClass& cls);

struct AnnotatedFace {
    Integer a;
    Integer b;
    std::vector<Integer> class_multiplicities;  // A_{i,l}
    std::vector<std::optional<std::size_t>> successors;  // bamboo index per class, nullopt for leaves
    Integer multiplicity;  // A_i
    Integer N;
    Integer nu;

    PrimitiveVector vector() const { return {a, b}; }
    std::size_t class_count() const { return class_multiplicities.size(); }  // r_i
};

struct AnnotatedBamboo {
    std::string path;  // "" for the root, else e.g. "/faces/0/classes/1"
    std::optional<std::size_t> parent;  // parent bamboo index
    std::size_t parent_face = 0;  // 0-based face of the parent carrying this bamboo
    std::size_t depth = 1;
    Integer N_root;
    Integer nu_root;
    std::vector<AnnotatedFace> faces;
    // Segment data for i = 0..k (segment i lies between P_i and P_{i+1}):
    // alpha_i = N_root + sum_{t<=i} b_t A_t, beta_i = sum_{t>i} a_t A_t,
    // D_i = nu_root * beta_i - alpha_i.
    std::vector<Integer> alpha;
    std::vector<Integer> beta;
    std::vector<Integer> D;

    std::string display_path() const { return path.empty() ? "/" : path; }
};

class AnnotatedTree {
public:
    /// Bamboos in depth-first pre-order; index 0 is the root bamboo.
    const std::vector<AnnotatedBamboo>& bamboos() const { return bamboos_; }
    const AnnotatedBamboo& root() const { return bamboos_.front(); }
    const BambooSpec& spec() const { return spec_; }

private:
    friend AnnotatedTree annotate(const BambooSpec&);
    friend AnnotatedTree annotate_unchecked(const BambooSpec&);
    std::vector<AnnotatedBamboo> bamboos_;
    BambooSpec spec_;
};

struct TreeError : std::invalid_argument {
    explicit TreeError(const Diagnostic& d) : std::invalid_argument(d.str()), diagnostic(d) {}
    Diagnostic diagnostic;
};

/// Validates, then computes multiplicities for every face of every bamboo.
/// Throws TreeError with the first diagnostic on invalid input.
AnnotatedTree annotate(const BambooSpec& tree);

/// Same recursion without the a, b >= 2 restriction; used for nondegenerate
/// face lists expressed as one all-leaf bamboo.
AnnotatedTree annotate_unchecked(const BambooSpec& tree);

struct LeafRef {
    std::string bamboo_path;
    std::size_t face;  // 0-based
    std::size_t cls;   // 0-based
};

/// All leaf classes, depth-first; one per irreducible branch.
std::vector<LeafRef> leaves(const BambooSpec& tree);

/// Single bamboo with r leaves on each face (a, b, r).
BambooSpec all_leaf_bamboo(const std::vector<std::tuple<Integer, Integer, Integer>>& faces);

}  // namespace curvezeta

#endif  // CURVEZETA_EQUITREE_HPP

#ifndef CURVEZETA_FRONTEND_HPP
#define CURVEZETA_FRONTEND_HPP

// Bivariate polynomials over Q, their Newton polygons, and the
// Newton-nondegeneracy test feeding the nondegenerate pipeline.

#include <curvezeta/equitree.hpp>
#include <curvezeta/integer.hpp>
#include <curvezeta/lattice.hpp>
#include <curvezeta/polynomial.hpp>
#include <curvezeta/resolution.hpp>
#include <curvezeta/zeta.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvezeta {

using Exponent = std::pair<std::int64_t, std::int64_t>;  // (alpha, beta) for x^alpha y^beta

/// Nonzero coefficients keyed by exponent; never holds a constant term.
struct SparsePoly {
    std::map<Exponent, Rational> terms;
};

struct ParseError : std::invalid_argument {
    ParseError(std::size_t pos, const std::string& msg)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Grammar: terms separated by + or -; term = [rational][*][x[^int]][*][y[^int]]
/// with rational = int or int/int. Whitespace between tokens is ignored.
/// Throws ParseError on syntax errors, a nonzero constant term or a zero result.
SparsePoly parse_poly(std::string_view text);

/// Terms in graded-lex order, highest total degree first, e.g. "-x^3 + y^2".
std::string to_string(const SparsePoly& f);

struct NewtonFace {
    PrimitiveVector normal;
    std::vector<Exponent> lattice_points;  // from the high-beta end, step (b, -a)
    RatPoly face_poly;                     // coefficient j at lattice_points[j]
};

struct FrontendError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Compact faces of the Newton polygon in slope order. Throws FrontendError
/// unless f has pure powers of both x and y in its support.
std::vector<NewtonFace> newton_faces(const SparsePoly& f);

struct NondegeneracyResult {
    bool nondegenerate = true;
    std::size_t face = 0;  // 0-based witness face when degenerate
    RatPoly witness;       // gcd(G, G') of the witness face
};

NondegeneracyResult nondegeneracy_check(const std::vector<NewtonFace>& faces);

/// (a, b, deg G) per face; throws FrontendError on degenerate input.
std::vector<FaceTriple> to_face_specs(const std::vector<NewtonFace>& faces);

/// The single-bamboo tree with r leaves per face, annotated without the
/// a, b >= 2 restriction.
AnnotatedTree nondegenerate_tree(const std::vector<FaceTriple>& specs);

ResolutionGraph build_graph_nondegenerate(const std::vector<FaceTriple>& specs,
                                          BuildStrategy strategy = BuildStrategy::minimal());

}  // namespace curvezeta

#endif  // CURVEZETA_FRONTEND_HPP

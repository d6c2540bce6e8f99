#ifndef CURVEZETA_SERIALIZE_HPP
#define CURVEZETA_SERIALIZE_HPP

// JSON forms of trees, rational functions, cyclotomic products and graphs.
// Exact values that can grow without bound (coefficients, N, nu) are written
// as decimal strings; counts and exponents are plain JSON numbers.

#include <curvezeta/equitree.hpp>
#include <curvezeta/monodromy.hpp>
#include <curvezeta/resolution.hpp>
#include <curvezeta/zeta.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvezeta {

using Json = nlohmann::ordered_json;

struct TreeJsonError : std::invalid_argument {
    explicit TreeJsonError(const Diagnostic& d) : std::invalid_argument(d.str()), diagnostic(d) {}
    Diagnostic diagnostic;
};

/// `{"faces":[{"a":<int>,"b":<int>,"classes":["leaf" | {"faces":[...]}, ...]}, ...]}`.
/// Rejects malformed JSON, unknown or missing keys and non-integers (including
/// integers beyond 64 bits) with a path diagnostic. Does not validate the
/// tree constraints; annotate() does that.
BambooSpec parse_tree_json(std::string_view text);
BambooSpec tree_from_json(const Json& j);

Json tree_to_json(const BambooSpec& tree);
/// Compact canonical text; parse_tree_json(tree_json_text(t)) round-trips.
std::string tree_json_text(const BambooSpec& tree);

/// {"numerator": [low..high], "denominator": [{"N","nu","exp"}...]}. A
/// denominator constant c != 1 appears as the entry {"N":"0","nu":"c","exp":1}.
Json to_json(const RationalFunction& z);

/// Sorted list of {"n", "e"}.
Json to_json(const CycloProduct& z);

/// {"factors": [...], "coeffs": [...] or null, "mu": mu}.
Json to_json(const CharPoly& delta);

/// {"nodes": [{"id","kind","vector","N","nu","chi"}], "edges": [[u, v]...]}.
Json to_json(const ResolutionGraph& graph);

}  // namespace curvezeta

#endif  // CURVEZETA_SERIALIZE_HPP

#include <curvezeta/serialize.hpp>

#include <limits>

namespace curvezeta {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw TreeJsonError(Diagnostic{path, msg}); }

const char* type_name(const Json& j) {
    if (j.is_number_float()) return "a non-integer number";
    return j.type_name();
}

Integer integer_at(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
    if (j.is_number_integer()) return from_i64(j.get<std::int64_t>());
    fail(path, std::string("expected a 64-bit integer, found ") + type_name(j));
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& path) {
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* key : keys) known = known || k == key;
        if (!known) fail(path + "/" + k, "unknown key \"" + k + "\"");
    }
    for (const char* key : keys)
        if (!obj.contains(key)) fail(path, std::string("missing key \"") + key + "\"");
}

BambooSpec bamboo_from(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, std::string("expected an object, found ") + type_name(j));
    only_keys(j, {"faces"}, path);
    const Json& faces = j["faces"];
    if (!faces.is_array()) fail(path + "/faces", std::string("expected an array, found ") + type_name(faces));
    BambooSpec out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const std::string fp = path + "/faces/" + std::to_string(i);
        const Json& f = faces[i];
        if (!f.is_object()) fail(fp, std::string("expected an object, found ") + type_name(f));
        only_keys(f, {"a", "b", "classes"}, fp);
        FaceSpec face{integer_at(f["a"], fp + "/a"), integer_at(f["b"], fp + "/b"), {}};
        const Json& classes = f["classes"];
        if (!classes.is_array()) fail(fp + "/classes", std::string("expected an array, found ") + type_name(classes));
        for (std::size_t l = 0; l < classes.size(); ++l) {
            const std::string cp = fp + "/classes/" + std::to_string(l);
            const Json& c = classes[l];
            if (c.is_string()) {
                if (c.get<std::string>() != "leaf") fail(cp, "expected \"leaf\" or a bamboo object");
                face.classes.push_back(BranchClass::leaf());
            } else {
                face.classes.push_back(BranchClass::sub(bamboo_from(c, cp)));
            }
        }
        out.faces.push_back(std::move(face));
    }
    return out;
}

Json int_json(const Integer& z) {
    if (z >= 0 && fits_u64(z)) return to_u64(z);
    if (z < 0 && z >= from_i64(std::numeric_limits<std::int64_t>::min())) return static_cast<std::int64_t>(z.get_si());
    throw std::overflow_error("tree integer does not fit in 64 bits: " + z.get_str());
}

}  // namespace

BambooSpec parse_tree_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        fail("", std::string("malformed JSON (byte ") + std::to_string(e.byte) + ")");
    }
    return tree_from_json(j);
}

BambooSpec tree_from_json(const Json& j) { return bamboo_from(j, ""); }

Json tree_to_json(const BambooSpec& tree) {
    Json faces = Json::array();
    for (const auto& f : tree.faces) {
        Json classes = Json::array();
        for (const auto& c : f.classes) classes.push_back(c.is_leaf() ? Json("leaf") : tree_to_json(c.bamboo()));
        Json face;
        face["a"] = int_json(f.a);
        face["b"] = int_json(f.b);
        face["classes"] = std::move(classes);
        faces.push_back(std::move(face));
    }
    Json out;
    out["faces"] = std::move(faces);
    return out;
}

std::string tree_json_text(const BambooSpec& tree) { return tree_to_json(tree).dump(); }

Json to_json(const RationalFunction& z) {
    Json num = Json::array();
    for (const auto& c : z.numerator().coeffs()) num.push_back(c.get_str());
    Json den = Json::array();
    if (z.den_constant() != 1) den.push_back(Json{{"N", "0"}, {"nu", z.den_constant().get_str()}, {"exp", 1}});
    for (const auto& [f, e] : z.factors()) den.push_back(Json{{"N", f.N.get_str()}, {"nu", f.nu.get_str()}, {"exp", e}});
    return Json{{"numerator", std::move(num)}, {"denominator", std::move(den)}};
}

Json to_json(const CycloProduct& z) {
    Json out = Json::array();
    for (const auto& [n, e] : z.factors()) out.push_back(Json{{"n", n}, {"e", e}});
    return out;
}

Json to_json(const CharPoly& delta) {
    Json coeffs = nullptr;
    if (delta.coeffs) {
        coeffs = Json::array();
        for (const auto& c : *delta.coeffs) coeffs.push_back(c.get_str());
    }
    return Json{{"factors", to_json(delta.cyclo)}, {"coeffs", std::move(coeffs)}, {"mu", delta.mu}};
}

Json to_json(const ResolutionGraph& graph) {
    Json nodes = Json::array();
    for (const auto& n : graph.nodes) {
        Json v = nullptr;
        if (n.vector) v = Json::array({n.vector->a().get_str(), n.vector->b().get_str()});
        nodes.push_back(Json{{"id", n.id},
                             {"kind", n.kind == DivisorNode::Kind::Exceptional ? "exceptional" : "branch"},
                             {"vector", std::move(v)},
                             {"N", n.N.get_str()},
                             {"nu", n.nu.get_str()},
                             {"chi", n.chi_open}});
    }
    Json edges = Json::array();
    for (const auto& [u, v] : graph.edges) edges.push_back(Json::array({u, v}));
    return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace curvezeta

#include <curvezeta/equitree.hpp>

namespace curvezeta {

BranchClass BranchClass::sub(BambooSpec bamboo) {
    BranchClass c;
    c.sub_ = std::make_shared<const BambooSpec>(std::move(bamboo));
    return c;
}

namespace {

std::optional<Diagnostic> validate_bamboo(const BambooSpec& bamboo, const std::string& path, bool strict) {
    if (bamboo.faces.empty()) return Diagnostic{path + "/faces", "bamboo has no faces"};
    for (std::size_t i = 0; i < bamboo.faces.size(); ++i) {
        const auto& face = bamboo.faces[i];
        std::string fpath = path + "/faces/" + std::to_string(i);
        Integer min_ab = strict ? 2 : 1;
        if (face.a < min_ab) return Diagnostic{fpath, "a < " + min_ab.get_str()};
        if (face.b < min_ab) return Diagnostic{fpath, "b < " + min_ab.get_str()};
        if (gcd(face.a, face.b) != 1) return Diagnostic{fpath, "gcd(a,b) != 1"};
        if (face.classes.empty()) return Diagnostic{fpath + "/classes", "face has no branch classes"};
        if (i > 0) {
            const auto& prev = bamboo.faces[i - 1];
            if (prev.a * face.b - prev.b * face.a <= 0) return Diagnostic{fpath, "slope order violated"};
        }
        for (std::size_t l = 0; l < face.classes.size(); ++l) {
            if (face.classes[l].is_leaf()) continue;
            auto d = validate_bamboo(face.classes[l].bamboo(), fpath + "/classes/" + std::to_string(l), strict);
            if (d) return d;
        }
    }
    return std::nullopt;
}

struct Annotator {
    std::vector<AnnotatedBamboo>& out;

    void run(const BambooSpec& spec, std::string path, std::optional<std::size_t> parent, std::size_t parent_face,
             std::size_t depth, const Integer& N_root, const Integer& nu_root) {
        std::size_t self = out.size();
        out.emplace_back();
        {
            AnnotatedBamboo& b = out[self];
            b.path = std::move(path);
            b.parent = parent;
            b.parent_face = parent_face;
            b.depth = depth;
            b.N_root = N_root;
            b.nu_root = nu_root;

            const std::size_t k = spec.faces.size();
            b.faces.resize(k);
            for (std::size_t i = 0; i < k; ++i) {
                const auto& fs = spec.faces[i];
                auto& af = b.faces[i];
                af.a = fs.a;
                af.b = fs.b;
                af.multiplicity = 0;
                for (const auto& cls : fs.classes) {
                    af.class_multiplicities.push_back(class_multiplicity(cls));
                    af.multiplicity += af.class_multiplicities.back();
                }
                af.successors.assign(fs.classes.size(), std::nullopt);
            }
            b.alpha.assign(k + 1, 0);
            b.beta.assign(k + 1, 0);
            b.D.assign(k + 1, 0);
            b.alpha[0] = N_root;
            for (std::size_t i = 1; i <= k; ++i) b.alpha[i] = b.alpha[i - 1] + b.faces[i - 1].b * b.faces[i - 1].multiplicity;
            b.beta[k] = 0;
            for (std::size_t i = k; i-- > 0;) b.beta[i] = b.beta[i + 1] + b.faces[i].a * b.faces[i].multiplicity;
            for (std::size_t i = 0; i <= k; ++i) b.D[i] = nu_root * b.beta[i] - b.alpha[i];
            for (std::size_t i = 0; i < k; ++i) {
                auto& af = b.faces[i];
                // Face i (0-based) is P_{i+1}: N = a*alpha_{i+1} + b*beta_{i+1}.
                af.N = af.a * b.alpha[i + 1] + af.b * b.beta[i + 1];
                af.nu = af.a * nu_root + af.b;
            }
        }
        for (std::size_t i = 0; i < spec.faces.size(); ++i) {
            const auto& fs = spec.faces[i];
            for (std::size_t l = 0; l < fs.classes.size(); ++l) {
                if (fs.classes[l].is_leaf()) continue;
                // out may reallocate during recursion; copy the context first.
                Integer N = out[self].faces[i].N;
                Integer nu = out[self].faces[i].nu;
                std::string sub_path = out[self].path + "/faces/" + std::to_string(i) + "/classes/" + std::to_string(l);
                out[self].faces[i].successors[l] = out.size();
                run(fs.classes[l].bamboo(), std::move(sub_path), self, i, depth + 1, N, nu);
            }
        }
    }
};

void collect_leaves(const BambooSpec& bamboo, const std::string& path, std::vector<LeafRef>& out) {
    for (std::size_t i = 0; i < bamboo.faces.size(); ++i) {
        const auto& face = bamboo.faces[i];
        for (std::size_t l = 0; l < face.classes.size(); ++l) {
            if (face.classes[l].is_leaf()) {
                out.push_back({path.empty() ? "/" : path, i, l});
            } else {
                collect_leaves(face.classes[l].bamboo(), path + "/faces/" + std::to_string(i) + "/classes/" + std::to_string(l),
                               out);
            }
        }
    }
}

}  // namespace

std::optional<Diagnostic> validate(const BambooSpec& tree) { return validate_bamboo(tree, "", true); }

Integer class_multiplicity(const BranchClass& cls) {
    if (cls.is_leaf()) return 1;
    Integer total = 0;
    for (const auto& face : cls.bamboo().faces) {
        Integer A = 0;
        for (const auto& c : face.classes) A += class_multiplicity(c);
        total += face.a * A;
    }
    return total;
}

AnnotatedTree annotate(const BambooSpec& tree) {
    if (auto d = validate(tree)) throw TreeError(*d);
    AnnotatedTree t;
    t.spec_ = tree;
    Annotator{t.bamboos_}.run(tree, "", std::nullopt, 0, 1, 0, 1);
    return t;
}

AnnotatedTree annotate_unchecked(const BambooSpec& tree) {
    if (auto d = validate_bamboo(tree, "", false)) throw TreeError(*d);
    AnnotatedTree t;
    t.spec_ = tree;
    Annotator{t.bamboos_}.run(tree, "", std::nullopt, 0, 1, 0, 1);
    return t;
}

std::vector<LeafRef> leaves(const BambooSpec& tree) {
    std::vector<LeafRef> out;
    collect_leaves(tree, "", out);
    return out;
}

BambooSpec all_leaf_bamboo(const std::vector<std::tuple<Integer, Integer, Integer>>& faces) {
    BambooSpec b;
    for (const auto& [a, bb, r] : faces) {
        FaceSpec f{a, bb, {}};
        for (Integer l = 0; l < r; ++l) f.classes.push_back(BranchClass::leaf());
        b.faces.push_back(std::move(f));
    }
    return b;
}

}  // namespace curvezeta

#include <curvezeta/fuzz.hpp>
#include <curvezeta/monodromy.hpp>
#include <curvezeta/resolution.hpp>
#include <curvezeta/serialize.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>

namespace curvezeta {

std::string FuzzConfig::problem() const {
    if (count == 0) return "count must be at least 1";
    if (max_depth == 0 || max_k == 0 || max_classes == 0) return "bounds must be at least 1";
    if (max_ab < 3) return "max_ab must be at least 3 (the smallest pair is (2,3))";
    if (leaf_den == 0 || leaf_num > leaf_den) return "leaf probability must lie in [0,1]";
    return {};
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// k distinct coprime pairs in [2, max_ab]^2, sorted by slope.
std::vector<std::pair<long, long>> random_pairs(std::mt19937_64& rng, const FuzzConfig& cfg) {
    std::vector<std::pair<long, long>> pool;
    for (long a = 2; a <= static_cast<long>(cfg.max_ab); ++a)
        for (long b = 2; b <= static_cast<long>(cfg.max_ab); ++b)
            if (std::gcd(a, b) == 1) pool.emplace_back(a, b);
    std::size_t k = 1 + draw(rng, cfg.max_k);
    k = std::min(k, pool.size());
    for (std::size_t j = 0; j < k; ++j) std::swap(pool[j], pool[j + draw(rng, pool.size() - j)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end(), [](const auto& p, const auto& q) { return p.second * q.first < q.second * p.first; });
    return pool;
}

BambooSpec random_bamboo(std::mt19937_64& rng, const FuzzConfig& cfg, unsigned depth) {
    BambooSpec out;
    for (const auto& [a, b] : random_pairs(rng, cfg)) {
        FaceSpec face{a, b, {}};
        std::size_t r = 1 + draw(rng, cfg.max_classes);
        for (std::size_t l = 0; l < r; ++l) {
            bool leaf = depth >= cfg.max_depth || draw(rng, cfg.leaf_den) < cfg.leaf_num;
            face.classes.push_back(leaf ? BranchClass::leaf() : BranchClass::sub(random_bamboo(rng, cfg, depth + 1)));
        }
        out.faces.push_back(std::move(face));
    }
    return out;
}

std::string show(const RationalFunction& z) { return z.str(); }
std::string show(const CycloProduct& z) { return z.str(); }

template <class T>
void expect_equal(std::vector<std::string>& failures, const char* what, const T& closed, const T& oracle) {
    if (!(closed == oracle)) failures.push_back(std::string(what) + ": closed form " + show(closed) + " != oracle " + show(oracle));
}

void check_graph(std::vector<std::string>& failures, const char* label, const ResolutionGraph& g,
                 const RationalFunction& zeta, const CycloProduct& mon) {
    if (auto s = structure_check(g)) failures.push_back(std::string(label) + " graph: " + *s);
    if (auto v = chain_determinant_check(g))
        failures.push_back(std::string(label) + " graph: chain determinant on edge (" + std::to_string(v->edge.first) + "," +
                           std::to_string(v->edge.second) + ") is " + v->actual.get_str() + ", expected " +
                           v->expected.get_str());
    expect_equal(failures, (std::string(label) + " zeta").c_str(), zeta, definitional_zeta(g));
    expect_equal(failures, (std::string(label) + " monodromy").c_str(), mon, acampo_from_graph(g));
}

// Everything except the closed-form zeta itself, which the caller supplies.
void check_common(std::vector<std::string>& failures, const AnnotatedTree& tree, const RationalFunction& zeta,
                  std::uint64_t ray_seed, std::uint64_t cap) {
    const auto& root = tree.root();
    if (root.faces.front().N != root.faces.front().b * root.beta.front())
        failures.push_back("root bamboo: N(P_1) != b_1 * beta_0");
    for (const auto& bamboo : tree.bamboos()) {
        const auto& last = bamboo.faces.back();
        if (!mpz_divisible_p(last.N.get_mpz_t(), last.a.get_mpz_t()))
            failures.push_back("bamboo " + bamboo.display_path() + ": a_k does not divide N(P_k)");
    }
    if (!mpz_divisible_p(root.faces.front().N.get_mpz_t(), root.faces.front().b.get_mpz_t()))
        failures.push_back("root bamboo: b_1 does not divide N(P_1)");

    CycloProduct mon;
    try {
        mon = monodromy_zeta(tree);
    } catch (const std::exception& e) {
        failures.push_back(std::string("monodromy zeta: ") + e.what());
        return;
    }
    check_graph(failures, "minimal", build_graph(tree), zeta, mon);
    check_graph(failures, "extra-rays", build_graph(tree, BuildStrategy::with_extra_rays(ray_seed)), zeta, mon);

    std::set<Rational> candidates;
    for (const auto& c : candidate_poles(tree)) candidates.insert(c.value);
    for (const auto& p : poles(zeta))
        if (!candidates.count(p.value)) failures.push_back("pole " + to_string(p.value) + " is not a candidate");

    try {
        CharPoly delta = characteristic_poly(mon, cap);
        auto cert = cyclotomic_certificate(delta);
        if (!cert.valid) failures.push_back("Delta has no valid cyclotomic decomposition");
        if (delta.coeffs) {
            const auto& c = *delta.coeffs;
            if (!delta.is_palindromic()) failures.push_back("Delta is not palindromic");
            if (c.size() != delta.mu + 1) failures.push_back("Delta has the wrong degree");
            if (c.back() != cert.palindrome_sign * c.front()) failures.push_back("Delta palindrome sign disagrees with (-1)^{m_1}");
        }
        auto report = verify_conjecture(zeta, delta);
        for (const auto& v : report.verdicts)
            if (!v.check.holds) failures.push_back("monodromy conjecture fails at pole " + to_string(v.pole.value));
    } catch (const NotAPolynomial& e) {
        failures.push_back(e.what());
    }
}

}  // namespace

BambooSpec random_tree(std::mt19937_64& rng, const FuzzConfig& cfg) { return random_bamboo(rng, cfg, 1); }

std::vector<FaceTriple> random_faces(std::mt19937_64& rng, const FuzzConfig& cfg) {
    std::vector<FaceTriple> out;
    for (const auto& [a, b] : random_pairs(rng, cfg)) out.push_back({a, b, 1 + static_cast<long>(draw(rng, cfg.max_classes))});
    return out;
}

std::string tree_hash(const BambooSpec& tree) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tree_json_text(tree)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> check_tree(const BambooSpec& spec, std::uint64_t ray_seed, std::uint64_t cap) {
    std::vector<std::string> failures;
    try {
        AnnotatedTree tree = annotate(spec);
        check_common(failures, tree, zeta_general(tree), ray_seed, cap);
    } catch (const std::exception& e) {
        failures.push_back(std::string("exception: ") + e.what());
    }
    return failures;
}

std::vector<std::string> check_faces(const std::vector<FaceTriple>& faces, std::uint64_t ray_seed, std::uint64_t cap) {
    std::vector<std::string> failures;
    try {
        std::vector<std::tuple<Integer, Integer, Integer>> raw;
        for (const auto& f : faces) raw.emplace_back(f.a, f.b, f.r);
        AnnotatedTree tree = annotate_unchecked(all_leaf_bamboo(raw));
        RationalFunction zeta = zeta_nondegenerate(faces);
        expect_equal(failures, "nondegenerate vs general zeta", zeta, zeta_general(tree));
        check_common(failures, tree, zeta, ray_seed, cap);
    } catch (const std::exception& e) {
        failures.push_back(std::string("exception: ") + e.what());
    }
    return failures;
}

FuzzSummary run_fuzz(const FuzzConfig& cfg, const std::string& dump_dir) {
    FuzzSummary summary;
    std::mt19937_64 master(cfg.seed);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        InstanceResult r;
        r.index = i;
        r.seed = master();
        std::mt19937_64 rng(r.seed);
        r.tree = random_tree(rng, cfg);
        r.hash = tree_hash(r.tree);
        r.failures = check_tree(r.tree, r.seed ^ 0x9e3779b97f4a7c15ULL, cfg.expansion_cap);
        try {
            r.mu = characteristic_poly(monodromy_zeta(annotate(r.tree)), 0).mu;
        } catch (const std::exception&) {
        }
        if (r.passed()) {
            ++summary.passed;
        } else {
            ++summary.failed;
            if (!dump_dir.empty()) {
                Json dump{{"config_seed", cfg.seed}, {"index", i}, {"instance_seed", r.seed}, {"hash", r.hash},
                          {"tree", tree_to_json(r.tree)}, {"failures", r.failures}};
                std::ofstream(dump_dir + "/fuzz-fail-" + r.hash + ".json") << dump.dump(2) << "\n";
            }
        }
        summary.instances.push_back(std::move(r));
    }
    return summary;
}

}  // namespace curvezeta

#include <curvezeta/cli.hpp>
#include <curvezeta/frontend.hpp>
#include <curvezeta/fuzz.hpp>
#include <curvezeta/monodromy.hpp>
#include <curvezeta/resolution.hpp>
#include <curvezeta/zeta.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace curvezeta {

namespace {

std::string delta_text(const CharPoly& delta) {
    if (!delta.coeffs) return delta.cyclo.str() + " (not expanded)";
    std::string out;
    const auto& c = *delta.coeffs;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        Integer mag = abs(c[j]);
        if (out.empty())
            out += c[j] < 0 ? "-" : "";
        else
            out += c[j] < 0 ? " - " : " + ";
        std::string mono = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
        if (mag != 1 || mono.empty()) out += mag.get_str();
        out += mono;
    }
    return out.empty() ? "0" : out;
}

struct OracleResult {
    std::vector<std::string> mismatches;
    Json json;
};

// Closed forms against both the minimal and an extra-rays resolution graph.
OracleResult run_oracle(const AnnotatedTree& tree, const RationalFunction& zeta, const CycloProduct& mon,
                        const std::optional<CycloProduct>& mon_alt) {
    OracleResult r;
    Json graphs = Json::array();
    for (auto strategy : {BuildStrategy::minimal(), BuildStrategy::with_extra_rays(0)}) {
        const char* name = strategy.kind == BuildStrategy::Kind::Minimal ? "minimal" : "extra_rays";
        ResolutionGraph g = build_graph(tree, strategy);
        RationalFunction dz = definitional_zeta(g);
        CycloProduct am = acampo_from_graph(g);
        auto structure = structure_check(g);
        auto chain = chain_determinant_check(g);
        bool zeta_ok = dz == zeta, mon_ok = am == mon;
        if (!zeta_ok) r.mismatches.push_back(std::string(name) + ": definitional zeta " + dz.str());
        if (!mon_ok) r.mismatches.push_back(std::string(name) + ": A'Campo product " + am.str());
        if (structure) r.mismatches.push_back(std::string(name) + ": " + *structure);
        if (chain)
            r.mismatches.push_back(std::string(name) + ": chain determinant " + chain->actual.get_str() + " != " +
                                   chain->expected.get_str());
        graphs.push_back(Json{{"graph", name},
                              {"exceptional_divisors", g.exceptional_count()},
                              {"zeta", zeta_ok ? "equal" : "different"},
                              {"monodromy_zeta", mon_ok ? "equal" : "different"},
                              {"chain_determinants", chain ? "violated" : "ok"},
                              {"structure", structure ? *structure : "ok"}});
    }
    if (mon_alt && !(*mon_alt == mon)) r.mismatches.push_back("closed-form monodromy zeta " + mon_alt->str());
    r.json = Json{{"verdict", r.mismatches.empty() ? "equal" : "mismatch"}, {"graphs", std::move(graphs)},
                  {"mismatches", r.mismatches}};
    return r;
}

// Shared tail of both pipelines.
Report assemble(Json input, std::string input_text, const AnnotatedTree& tree, const RationalFunction& zeta,
                const CycloProduct& mon, const std::optional<OracleResult>& oracle) {
    Report rep;
    CharPoly delta;
    try {
        delta = characteristic_poly(mon);
    } catch (const NotAPolynomial& e) {
        rep.exit_code = kConsistency;
        rep.json = Json{{"input", std::move(input)}, {"error", e.what()}};
        rep.text = std::string("error: ") + e.what() + "\n";
        return rep;
    }
    auto cands = candidate_poles(tree);
    auto pole_list = poles(zeta);
    ConjectureReport conj = verify_conjecture(zeta, delta);

    std::ostringstream t;
    t << "input: " << input_text << "\n";
    t << "Z_top(s) = " << zeta.str() << "\n";
    t << "poles:\n";
    Json jp = Json::array();
    for (const auto& p : pole_list) {
        Json prov = Json::array();
        std::string ptext;
        for (const auto& c : cands) {
            if (c.value != p.value) continue;
            if (c.universal()) {
                prov.push_back(Json{{"source", "universal"}});
                ptext += ptext.empty() ? "universal" : ", universal";
            } else {
                prov.push_back(Json{{"source", "principal"}, {"bamboo", c.bamboo_path}, {"face", c.face}});
                ptext += (ptext.empty() ? "" : ", ") + std::string("P") + std::to_string(c.face) + " of bamboo " + c.bamboo_path;
            }
        }
        if (ptext.empty()) ptext = "no candidate";
        t << "  " << to_string(p.value) << "  order " << p.order << "  (" << ptext << ")\n";
        jp.push_back(Json{{"value", to_string(p.value)}, {"order", p.order}, {"provenance", std::move(prov)}});
    }
    t << "Z_mon(t) = " << mon.str() << "\n";
    t << "Delta(t) = " << delta_text(delta) << "\n";
    t << "Milnor number: " << delta.mu << "\n";
    t << "monodromy conjecture: " << (conj.holds() ? "holds" : "fails") << "\n";
    Json certs = Json::array();
    for (const auto& v : conj.verdicts) {
        const auto& c = v.check;
        t << "  " << to_string(v.pole.value) << ": exp(2 pi i s) has order " << c.order;
        if (c.via_h0)
            t << ", eigenvalue 1 on H^0";
        else
            t << ", multiplicity " << c.multiplicity << " in Delta";
        t << (c.holds ? "" : "  FAILS") << "\n";
        certs.push_back(Json{{"pole", to_string(v.pole.value)},
                             {"holds", c.holds},
                             {"root_order", c.order},
                             {"via_h0", c.via_h0},
                             {"multiplicity", c.multiplicity},
                             {"contributing", c.contributing}});
    }
    rep.json = Json{{"input", std::move(input)},
                    {"zeta", to_json(zeta)},
                    {"zeta_text", zeta.str()},
                    {"poles", std::move(jp)},
                    {"monodromy_zeta", to_json(mon)},
                    {"delta", to_json(delta)},
                    {"milnor_number", delta.mu},
                    {"conjecture", Json{{"verdict", conj.holds() ? "holds" : "fails"}, {"certificates", std::move(certs)}}}};
    if (!conj.holds()) rep.exit_code = kConsistency;
    if (oracle) {
        rep.json["oracle_check"] = oracle->json;
        t << "oracle check: " << (oracle->mismatches.empty() ? "equal" : "MISMATCH") << "\n";
        for (const auto& m : oracle->mismatches) t << "  " << m << "\n";
        if (!oracle->mismatches.empty()) rep.exit_code = kConsistency;
    }
    rep.text = t.str();
    return rep;
}

Report error_report(int code, const std::string& kind, const std::string& message, Json extra = Json::object()) {
    Report rep;
    rep.exit_code = code;
    rep.json = Json{{"error", kind}, {"message", message}};
    for (auto& [k, v] : extra.items()) rep.json[k] = v;
    rep.text = "error: " + message + "\n";
    return rep;
}

}  // namespace

Report tree_report(const BambooSpec& spec, bool oracle) {
    AnnotatedTree tree;
    try {
        tree = annotate(spec);
    } catch (const TreeError& e) {
        return error_report(kInvalidInput, "invalid tree", e.what(), Json{{"path", e.diagnostic.path}});
    }
    try {
        RationalFunction zeta = zeta_general(tree);
        CycloProduct mon = monodromy_zeta(tree);
        std::optional<OracleResult> o;
        if (oracle) o = run_oracle(tree, zeta, mon, std::nullopt);
        return assemble(Json{{"kind", "tree"}, {"tree", tree_to_json(spec)}}, tree_json_text(spec), tree, zeta, mon, o);
    } catch (const std::overflow_error& e) {
        return error_report(kInvalidInput, "too large", e.what());
    } catch (const std::logic_error& e) {
        return error_report(kConsistency, "internal consistency", e.what());
    }
}

Report poly_report(const std::string& expr, bool oracle) {
    SparsePoly f;
    std::vector<NewtonFace> faces;
    try {
        f = parse_poly(expr);
        faces = newton_faces(f);
    } catch (const ParseError& e) {
        return error_report(kInvalidInput, "parse error", e.what(), Json{{"position", e.position}});
    } catch (const FrontendError& e) {
        return error_report(kInvalidInput, "unsupported polynomial", e.what());
    }
    auto nd = nondegeneracy_check(faces);
    if (!nd.nondegenerate) {
        const auto& face = faces[nd.face];
        std::string msg = "degenerate: face " + std::to_string(nd.face + 1) + " with normal " + face.normal.str() +
                          " has face polynomial G(z) = " + to_string(face.face_poly, "z") +
                          " with repeated root factor gcd(G, G') = " + to_string(nd.witness, "z");
        return error_report(kDegenerate, "degenerate", msg,
                            Json{{"face", nd.face + 1},
                                 {"normal", Json::array({face.normal.a().get_str(), face.normal.b().get_str()})},
                                 {"face_polynomial", to_string(face.face_poly, "z")},
                                 {"witness", to_string(nd.witness, "z")}});
    }
    try {
        auto specs = to_face_specs(faces);
        AnnotatedTree tree = nondegenerate_tree(specs);
        RationalFunction zeta = zeta_nondegenerate(specs);
        CycloProduct mon = acampo_from_graph(build_graph(tree));
        Json jf = Json::array();
        for (const auto& s : specs) jf.push_back(Json{{"a", s.a.get_str()}, {"b", s.b.get_str()}, {"r", s.r.get_str()}});
        std::optional<OracleResult> o;
        if (oracle) {
            o = run_oracle(tree, zeta, mon, monodromy_zeta(tree));
            if (!(zeta_general(tree) == zeta)) {
                o->mismatches.push_back("tree closed form " + zeta_general(tree).str());
                o->json["verdict"] = "mismatch";
                o->json["mismatches"] = o->mismatches;
            }
        }
        return assemble(Json{{"kind", "polynomial"}, {"polynomial", to_string(f)}, {"faces", std::move(jf)}},
                        to_string(f), tree, zeta, mon, o);
    } catch (const std::overflow_error& e) {
        return error_report(kInvalidInput, "too large", e.what());
    } catch (const std::logic_error& e) {
        return error_report(kConsistency, "internal consistency", e.what());
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Topological zeta functions and monodromy of plane curve singularities"};
    app.require_subcommand(1);

    std::string tree_path;
    bool json = false, oracle = false;
    auto* tree_cmd = app.add_subcommand("tree", "Report for an equisingularity tree given as JSON");
    tree_cmd->add_option("path", tree_path, "Tree JSON file")->required();
    tree_cmd->add_flag("--json", json, "JSON output");
    tree_cmd->add_flag("--oracle", oracle, "Compare with the resolution-graph oracle");

    std::string expr;
    auto* poly_cmd = app.add_subcommand("poly", "Report for a Newton-nondegenerate polynomial in x, y");
    poly_cmd->add_option("expr", expr, "Polynomial, e.g. \"y^2-x^3\"")->required();
    poly_cmd->add_flag("--json", json, "JSON output");
    poly_cmd->add_flag("--oracle", oracle, "Compare with the resolution-graph oracle");

    FuzzConfig cfg;
    std::string dump_dir = ".";
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential test on seeded random trees");
    fuzz_cmd->add_option("--count", cfg.count, "Number of trees")->required();
    fuzz_cmd->add_option("--seed", cfg.seed, "Seed")->required();
    fuzz_cmd->add_option("--max-depth", cfg.max_depth, "Bamboo levels (default 3)");
    fuzz_cmd->add_option("--max-k", cfg.max_k, "Faces per bamboo (default 3)");
    fuzz_cmd->add_option("--max-ab", cfg.max_ab, "Bound on a and b (default 9)");
    fuzz_cmd->add_option("--expansion-cap", cfg.expansion_cap, "Largest Milnor number whose Delta is expanded");
    fuzz_cmd->add_option("--dump-dir", dump_dir, "Directory for failing instances (default .)");
    fuzz_cmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto emit = [&](const Report& rep) {
        if (json)
            out << rep.json.dump(2) << "\n";
        else if (rep.exit_code == kOk || rep.json.contains("zeta"))
            out << rep.text;
        if (rep.exit_code != kOk) err << rep.text;
        return rep.exit_code;
    };

    if (*tree_cmd) {
        std::ifstream in(tree_path, std::ios::binary);
        if (!in) return emit(error_report(kInvalidInput, "io", "cannot read " + tree_path));
        std::stringstream buf;
        buf << in.rdbuf();
        BambooSpec spec;
        try {
            spec = parse_tree_json(buf.str());
        } catch (const TreeJsonError& e) {
            return emit(error_report(kInvalidInput, "invalid tree JSON", e.what(), Json{{"path", e.diagnostic.path}}));
        }
        return emit(tree_report(spec, oracle));
    }
    if (*poly_cmd) return emit(poly_report(expr, oracle));

    if (auto problem = cfg.problem(); !problem.empty()) {
        err << "usage error: " << problem << "\n";
        return kUsage;
    }
    FuzzSummary s = run_fuzz(cfg, dump_dir);
    if (json) {
        Json inst = Json::array();
        for (const auto& r : s.instances)
            inst.push_back(Json{{"index", r.index}, {"seed", r.seed}, {"hash", r.hash}, {"mu", r.mu},
                                {"passed", r.passed()}, {"failures", r.failures}});
        out << Json{{"config", Json{{"count", cfg.count}, {"seed", cfg.seed}, {"max_depth", cfg.max_depth},
                                    {"max_k", cfg.max_k}, {"max_ab", cfg.max_ab}, {"max_classes", cfg.max_classes}}},
                    {"instances", std::move(inst)},
                    {"passed", s.passed},
                    {"failed", s.failed}}
                   .dump(2)
            << "\n";
    } else {
        out << "fuzz: count=" << cfg.count << " seed=" << cfg.seed << " max_depth=" << cfg.max_depth
            << " max_k=" << cfg.max_k << " max_ab=" << cfg.max_ab << "\n";
        for (const auto& r : s.instances) {
            out << "#" << r.index << " " << r.hash << " mu=" << r.mu << " " << (r.passed() ? "pass" : "FAIL") << "\n";
            for (const auto& f : r.failures) out << "    " << f << "\n";
        }
        out << "passed " << s.passed << "/" << cfg.count << ", failed " << s.failed << "\n";
        if (s.failed) out << "failing instances written to " << dump_dir << "\n";
    }
    return s.failed ? kConsistency : kOk;
}

}  // namespace curvezeta

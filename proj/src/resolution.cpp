#include <curvezeta/resolution.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace curvezeta {

std::size_t ResolutionGraph::exceptional_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const DivisorNode& n) {
        return n.kind == DivisorNode::Kind::Exceptional;
    }));
}

std::vector<std::size_t> ResolutionGraph::degrees() const {
    std::vector<std::size_t> deg(nodes.size(), 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

namespace {

// Kept separate from class_multiplicity() in equitree on purpose: the oracle
// derives everything it needs from the raw faces.
Integer oracle_multiplicity(const BranchClass& cls) {
    if (cls.is_leaf()) return 1;
    Integer total = 0;
    for (const auto& face : cls.bamboo().faces) {
        Integer A = 0;
        for (const auto& c : face.classes) A += oracle_multiplicity(c);
        total += face.a * A;
    }
    return total;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Subdivision add_random_rays(Subdivision sub, int count, std::mt19937_64& rng) {
    for (int r = 0; r < count; ++r) {
        auto rays = sub.with_frames();
        std::size_t j = draw(rng, rays.size() - 1);
        Integer p = 1 + static_cast<long>(draw(rng, 3));
        Integer q = 1 + static_cast<long>(draw(rng, 3));
        if (gcd(p, q) != 1) q = 1;
        PrimitiveVector w = primitive_part(p * rays[j].a() + q * rays[j + 1].a(), p * rays[j].b() + q * rays[j + 1].b());
        PrimitiveVector extra[] = {w};
        sub = insert_rays(sub, extra);
    }
    return sub;
}

struct Builder {
    const AnnotatedTree& tree;
    BuildStrategy strategy;
    std::mt19937_64 rng;
    ResolutionGraph g;
    std::size_t next_bamboo = 0;

    std::size_t add_node(DivisorNode n) {
        n.id = g.nodes.size();
        g.nodes.push_back(std::move(n));
        return g.nodes.back().id;
    }

    void bamboo(const BambooSpec& spec, const Integer& N_root, const Integer& nu_root, std::optional<std::size_t> root_node) {
        const std::size_t self = next_bamboo++;
        const std::size_t k = spec.faces.size();
        std::vector<Integer> A(k, 0);
        std::vector<PrimitiveVector> principal;
        for (std::size_t i = 0; i < k; ++i) {
            for (const auto& c : spec.faces[i].classes) A[i] += oracle_multiplicity(c);
            principal.emplace_back(spec.faces[i].a, spec.faces[i].b);
        }

        Subdivision sub = admissible_subdivision(principal);
        if (strategy.kind == BuildStrategy::Kind::WithExtraRays) sub = add_random_rays(sub, strategy.extra_rays, rng);

        BambooChain chain;
        chain.bamboo = self;
        chain.root_node = root_node;
        chain.expected_D = tree.bamboos().at(self).D;

        std::vector<std::size_t> principal_node(k);
        for (const auto& T : sub.vectors()) {
            const Integer& c = T.a();
            const Integer& d = T.b();
            DivisorNode n;
            n.kind = DivisorNode::Kind::Exceptional;
            n.vector = T;
            n.N = c * N_root;
            for (std::size_t t = 0; t < k; ++t) {
                Integer lhs = c * principal[t].b();
                Integer rhs = d * principal[t].a();
                n.N += A[t] * (lhs < rhs ? lhs : rhs);
            }
            n.nu = c * nu_root + d;
            n.bamboo = self;
            std::size_t seg = 0;
            for (std::size_t t = 0; t < k; ++t) {
                if (det(principal[t], T) >= 0) seg = t + 1;
                if (principal[t] == T) n.principal = t + 1;
            }
            std::size_t id = add_node(std::move(n));
            if (g.nodes[id].principal) principal_node[g.nodes[id].principal - 1] = id;
            if (!chain.nodes.empty()) g.edges.emplace_back(chain.nodes.back(), id);
            chain.nodes.push_back(id);
            chain.segment.push_back(seg);
        }
        if (root_node) g.edges.emplace_back(*root_node, chain.nodes.front());
        g.chains.push_back(std::move(chain));

        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t pid = principal_node[i];
            for (const auto& cls : spec.faces[i].classes) {
                if (cls.is_leaf()) {
                    DivisorNode br;
                    br.kind = DivisorNode::Kind::Branch;
                    br.N = 1;
                    br.nu = 1;
                    br.bamboo = self;
                    std::size_t id = add_node(std::move(br));
                    g.edges.emplace_back(pid, id);
                } else {
                    Integer N = g.nodes[pid].N;
                    Integer nu = g.nodes[pid].nu;
                    bamboo(cls.bamboo(), N, nu, pid);
                }
            }
        }
    }
};

}  // namespace

ResolutionGraph build_graph(const AnnotatedTree& tree, BuildStrategy strategy) {
    Builder b{tree, strategy, std::mt19937_64(strategy.seed), {}, 0};
    b.bamboo(tree.spec(), 0, 1, std::nullopt);
    auto deg = b.g.degrees();
    for (auto& n : b.g.nodes)
        n.chi_open = n.kind == DivisorNode::Kind::Exceptional ? 2 - static_cast<long>(deg[n.id]) : 0;
    return std::move(b.g);
}

RationalFunction definitional_zeta(const ResolutionGraph& graph) {
    // Terms are emitted in node order so chain neighbours end up adjacent in
    // the pairwise sum.
    std::vector<std::vector<std::size_t>> edges_at(graph.nodes.size());
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        auto [u, v] = graph.edges[e];
        edges_at[std::max(u, v)].push_back(e);
    }
    auto factor = [&](std::size_t id) { return LinearFactor{graph.nodes[id].N, graph.nodes[id].nu}; };

    std::vector<RationalFunction> terms;
    for (const auto& node : graph.nodes) {
        if (node.kind == DivisorNode::Kind::Exceptional && node.chi_open != 0)
            terms.push_back(RationalFunction::term(node.chi_open, {factor(node.id)}));
        for (auto e : edges_at[node.id]) {
            auto [u, v] = graph.edges[e];
            // Branch-only strata lie off the exceptional set; every edge here
            // has an exceptional endpoint.
            if (graph.nodes[u].kind == DivisorNode::Kind::Branch && graph.nodes[v].kind == DivisorNode::Kind::Branch)
                continue;
            terms.push_back(RationalFunction::term(1, {factor(u), factor(v)}));
        }
    }
    return sum(std::move(terms));
}

std::optional<ChainViolation> chain_determinant_check(const ResolutionGraph& graph) {
    for (const auto& chain : graph.chains) {
        std::vector<std::size_t> seq;
        std::vector<std::size_t> seg;
        if (chain.root_node) {
            seq.push_back(*chain.root_node);
            seg.push_back(0);
        }
        seq.insert(seq.end(), chain.nodes.begin(), chain.nodes.end());
        seg.insert(seg.end(), chain.segment.begin(), chain.segment.end());
        for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
            const auto& cur = graph.nodes[seq[j]];
            const auto& nxt = graph.nodes[seq[j + 1]];
            Integer actual = nxt.N * cur.nu - cur.N * nxt.nu;
            const Integer& expected = chain.expected_D.at(seg[j]);
            if (actual != expected) return ChainViolation{{seq[j], seq[j + 1]}, expected, actual};
        }
    }
    return std::nullopt;
}

std::optional<std::string> structure_check(const ResolutionGraph& graph) {
    const std::size_t n = graph.nodes.size();
    if (n == 0) return "empty graph";
    if (graph.edges.size() + 1 != n) return "edge count is not node count - 1";
    std::vector<std::size_t> parent(n);
    for (std::size_t j = 0; j < n; ++j) parent[j] = j;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : graph.edges) {
        auto ru = find(u), rv = find(v);
        if (ru == rv) return "graph has a cycle";
        parent[ru] = rv;
    }
    auto deg = graph.degrees();
    long chi_sum = 0;
    for (const auto& node : graph.nodes) {
        if (node.kind == DivisorNode::Kind::Branch) {
            if (deg[node.id] != 1) return "branch node " + std::to_string(node.id) + " does not have degree 1";
            if (node.N != 1 || node.nu != 1) return "branch node " + std::to_string(node.id) + " is not (1,1)";
            continue;
        }
        if (node.chi_open != 2 - static_cast<long>(deg[node.id]))
            return "chi of node " + std::to_string(node.id) + " is not 2 - degree";
        chi_sum += node.chi_open;
    }
    for (const auto& [u, v] : graph.edges) {
        const auto& a = graph.nodes[u];
        const auto& b = graph.nodes[v];
        const DivisorNode* br = a.kind == DivisorNode::Kind::Branch ? &a : (b.kind == DivisorNode::Kind::Branch ? &b : nullptr);
        if (br) {
            const DivisorNode& other = br == &a ? b : a;
            if (other.kind != DivisorNode::Kind::Exceptional || other.principal == 0)
                return "branch node " + std::to_string(br->id) + " is not attached to a principal divisor";
        }
        ++chi_sum;  // every intersection point lies on the exceptional set
    }
    const long expected = static_cast<long>(graph.exceptional_count()) + 1;
    if (chi_sum != expected)
        return "Euler characteristic of the exceptional set is " + std::to_string(chi_sum) + ", expected " +
               std::to_string(expected);
    return std::nullopt;
}

}  // namespace curvezeta

#include "gaingraph/switching.hpp"

#include <algorithm>
#include <queue>

#include "gaingraph/errors.hpp"

namespace gaingraph {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Forest {
    std::vector<std::size_t> parent;
    std::vector<std::size_t> depth;
    std::vector<Gain> potential;
    std::vector<std::size_t> component;
    std::size_t component_count = 0;
    std::vector<std::size_t> bfs_edges;  // edges in the order BFS meets them
};

Forest spanning_forest(const GainGraph& g) {
    const std::size_t n = g.vertex_count();
    Forest f;
    f.parent.assign(n, kNone);
    f.depth.assign(n, 0);
    f.potential.assign(n, Gain{});
    f.component.assign(n, kNone);
    std::vector<bool> edge_seen(g.edge_count(), false);
    for (std::size_t root = 0; root < n; ++root) {
        if (f.component[root] != kNone) continue;
        f.component[root] = f.component_count;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            for (const Incidence& inc : g.neighbors(x)) {
                if (!edge_seen[inc.edge]) {
                    edge_seen[inc.edge] = true;
                    f.bfs_edges.push_back(inc.edge);
                }
                std::size_t y = inc.neighbor;
                if (f.component[y] != kNone) continue;
                f.component[y] = f.component_count;
                f.parent[y] = x;
                f.depth[y] = f.depth[x] + 1;
                // theta(x)^-1 theta(y) = phi(e_xy)
                f.potential[y] = f.potential[x] * g.gain(x, y);
                q.push(y);
            }
        }
        ++f.component_count;
    }
    return f;
}

bool edge_satisfied(const Forest& f, const Edge& e, double tol) {
    Gain discrepancy = f.potential[e.u].inverse() * f.potential[e.v] * e.gain.inverse();
    return discrepancy.is_neutral(tol);
}

/// Closed walk a -> ... -> b (tree path) -> a (the cotree edge).
std::vector<std::size_t> witness_walk(const Forest& f, std::size_t a, std::size_t b) {
    std::vector<std::size_t> up_a{a};
    std::vector<std::size_t> up_b{b};
    std::size_t x = a;
    std::size_t y = b;
    while (f.depth[x] > f.depth[y]) up_a.push_back(x = f.parent[x]);
    while (f.depth[y] > f.depth[x]) up_b.push_back(y = f.parent[y]);
    while (x != y) {
        up_a.push_back(x = f.parent[x]);
        up_b.push_back(y = f.parent[y]);
    }
    // up_a ends at the common ancestor; append up_b reversed without it.
    std::vector<std::size_t> walk = up_a;
    for (auto it = up_b.rbegin() + 1; it != up_b.rend(); ++it) walk.push_back(*it);
    walk.push_back(a);
    return walk;
}

}  // namespace

SwitchingFunction SwitchingFunction::inverse() const {
    SwitchingFunction out;
    for (const Gain& z : values) out.values.push_back(z.inverse());
    return out;
}

SwitchingFunction operator*(const SwitchingFunction& a, const SwitchingFunction& b) {
    if (a.size() != b.size()) throw GraphError("switching functions of different sizes");
    SwitchingFunction out;
    for (std::size_t i = 0; i < a.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
    return out;
}

GainGraph apply_switch(const GainGraph& g, const SwitchingFunction& zeta) {
    if (zeta.size() != g.vertex_count()) throw GraphError("switching function length does not match vertex count");
    std::vector<Gain> gains;
    gains.reserve(g.edge_count());
    for (const Edge& e : g.edges()) gains.push_back(zeta.values[e.u].inverse() * e.gain * zeta.values[e.v]);
    return g.with_gains(gains);
}

BalanceCertificate balance_certificate(const GainGraph& g, double tol) {
    Forest f = spanning_forest(g);
    BalanceCertificate cert;
    for (std::size_t idx : f.bfs_edges) {
        const Edge& e = g.edge(idx);
        if (edge_satisfied(f, e, tol)) continue;
        cert.balanced = false;
        cert.witness_cycle = witness_walk(f, e.u, e.v);
        cert.witness_gain = gain_of_walk(g, cert.witness_cycle);
        return cert;
    }
    cert.balanced = true;
    cert.potential = std::move(f.potential);
    return cert;
}

std::vector<bool> component_balance(const GainGraph& g, double tol) {
    Forest f = spanning_forest(g);
    std::vector<bool> balanced(f.component_count, true);
    for (const Edge& e : g.edges())
        if (!edge_satisfied(f, e, tol)) balanced[f.component[e.u]] = false;
    return balanced;
}

std::size_t balanced_component_count(const GainGraph& g, double tol) {
    auto flags = component_balance(g, tol);
    return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
}

SwitchingEquivalence switching_equivalent(const GainGraph& g1, const GainGraph& g2, double tol) {
    BalanceCertificate cert = balance_certificate(gain_quotient(g1, g2), tol);
    SwitchingEquivalence out;
    out.equivalent = cert.balanced;
    if (cert.balanced) out.zeta.values = std::move(cert.potential);
    return out;
}

bool equivalent_to_all_negative(const GainGraph& g, double tol) { return balance_certificate(negate_gains(g), tol).balanced; }

std::size_t rank_prediction(const GainGraph& g, double tol) { return g.vertex_count() - balanced_component_count(g, tol); }

}  // namespace gaingraph

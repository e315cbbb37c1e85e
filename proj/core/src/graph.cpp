#include "gaingraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>

#include "gaingraph/errors.hpp"

namespace gaingraph {

GainGraph::GainGraph(std::size_t n, std::span<const Edge> edges) : n_(n), adjacency_(n) {
    std::unordered_set<std::size_t> seen;
    edges_.reserve(edges.size());
    for (const Edge& in : edges) {
        if (in.u >= n || in.v >= n)
            throw GraphError("edge (" + std::to_string(in.u) + "," + std::to_string(in.v) +
                             ") out of range for n=" + std::to_string(n));
        if (in.u == in.v) throw GraphError("loop at vertex " + std::to_string(in.u));
        Edge e = in.u < in.v ? in : Edge{in.v, in.u, in.gain.inverse()};
        if (!seen.insert(e.u * n + e.v).second)
            throw GraphError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        adjacency_[e.u].push_back({e.v, edges_.size()});
        adjacency_[e.v].push_back({e.u, edges_.size()});
        edges_.push_back(e);
    }
}

GainGraph build_graph(std::size_t n, std::span<const Edge> edges) { return GainGraph(n, edges); }

std::optional<std::size_t> GainGraph::find_edge(std::size_t a, std::size_t b) const {
    if (a >= n_ || b >= n_) return std::nullopt;
    const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    std::size_t other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    for (const Incidence& inc : list)
        if (inc.neighbor == other) return inc.edge;
    return std::nullopt;
}

Gain GainGraph::gain(std::size_t a, std::size_t b) const {
    auto idx = find_edge(a, b);
    if (!idx) throw GraphError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    const Edge& e = edges_[*idx];
    return e.u == a ? e.gain : e.gain.inverse();
}

std::size_t GainGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
}

GainGraph GainGraph::with_gains(std::span<const Gain> gains) const {
    if (gains.size() != edges_.size()) throw GraphError("gain count does not match edge count");
    GainGraph out = *this;
    for (std::size_t i = 0; i < gains.size(); ++i) out.edges_[i].gain = gains[i];
    return out;
}

bool GainGraph::same_underlying_graph(const GainGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return other.has_edge(e.u, e.v); });
}

DegreeProfile degree_profile(const GainGraph& g) {
    const std::size_t n = g.vertex_count();
    DegreeProfile p;
    p.degree.resize(n);
    p.net_degree.assign(n, Complex{});
    p.gain_degree.resize(n);
    p.average_2_degree.assign(n, 0.0);
    std::set<Gain> used;
    for (std::size_t j = 0; j < n; ++j) {
        p.degree[j] = g.degree(j);
        for (const Incidence& inc : g.neighbors(j)) {
            Gain out = g.gain(j, inc.neighbor);
            ++p.gain_degree[j][out];
            used.insert(out);
        }
        // net degree = sum over used gains of gain * g-degree
        for (const auto& [gain, count] : p.gain_degree[j]) p.net_degree[j] += gain.value() * static_cast<double>(count);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (p.degree[j] == 0) continue;
        double sum = 0.0;
        for (const Incidence& inc : g.neighbors(j)) sum += static_cast<double>(p.degree[inc.neighbor]);
        p.average_2_degree[j] = sum / static_cast<double>(p.degree[j]);
    }
    p.max_degree = g.max_degree();
    p.used_gains.assign(used.begin(), used.end());
    return p;
}

Gain gain_of_walk(const GainGraph& g, std::span<const std::size_t> walk) {
    Gain total;
    for (std::size_t i = 1; i < walk.size(); ++i) total *= g.gain(walk[i - 1], walk[i]);
    return total;
}

GainGraph delete_edge(const GainGraph& g, std::size_t u, std::size_t v) {
    auto idx = g.find_edge(u, v);
    if (!idx) throw GraphError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "} to delete");
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - 1);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (i != *idx) kept.push_back(g.edge(i));
    return GainGraph(g.vertex_count(), kept);
}

InversePairPartition inverse_pair_partition(const GainGraph& g) {
    // Key: the smaller of the two fixed-point angles in {g, g^-1}.
    std::map<std::uint64_t, InversePair> groups;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        Gain a = g.edge(i).gain;
        Gain rep = std::min(a, a.inverse());
        auto [it, inserted] = groups.try_emplace(rep.fixed());
        if (inserted) {
            it->second.representative = rep;
            it->second.self_paired = rep.is_self_inverse();
        }
        it->second.edge_indices.push_back(i);
    }
    InversePairPartition out;
    for (auto& [key, pair] : groups) {
        std::vector<Edge> edges;
        for (std::size_t i : pair.edge_indices) edges.push_back(g.edge(i));
        pair.subgraph = GainGraph(g.vertex_count(), edges);
        out.pairs.push_back(std::move(pair));
    }
    return out;
}

GainGraph negate_gains(const GainGraph& g) {
    std::vector<Gain> gains;
    for (const Edge& e : g.edges()) gains.push_back(e.gain.negated());
    return g.with_gains(gains);
}

GainGraph gain_quotient(const GainGraph& g1, const GainGraph& g2) {
    if (!g1.same_underlying_graph(g2)) throw GraphError("gain_quotient requires identical underlying graphs");
    std::vector<Gain> gains;
    for (const Edge& e : g1.edges()) gains.push_back(e.gain.inverse() * g2.gain(e.u, e.v));
    return g1.with_gains(gains);
}

Components connected_components(const GainGraph& g) {
    const std::size_t n = g.vertex_count();
    Components c;
    c.label.assign(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (c.label[s] != n) continue;
        std::queue<std::size_t> q;
        q.push(s);
        c.label[s] = c.count;
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            for (const Incidence& inc : g.neighbors(x)) {
                if (c.label[inc.neighbor] == n) {
                    c.label[inc.neighbor] = c.count;
                    q.push(inc.neighbor);
                }
            }
        }
        ++c.count;
    }
    return c;
}

bool is_connected(const GainGraph& g) { return connected_components(g).count <= 1; }

}  // namespace gaingraph

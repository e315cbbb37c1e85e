#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gaingraph/gain.hpp"

namespace gaingraph {

/// One edge. Stored edges satisfy u < v and `gain` is the gain of the
/// orientation u→v; the reverse orientation carries `gain.inverse()`.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    Gain gain;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
};

/// A simple graph with a circle-group gain on every edge. Immutable once built.
class GainGraph {
public:
    GainGraph() = default;

    /// Validates and canonicalizes: edges given as (v, u) with v > u are
    /// stored as (u, v) with the inverted gain. Throws GraphError on loops,
    /// duplicate pairs or out-of-range endpoints.
    GainGraph(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;
    bool has_edge(std::size_t a, std::size_t b) const { return find_edge(a, b).has_value(); }
    /// Gain of the oriented edge a→b. Throws GraphError when a, b are not adjacent.
    Gain gain(std::size_t a, std::size_t b) const;

    std::span<const Incidence> neighbors(std::size_t v) const { return adjacency_.at(v); }
    std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const;

    /// Same underlying graph with the stored gains replaced (same edge order).
    GainGraph with_gains(std::span<const Gain> gains) const;
    bool same_underlying_graph(const GainGraph& other) const;

    friend bool operator==(const GainGraph& a, const GainGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

GainGraph build_graph(std::size_t n, std::span<const Edge> edges);

struct DegreeProfile {
    std::vector<std::size_t> degree;
    std::vector<Complex> net_degree;
    /// Per vertex: gain of the oriented edge leaving it → number of such edges.
    std::vector<std::map<Gain, std::size_t>> gain_degree;
    /// Average degree of the neighbours; 0 for isolated vertices.
    std::vector<double> average_2_degree;
    std::size_t max_degree = 0;
    /// Image of the gain function over both orientations.
    std::vector<Gain> used_gains;
};

DegreeProfile degree_profile(const GainGraph& g);

/// Product of the oriented edge gains along consecutive vertices.
Gain gain_of_walk(const GainGraph& g, std::span<const std::size_t> walk);

GainGraph delete_edge(const GainGraph& g, std::size_t u, std::size_t v);

struct InversePair {
    Gain representative;   // the member with the smaller angle
    bool self_paired = false;
    std::vector<std::size_t> edge_indices;  // indices into the parent graph
    GainGraph subgraph;    // full vertex set, only these edges
};

struct InversePairPartition {
    std::vector<InversePair> pairs;
};

/// Groups edges by the unordered pair {g, g^-1} of their gain, compared exactly.
InversePairPartition inverse_pair_partition(const GainGraph& g);

/// Every gain multiplied by -1.
GainGraph negate_gains(const GainGraph& g);
/// Edge-wise phi1(e)^-1 * phi2(e). Throws GraphError on different underlying graphs.
GainGraph gain_quotient(const GainGraph& g1, const GainGraph& g2);

struct Components {
    std::vector<std::size_t> label;  // component index per vertex
    std::size_t count = 0;
};

Components connected_components(const GainGraph& g);
bool is_connected(const GainGraph& g);

}  // namespace gaingraph

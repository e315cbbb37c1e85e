#include "gaingraph/ensemble.hpp"

#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gaingraph/switching.hpp"

namespace gaingraph {

const char* to_string(Construction c) {
    switch (c) {
        case Construction::uniform: return "uniform";
        case Construction::balanced: return "balanced";
        case Construction::signed_graph: return "signed";
        case Construction::negative_switched: return "negative-switched";
        case Construction::sixth_turns: return "sixth-turns";
    }
    return "?";
}

EnsembleInstance ensemble_instance(std::uint64_t seed, bool connected) {
    static constexpr double kDensities[3] = {0.2, 0.5, 0.8};
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);

    EnsembleInstance out;
    out.seed = seed;
    out.p = kDensities[seed % 3];
    out.construction = static_cast<Construction>((seed / 3) % 5);
    const std::size_t n = 2 + rng() % 31;

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::ldexp(static_cast<double>(rng() >> 11), -53) < out.p) pairs.emplace(i, j);
    if (connected)
        for (std::size_t v = 1; v < n; ++v) pairs.emplace(rng() % v, v);

    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) {
        Gain g;
        switch (out.construction) {
            case Construction::uniform: g = Gain::from_fixed(rng()); break;
            case Construction::signed_graph: g = (rng() & 1) ? Gain::half_turn() : Gain(); break;
            case Construction::negative_switched: g = Gain::half_turn(); break;
            case Construction::sixth_turns: g = Gain::rational(static_cast<std::int64_t>(rng() % 6), 6); break;
            case Construction::balanced: break;
        }
        edges.push_back({u, v, g});
    }
    GainGraph graph(n, edges);
    if (out.construction == Construction::balanced || out.construction == Construction::negative_switched) {
        SwitchingFunction zeta;
        for (std::size_t i = 0; i < n; ++i) zeta.values.push_back(Gain::from_fixed(rng()));
        graph = apply_switch(graph, zeta);
    }
    out.graph = std::move(graph);
    return out;
}

}  // namespace gaingraph

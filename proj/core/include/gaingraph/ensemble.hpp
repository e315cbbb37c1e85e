#pragma once

#include <cstdint>
#include <string>

#include "gaingraph/graph.hpp"

namespace gaingraph {

/// Gain assignment used by a seeded random instance.
enum class Construction {
    uniform,               // independent uniform gains
    balanced,              // a random switching of the neutral gain graph
    signed_graph,          // independent +-1 gains
    negative_switched,     // a random switching of (Gamma, -1)
    sixth_turns,           // exact gains k/6, k uniform in 0..5
};

const char* to_string(Construction c);

struct EnsembleInstance {
    std::uint64_t seed = 0;
    Construction construction = Construction::uniform;
    double p = 0.0;
    GainGraph graph;
};

/// Instance `seed` of the test ensemble: n = 2 + (draw mod 31), edge
/// probability cycles through 0.2, 0.5, 0.8 with the seed, construction
/// cycles through the five kinds with seed / 3. With `connected` a random
/// spanning tree (vertex v joined to a uniform earlier vertex) is added to
/// the sampled edges. Deterministic for a given (seed, connected).
EnsembleInstance ensemble_instance(std::uint64_t seed, bool connected);

}  // namespace gaingraph

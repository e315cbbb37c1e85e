#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaingraph/graph.hpp"

namespace gaingraph {

// Vertex labelling used by the generators:
//   cycle(n, xi)        path 0-1-...-(n-1) neutral, closing edge carries xi on
//                       the orientation (n-1)->0, so the walk 0,1,...,n-1,0 has gain xi
//   path(n, gains)      edge (i, i+1) carries gains[i]; n-1 gains, or none for a neutral path
//   star(N)             T1: leaves 0..N-2, centre N-1
//   broom(N)            T2: leaves 0..N-4 on centre N-1, pendant path N-1 - N-2 - N-3
//   cone_triangle(n, g) centre n-1 adjacent to all; extra edge (0,1) with gain g,
//                       so the triangle walk n-1,0,1,n-1 has gain g
//   complete(n)         neutral K_n
//   random(n, p, seed)  see random_graph

GainGraph cycle_graph(std::size_t n, Gain cycle_gain);
GainGraph path_graph(std::size_t n, std::span<const Gain> gains = {});
GainGraph star_graph(std::size_t n);
GainGraph broom_graph(std::size_t n);
GainGraph cone_triangle_graph(std::size_t n, Gain triangle_gain);
GainGraph complete_graph(std::size_t n);

/// G(n, p) with uniform gains. Stream order: a std::mt19937_64 seeded with
/// `seed`; for each pair (i, j), i < j, in lexicographic order draw one word
/// u (edge kept iff (u >> 11) * 2^-53 < p) and, for kept edges only, one more
/// word used verbatim as the fixed-point gain angle.
GainGraph random_graph(std::size_t n, double p, std::uint64_t seed);

enum class GeneratorKind { cycle, path, star, broom, cone_triangle, complete, random };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::cycle;
    std::size_t n = 0;
    Gain gain;                // cycle / cone_triangle
    std::vector<Gain> gains;  // path
    double p = 0.5;           // random
    std::uint64_t seed = 0;   // random
};

GainGraph generate(const GeneratorSpec& spec);

/// Parses e.g. {"cycle", "5", "0.5turns"}, {"random", "12", "0.4", "7"}.
GeneratorSpec parse_generator(std::span<const std::string> words);

}  // namespace gaingraph

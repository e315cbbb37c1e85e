#include "gaingraph/generators.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "gaingraph/errors.hpp"

namespace gaingraph {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError(what);
}

std::size_t parse_size(const std::string& s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw GraphError("expected a vertex count, got '" + s + "'");
    return v;
}

}  // namespace

GainGraph cycle_graph(std::size_t n, Gain cycle_gain) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Gain{}});
    edges.push_back({n - 1, 0, cycle_gain});
    return GainGraph(n, edges);
}

GainGraph path_graph(std::size_t n, std::span<const Gain> gains) {
    require(n >= 1, "path needs n >= 1");
    require(gains.empty() || gains.size() == n - 1, "path needs n-1 gains");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, gains.empty() ? Gain{} : gains[i]});
    return GainGraph(n, edges);
}

GainGraph star_graph(std::size_t n) {
    require(n >= 3, "star needs N >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, n - 1, Gain{}});
    return GainGraph(n, edges);
}

GainGraph broom_graph(std::size_t n) {
    require(n >= 4, "broom needs N >= 4");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 3 < n; ++i) edges.push_back({i, n - 1, Gain{}});
    edges.push_back({n - 3, n - 2, Gain{}});
    edges.push_back({n - 2, n - 1, Gain{}});
    return GainGraph(n, edges);
}

GainGraph cone_triangle_graph(std::size_t n, Gain triangle_gain) {
    require(n >= 3, "cone_triangle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, n - 1, Gain{}});
    edges.push_back({0, 1, triangle_gain});
    return GainGraph(n, edges);
}

GainGraph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, Gain{}});
    return GainGraph(n, edges);
}

GainGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, "random graph needs 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double u = std::ldexp(static_cast<double>(rng() >> 11), -53);
            if (u < p) edges.push_back({i, j, Gain::from_fixed(rng())});
        }
    }
    return GainGraph(n, edges);
}

GainGraph generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::cycle: return cycle_graph(spec.n, spec.gain);
        case GeneratorKind::path: return path_graph(spec.n, spec.gains);
        case GeneratorKind::star: return star_graph(spec.n);
        case GeneratorKind::broom: return broom_graph(spec.n);
        case GeneratorKind::cone_triangle: return cone_triangle_graph(spec.n, spec.gain);
        case GeneratorKind::complete: return complete_graph(spec.n);
        case GeneratorKind::random: return random_graph(spec.n, spec.p, spec.seed);
    }
    throw GraphError("unknown generator kind");
}

GeneratorSpec parse_generator(std::span<const std::string> words) {
    require(words.size() >= 2, "generator needs a kind and a size");
    GeneratorSpec spec;
    const std::string& kind = words[0];
    spec.n = parse_size(words[1]);
    auto args = words.subspan(2);
    auto arity = [&](std::size_t lo, std::size_t hi) {
        require(args.size() >= lo && args.size() <= hi, "wrong number of parameters for generator '" + kind + "'");
    };
    try {
        if (kind == "cycle") {
            arity(0, 1);
            spec.kind = GeneratorKind::cycle;
            if (!args.empty()) spec.gain = Gain::parse_angle(args[0]);
        } else if (kind == "path") {
            spec.kind = GeneratorKind::path;
            for (const auto& a : args) spec.gains.push_back(Gain::parse_angle(a));
        } else if (kind == "star") {
            arity(0, 0);
            spec.kind = GeneratorKind::star;
        } else if (kind == "broom") {
            arity(0, 0);
            spec.kind = GeneratorKind::broom;
        } else if (kind == "cone_triangle") {
            arity(1, 1);
            spec.kind = GeneratorKind::cone_triangle;
            spec.gain = Gain::parse_angle(args[0]);
        } else if (kind == "complete") {
            arity(0, 0);
            spec.kind = GeneratorKind::complete;
        } else if (kind == "random") {
            arity(1, 2);
            spec.kind = GeneratorKind::random;
            std::size_t used = 0;
            spec.p = std::stod(args[0], &used);
            require(used == args[0].size(), "invalid edge probability '" + args[0] + "'");
            if (args.size() == 2) {
                auto [ptr, ec] = std::from_chars(args[1].data(), args[1].data() + args[1].size(), spec.seed);
                require(ec == std::errc{} && ptr == args[1].data() + args[1].size(), "invalid seed '" + args[1] + "'");
            }
        } else {
            throw GraphError("unknown generator '" + kind + "'");
        }
    } catch (const ParseError& e) {
        throw GraphError(e.what());
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const GraphError*>(&e)) throw;
        throw GraphError("invalid generator parameter: " + std::string(e.what()));
    }
    return spec;
}

}  // namespace gaingraph

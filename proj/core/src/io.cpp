#include "gaingraph/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gaingraph/errors.hpp"

namespace gaingraph {
namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream ss(line);
    return {std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()};
}

std::size_t parse_index(const std::string& word, std::size_t line_no) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        throw ParseError("expected a non-negative integer, got '" + word + "'", line_no);
    return v;
}

GainGraph build_checked(std::size_t n, const std::vector<Edge>& edges, std::size_t line_no) {
    try {
        return GainGraph(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what(), line_no);
    }
}

}  // namespace

GainGraph read_tgg(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto words = split_words(line);
        if (words.empty()) continue;
        if (words[0] == "n") {
            if (words.size() != 2) throw ParseError("expected 'n <int>'", line_no);
            if (n) throw ParseError("duplicate 'n' line", line_no);
            n = parse_index(words[1], line_no);
        } else if (words[0] == "e") {
            if (!n) throw ParseError("edge before 'n' line", line_no);
            if (words.size() != 4) throw ParseError("expected 'e <u> <v> <turns>'", line_no);
            std::size_t u = parse_index(words[1], line_no);
            std::size_t v = parse_index(words[2], line_no);
            Gain gain;
            try {
                gain = Gain::parse_turns(words[3]);
            } catch (const std::exception& e) {
                throw ParseError(e.what(), line_no);
            }
            if (u >= *n || v >= *n) throw ParseError("vertex index out of range", line_no);
            if (u == v) throw ParseError("loop edge", line_no);
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ParseError("duplicate edge", line_no);
            edges.push_back({u, v, gain});
        } else {
            throw ParseError("unknown record '" + words[0] + "'", line_no);
        }
    }
    if (!n) throw ParseError("missing 'n' line");
    return build_checked(*n, edges, 0);
}

void write_tgg(std::ostream& out, const GainGraph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.gain.to_string() << '\n';
}

std::string to_tgg(const GainGraph& g) {
    std::ostringstream ss;
    write_tgg(ss, g);
    return ss.str();
}

GainGraph read_graph_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("n")) throw ParseError("JSON graph needs an object with 'n'");
        auto n = doc.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        if (doc.contains("edges")) {
            for (const auto& item : doc.at("edges")) {
                Edge e{item.at("u").get<std::size_t>(), item.at("v").get<std::size_t>(), Gain{}};
                const auto& t = item.at("turns");
                if (t.is_string()) {
                    e.gain = Gain::parse_turns(t.get<std::string>());
                } else if (t.is_number()) {
                    e.gain = Gain::from_turns(t.get<double>());
                } else {
                    throw ParseError("'turns' must be a string or a number");
                }
                edges.push_back(e);
            }
        }
        return GainGraph(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON graph: ") + e.what());
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

void write_graph_json(std::ostream& out, const GainGraph& g) {
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"turns", e.gain.to_string()}});
    out << doc.dump(2) << '\n';
}

GainGraph read_graph(std::istream& in) {
    in >> std::ws;
    if (in.peek() == '{') return read_graph_json(in);
    return read_tgg(in);
}

GainGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_graph(in);
}

}  // namespace gaingraph

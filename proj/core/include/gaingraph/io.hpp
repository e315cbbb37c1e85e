#pragma once

#include <iosfwd>
#include <string>

#include "gaingraph/graph.hpp"

namespace gaingraph {

// TGG text format:
//   n <int>                  exactly once, before any edge
//   e <u> <v> <turns>        gain of the orientation u->v; turns is a decimal or p/q
//   # ...                    comment to end of line; blank lines ignored
//
// The writer emits "n" followed by one "e" line per stored edge in insertion
// order with u < v, using Gain::to_string for the turns field.

GainGraph read_tgg(std::istream& in);
void write_tgg(std::ostream& out, const GainGraph& g);
std::string to_tgg(const GainGraph& g);

// JSON mirror: {"n": <int>, "edges": [{"u": .., "v": .., "turns": ..}]}.
// "turns" is written as the canonical string token and accepted as a string
// or a JSON number on input.
GainGraph read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const GainGraph& g);

/// Reads either format, choosing JSON when the first non-space byte is '{'.
GainGraph read_graph(std::istream& in);
GainGraph read_graph_file(const std::string& path);

}  // namespace gaingraph

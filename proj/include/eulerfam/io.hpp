#pragma once

#include <string>

#include "eulerfam/hypergraph.hpp"

namespace eulerfam {

/// Parses either supported hypergraph format, auto-detected: input starting
/// with '{' (after whitespace) is JSON, anything else is plain text.
Hypergraph parse(const std::string& text);

/// JSON format: an object with "vertices" (a positive integer n, or an array
/// of distinct string labels) and "edges" (an array of arrays of vertex
/// references; integers index vertices, strings name labels).
Hypergraph parse_json(const std::string& text);

/// Plain-text format: one edge per line of whitespace-separated vertex
/// names; '#' starts a comment.  The vertex set is the union of the names
/// (sorted, becoming labels) unless a header line `!vertices <n>` fixes the
/// order, in which case names must be integer ids in [0, n).
Hypergraph parse_text(const std::string& text);

/// Canonical JSON: each edge ascending, edge order preserved, labels kept.
/// parse(serialize_json(h)) reproduces h exactly.
std::string serialize_json(const Hypergraph& h);

/// Plain text form.  Unlabeled graphs get a `!vertices <n>` header so
/// isolated vertices survive; labeled graphs are written as label lines and
/// must not contain isolated vertices (they would be lost — throws).
std::string serialize_text(const Hypergraph& h);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace eulerfam

#include "eulerfam/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace eulerfam {

namespace {

using nlohmann::json;

VertexId resolve_ref(const json& ref, int order,
                     const std::map<std::string, VertexId>& by_label) {
  if (ref.is_number_integer()) {
    long long v = ref.get<long long>();
    if (v < 0 || v >= order) throw ParseError("edge vertex out of range");
    return static_cast<VertexId>(v);
  }
  if (ref.is_string()) {
    auto it = by_label.find(ref.get<std::string>());
    if (it == by_label.end())
      throw ParseError("edge references unknown vertex label");
    return it->second;
  }
  throw ParseError("edge entries must be integers or labels");
}

}  // namespace

Hypergraph parse(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

Hypergraph parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ParseError("expected an object with \"vertices\" and \"edges\"");

  int order = 0;
  std::vector<std::string> labels;
  std::map<std::string, VertexId> by_label;
  const json& verts = doc["vertices"];
  if (verts.is_number_integer()) {
    long long n = verts.get<long long>();
    if (n <= 0) throw ParseError("empty vertex set");
    if (n > 1'000'000) throw ParseError("vertex count implausibly large");
    order = static_cast<int>(n);
  } else if (verts.is_array()) {
    if (verts.empty()) throw ParseError("empty vertex set");
    for (const json& item : verts) {
      if (!item.is_string())
        throw ParseError("vertex labels must be strings");
      labels.push_back(item.get<std::string>());
    }
    order = static_cast<int>(labels.size());
    for (int v = 0; v < order; ++v) {
      if (!by_label.emplace(labels[v], v).second)
        throw ParseError("repeated vertex label");
    }
  } else {
    throw ParseError("\"vertices\" must be an integer or a label array");
  }

  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::vector<VertexId>> edges;
  for (const json& je : doc["edges"]) {
    if (!je.is_array()) throw ParseError("each edge must be an array");
    std::vector<VertexId> e;
    for (const json& ref : je) e.push_back(resolve_ref(ref, order, by_label));
    edges.push_back(std::move(e));
  }
  try {
    return Hypergraph(order, std::move(edges), std::move(labels));
  } catch (const InvariantError& err) {
    throw ParseError(err.what());
  }
}

Hypergraph parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool has_header = false;
  int header_order = 0;
  std::vector<std::vector<std::string>> token_edges;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (first_content_line && tokens[0] == "!vertices") {
      if (tokens.size() != 2) throw ParseError("malformed !vertices header");
      try {
        header_order = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        throw ParseError("malformed !vertices header");
      }
      if (header_order <= 0) throw ParseError("empty vertex set");
      has_header = true;
      first_content_line = false;
      continue;
    }
    first_content_line = false;
    token_edges.push_back(std::move(tokens));
  }

  try {
    if (has_header) {
      std::vector<std::vector<VertexId>> edges;
      for (const auto& te : token_edges) {
        std::vector<VertexId> e;
        for (const auto& t : te) {
          std::size_t used = 0;
          int v;
          try {
            v = std::stoi(t, &used);
          } catch (const std::exception&) {
            throw ParseError("with a !vertices header, edges must list ids");
          }
          if (used != t.size() || v < 0 || v >= header_order)
            throw ParseError("edge vertex out of range");
          e.push_back(v);
        }
        edges.push_back(std::move(e));
      }
      return Hypergraph(header_order, std::move(edges));
    }

    std::vector<std::string> labels;
    for (const auto& te : token_edges)
      labels.insert(labels.end(), te.begin(), te.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.empty()) throw ParseError("empty vertex set");
    std::map<std::string, VertexId> by_label;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
      by_label[labels[v]] = v;
    std::vector<std::vector<VertexId>> edges;
    for (const auto& te : token_edges) {
      std::vector<VertexId> e;
      for (const auto& t : te) e.push_back(by_label.at(t));
      edges.push_back(std::move(e));
    }
    int order = static_cast<int>(labels.size());
    return Hypergraph(order, std::move(edges), std::move(labels));
  } catch (const InvariantError& err) {
    throw ParseError(err.what());
  }
}

std::string serialize_json(const Hypergraph& h) {
  json doc;
  if (h.has_labels())
    doc["vertices"] = h.labels();
  else
    doc["vertices"] = h.order();
  json edges = json::array();
  for (EdgeId e = 0; e < h.size(); ++e) {
    json je = json::array();
    for (VertexId v : h.edge(e)) {
      if (h.has_labels())
        je.push_back(h.labels()[v]);
      else
        je.push_back(v);
    }
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string serialize_text(const Hypergraph& h) {
  std::ostringstream out;
  if (h.has_labels()) {
    std::vector<bool> seen(h.order(), false);
    for (EdgeId e = 0; e < h.size(); ++e)
      for (VertexId v : h.edge(e)) seen[v] = true;
    for (int v = 0; v < h.order(); ++v)
      if (!seen[v])
        throw PreconditionError(
            "text form cannot carry an isolated labeled vertex; use JSON");
  } else {
    out << "!vertices " << h.order() << "\n";
  }
  for (EdgeId e = 0; e < h.size(); ++e) {
    const auto& edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i) out << ' ';
      out << h.vertex_name(edge[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace eulerfam

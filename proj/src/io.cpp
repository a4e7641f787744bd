#include "gw/io.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <sstream>

#include "gw/error.hpp"

namespace gw {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Graph parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, col);
  }
  // Schema errors have no meaningful text position.
  auto fail = [](const std::string& msg) -> Graph { throw ParseError(msg, 0, 0); };
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    return fail("graph JSON needs 'vertices' and 'edges'");
  const auto& vertices = doc["vertices"];
  const auto& edges = doc["edges"];
  if (!vertices.is_array() || !edges.is_array()) return fail("'vertices' and 'edges' must be arrays");

  GraphBuilder b;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer() || v["id"].get<long long>() != static_cast<long long>(i))
      return fail("vertex " + std::to_string(i) + ": ids must be dense and in order");
    Role role;
    if (v.contains("role")) {
      const auto& r = v["role"];
      if (!r.is_object() || !r.contains("kind") || !r["kind"].is_string())
        return fail("vertex " + std::to_string(i) + ": role needs a 'kind' string");
      std::vector<int> ix;
      if (r.contains("ix")) {
        if (!r["ix"].is_array()) return fail("vertex " + std::to_string(i) + ": 'ix' must be an array");
        for (const auto& x : r["ix"]) {
          if (!x.is_number_integer()) return fail("vertex " + std::to_string(i) + ": role index not an integer");
          ix.push_back(x.get<int>());
        }
      }
      try {
        role = Role(role_kind_from_string(r["kind"].get<std::string>()), std::move(ix));
      } catch (const InvalidArgument& e) {
        return fail("vertex " + std::to_string(i) + ": " + e.what());
      }
    }
    b.add_vertex(std::move(role));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      return fail("edge " + std::to_string(i) + ": expected [u, v] with non-negative ids");
    auto u = e[0].get<std::uint64_t>(), v = e[1].get<std::uint64_t>();
    if (u >= b.vertex_count() || v >= b.vertex_count())
      return fail("edge " + std::to_string(i) + ": unknown vertex id");
    if (u == v) return fail("edge " + std::to_string(i) + ": self-loop");
    b.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return std::move(b).finalize();
}

Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  VertexId max_id = 0;
  bool any = false;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    };
    auto read_id = [&](VertexId& out) {
      skip_ws();
      auto first = line.data() + i;
      auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), out);
      if (ec != std::errc() || ptr == first)
        throw ParseError("expected a non-negative vertex id", line_no, i + 1);
      i += static_cast<std::size_t>(ptr - first);
    };

    skip_ws();
    if (i == line.size() || line[i] == '#') continue;
    VertexId u = 0, v = 0;
    read_id(u);
    read_id(v);
    skip_ws();
    if (i != line.size()) throw ParseError("trailing characters after edge", line_no, i + 1);
    if (u == v) throw ParseError("self-loop " + std::to_string(u) + " " + std::to_string(v), line_no, 1);
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
    any = true;
  }
  GraphBuilder b;
  if (any)
    for (VertexId v = 0; v <= max_id; ++v) b.add_vertex();
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).finalize();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  if (name == "edgelist") return Format::edgelist;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

std::string serialize(const Graph& g, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      // Hand-assembled so key order follows the published schema.
      out << "{\"vertices\":[";
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v) out << ',';
        const auto& r = g.role(v);
        out << "{\"id\":" << v << ",\"role\":{\"kind\":\"" << to_string(r.kind) << "\",\"ix\":[";
        for (std::size_t i = 0; i < r.ix.size(); ++i) out << (i ? "," : "") << r.ix[i];
        out << "]}}";
      }
      out << "],\"edges\":[";
      bool first = true;
      for (auto [u, v] : g.edges()) {
        out << (first ? "" : ",") << '[' << u << ',' << v << ']';
        first = false;
      }
      out << "]}\n";
      break;
    }
    case Format::edgelist:
      for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
      break;
    case Format::dot:
      out << "graph G {\n";
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << dot_escape(g.role(v).str()) << "\"];\n";
      for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      break;
  }
  return out.str();
}

Graph parse(std::string_view text, Format format) {
  switch (format) {
    case Format::json:
      return parse_json(text);
    case Format::edgelist:
      return parse_edgelist(text);
    case Format::dot:
      break;
  }
  throw InvalidArgument("dot is an export-only format");
}

Graph parse_auto(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_edgelist(text);
}

}  // namespace gw

#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxsub/errors.hpp"
#include "maxsub/graph.hpp"
#include "maxsub/sat_gadget.hpp"

namespace maxsub {

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok) + "'", line);
  return v;
}

inline Element parse_label(std::string_view tok, std::size_t line) {
  const long long v = parse_int<long long>(tok, line, "a node label");
  if (v < 1 || v > 1'000'000) throw ParseError("node label out of range: " + std::string(tok), line);
  return static_cast<Element>(v);
}

struct RawEdge {
  Element u, v;
  char color;  // 0 for plain graphs
  std::size_t line;
};

/// Shared reader: returns edges and the largest label seen.
inline std::pair<std::vector<RawEdge>, Element> read_edges(std::istream& in, bool colored) {
  std::vector<RawEdge> edges;
  Element max_label = 0;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto toks = tokens(std::string_view(line).substr(0, line.find('#')));
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      max_label = std::max(max_label, parse_label(toks[0], no));
      continue;
    }
    const std::size_t want = colored ? 3 : 2;
    if (toks.size() != want)
      throw ParseError(colored ? "expected 'u v b' or 'u v w'" : "expected 'u v'", no);
    RawEdge e{parse_label(toks[0], no), parse_label(toks[1], no), 0, no};
    if (e.u == e.v) throw ParseError("self-loop on node " + std::to_string(e.u), no);
    if (colored) {
      if (toks[2] != "b" && toks[2] != "w") throw ParseError("edge color must be 'b' or 'w'", no);
      e.color = toks[2][0];
    }
    max_label = std::max({max_label, e.u, e.v});
    edges.push_back(e);
  }
  return {std::move(edges), max_label};
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open '" + path + "'");
  return f;
}

}  // namespace detail

/// Plain graph: "u v" per edge, a lone label declares a node, '#' starts a comment.
inline Graph parse_graph(std::istream& in) {
  auto [edges, n] = detail::read_edges(in, false);
  Graph g(n);
  for (const auto& e : edges)
    if (!g.add_edge(e.u, e.v))
      throw FormatError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v), e.line);
  return g;
}

/// Bi-colored graph: "u v b" or "u v w" per edge.
inline BiColoredGraph parse_bicolored(std::istream& in) {
  auto [edges, n] = detail::read_edges(in, true);
  BiColoredGraph g(n);
  for (const auto& e : edges) {
    const EdgeColor c = e.color == 'b' ? EdgeColor::Black : EdgeColor::White;
    const EdgeColor old = g.color(e.u, e.v);
    if (old != EdgeColor::None)
      throw FormatError(std::string(old == c ? "duplicate edge " : "black/white conflict on ") +
                            std::to_string(e.u) + "-" + std::to_string(e.v),
                        e.line);
    g.add_edge(e.u, e.v, c);
  }
  return g;
}

inline Graph parse_graph_file(const std::string& path) {
  auto f = detail::open_input(path);
  return parse_graph(f);
}

inline BiColoredGraph parse_bicolored_file(const std::string& path) {
  auto f = detail::open_input(path);
  return parse_bicolored(f);
}

inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline BiColoredGraph parse_bicolored_text(const std::string& text) {
  std::istringstream in(text);
  return parse_bicolored(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  Element top = 0;
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
    top = std::max(top, v);
  }
  if (g.size() > top) out << g.size() << '\n';
}

/// Edges sorted by (u, v) with u < v; `comments` become leading '#' lines.
inline void write_bicolored(std::ostream& out, const BiColoredGraph& g,
                            const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  Element top = 0;
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << (e.color == EdgeColor::Black ? 'b' : 'w') << '\n';
    top = std::max(top, e.v);
  }
  if (g.size() > top) out << g.size() << '\n';
}

/// DIMACS CNF: 'c' comment lines, one "p cnf <vars> <clauses>" header, then
/// clauses as 0-terminated literal lists (possibly spanning lines).
inline Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> cur;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto toks = detail::tokens(line);
    if (toks.empty() || toks[0] == "c" || toks[0].front() == '%') continue;
    if (toks[0] == "p") {
      if (header) throw ParseError("second 'p' line", no);
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError("expected 'p cnf <vars> <clauses>'", no);
      cnf.num_vars = detail::parse_int<std::size_t>(toks[2], no, "a variable count");
      declared = detail::parse_int<std::size_t>(toks[3], no, "a clause count");
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' header", no);
    for (auto tok : toks) {
      const int lit = detail::parse_int<int>(tok, no, "a literal");
      if (lit == 0) {
        cnf.clauses.push_back(std::move(cur));
        cur.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > cnf.num_vars)
        throw ParseError("literal " + std::to_string(lit) + " exceeds the declared variables", no);
      cur.push_back(lit);
    }
  }
  if (!header) throw ParseError("missing 'p cnf' header", no);
  if (!cur.empty()) cnf.clauses.push_back(std::move(cur));
  if (cnf.clauses.size() != declared)
    throw FormatError("header declares " + std::to_string(declared) + " clauses, found " +
                          std::to_string(cnf.clauses.size()),
                      no);
  return cnf;
}

inline std::string format_solution(const ElementSet& s) {
  std::string out;
  for (Element e : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace maxsub

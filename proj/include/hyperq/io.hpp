#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hyperq/error.hpp"
#include "hyperq/hypergraph.hpp"

namespace hyperq {

// Text format: optional first content line "k <k>", then one edge per line as
// whitespace-separated vertex tokens. '#' starts a comment, blank lines are
// skipped, CRLF accepted. Uniformity is inferred from the first edge when the
// header is absent.
inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int header_k = 0;
  int inferred_k = 0;
  bool saw_content = false;
  std::vector<std::vector<std::string>> edges;
  std::vector<int> edge_lines;
  std::map<std::vector<std::string>, int> first_line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;

    if (!saw_content && toks.size() == 2 && toks[0] == "k") {
      int value = 0;
      auto [ptr, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), value);
      if (ec != std::errc() || ptr != toks[1].data() + toks[1].size())
        fail(errc::parse_error, "line " + std::to_string(line_no) +
             ": header value '" + toks[1] + "' is not an integer");
      if (value < 2)
        fail(errc::parse_error, "line " + std::to_string(line_no) +
             ": uniformity must be >= 2, got " + std::to_string(value));
      header_k = value;
      saw_content = true;
      continue;
    }
    saw_content = true;

    std::vector<std::string> sorted = toks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (inferred_k == 0) inferred_k = static_cast<int>(sorted.size());
    int k = header_k ? header_k : inferred_k;
    if (static_cast<int>(sorted.size()) != k)
      fail(errc::non_uniform_edge, "line " + std::to_string(line_no) + ": edge has " +
           std::to_string(sorted.size()) + " distinct vertices, expected " + std::to_string(k));
    auto [it, inserted] = first_line.try_emplace(sorted, line_no);
    if (!inserted)
      fail(errc::duplicate_edge, "line " + std::to_string(line_no) +
           " repeats the edge from line " + std::to_string(it->second));
    edges.push_back(toks);
    edge_lines.push_back(line_no);
  }

  if (edges.empty()) fail(errc::empty_edge_list, "no edges in input");
  return build_hypergraph(header_k ? header_k : inferred_k, edges);
}

inline Hypergraph parse_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

// Header plus one edge per line, vertices in index order, LF line endings.
// Deterministic for a fixed Hypergraph.
inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "k " << h.k() << "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << h.token(e[i]);
    }
    out << "\n";
  }
  return out.str();
}

inline void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  out << serialize_hypergraph(h);
}

}  // namespace hyperq

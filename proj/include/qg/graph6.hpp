// graph6 text format (McKay): header byte(s) encode n, then the upper
// triangle of the adjacency matrix in column order, 6 bits per printable
// byte offset by 63. One graph per LF-terminated line in corpus files.
#ifndef QG_GRAPH6_HPP
#define QG_GRAPH6_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qg/graph.hpp"

namespace qg {

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    // long form: '~' then three 6-bit groups
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  for (char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte outside printable range");
  size_t pos = 0;
  long n;
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  if (text[0] == 126) {
    if (text.size() >= 2 && text[1] == 126)
      throw std::invalid_argument("graph6: n too large");
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated header");
    n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) |
        long(text[3] - 63);
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6: graph order exceeds supported maximum");
  const long nbits_needed = n * (n - 1) / 2;
  const long nbytes = (nbits_needed + 5) / 6;
  if (static_cast<long>(text.size() - pos) != nbytes)
    throw std::invalid_argument(
        static_cast<long>(text.size() - pos) < nbytes
            ? "graph6: truncated data"
            : "graph6: trailing garbage");
  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = text[pos + static_cast<size_t>(bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  // remaining padding bits must be zero
  for (long b = bit; b < nbytes * 6; ++b) {
    int byte = text[pos + static_cast<size_t>(b / 6)] - 63;
    if ((byte >> (5 - b % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

inline std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    // tolerate the optional ">>graph6<<" file header
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return read_graph6(in);
}

inline void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

inline void write_graph6_file(const std::string& path,
                              const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_graph6(out, graphs);
}

}  // namespace qg

#endif  // QG_GRAPH6_HPP

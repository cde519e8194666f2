#include "domlab/io.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

namespace domlab {

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::optional<int> n;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string lineStr = raw.substr(0, raw.find('#'));
    std::istringstream ls(lineStr);
    std::string first;
    if (!(ls >> first)) continue;
    if (!n) {
      if (first != "n") throw ParseError(Errc::SyntaxError, lineno, 1, "expected header 'n <count>'");
      int count;
      if (!(ls >> count) || count < 0) throw ParseError(Errc::SyntaxError, lineno, 3, "bad vertex count");
      n = count;
      continue;
    }
    int a, b;
    std::istringstream pair_in(lineStr);
    if (!(pair_in >> a >> b)) throw ParseError(Errc::SyntaxError, lineno, 1, "expected two vertex ids");
    std::string trailing;
    if (pair_in >> trailing) throw ParseError(Errc::SyntaxError, lineno, 1, "trailing tokens after edge");
    if (a == b) throw ParseError(Errc::LoopEdge, lineno, 1, "loop edge " + std::to_string(a));
    if (a < 0 || b < 0 || a >= *n || b >= *n)
      throw ParseError(Errc::EndpointOutOfRange, lineno, 1,
                       "endpoint out of range for n=" + std::to_string(*n));
    edges.emplace_back(a, b);
  }
  if (!n) throw ParseError(Errc::SyntaxError, 1, 1, "missing 'n <count>' header");
  return Graph(*n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph parse_graph6(const std::string& line) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw Error(Errc::TruncatedBits, "unexpected end of graph6 line");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw Error(Errc::BadByte, "byte " + std::to_string(c) + " outside 63..126");
    return c - 63;
  };
  if (line.empty()) throw Error(Errc::TruncatedBits, "empty graph6 line");
  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int a = next();
    if (a < 63) {
      n = (static_cast<long long>(a) << 12) | (next() << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    }
  }
  if (n > Graph::kMaxVertices) throw Error(Errc::TooLarge, "graph6 order " + std::to_string(n) + " above cap");
  int nn = static_cast<int>(n);
  std::vector<std::pair<int, int>> edges;
  int buffer = 0, bits = 0;
  for (int j = 1; j < nn; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        buffer = next();
        bits = 6;
      }
      --bits;
      if ((buffer >> bits) & 1) edges.emplace_back(i, j);
    }
  return Graph(nn, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int buffer = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      buffer = (buffer << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(buffer + 63));
        buffer = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((buffer << (6 - bits)) + 63));
  return out;
}

std::string graph_digest(const Graph& g) {
  std::string s = encode_graph6(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

std::vector<Graph> parse_graph_file(const std::string& text) {
  // edge-list files start with an 'n' header (possibly after comments)
  std::istringstream probe(text);
  std::string tok;
  bool edge_list = false;
  std::string line;
  while (std::getline(probe, line)) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ls(body);
    if (ls >> tok) {
      edge_list = (tok == "n");
      break;
    }
  }
  if (edge_list) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string format_element(MixedElement x) {
  if (x.is_vertex()) return "v_" + std::to_string(x.vertex_id() + 1);
  Edge e = x.as_edge();
  return "e_{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
}

std::string format_mixed_set(const MixedSet& s) {
  std::string out = "{";
  bool first = true;
  for (const MixedElement& x : s.elements()) {
    if (!first) out += ", ";
    out += format_element(x);
    first = false;
  }
  return out + "}";
}

std::optional<MixedElement> parse_display_element(const std::string& token) {
  if (token.size() >= 3 && token[0] == 'v' && token[1] == '_') {
    int v = std::atoi(token.c_str() + 2);
    if (v < 1) return std::nullopt;
    return MixedElement::vertex(v - 1);
  }
  if (token.size() >= 7 && token.rfind("e_{", 0) == 0 && token.back() == '}') {
    std::string body = token.substr(3, token.size() - 4);
    auto comma = body.find(',');
    if (comma == std::string::npos) return std::nullopt;
    int a = std::atoi(body.substr(0, comma).c_str());
    int b = std::atoi(body.substr(comma + 1).c_str());
    if (a < 1 || b < 1 || a == b) return std::nullopt;
    return MixedElement::edge(a - 1, b - 1);
  }
  return std::nullopt;
}

MixedSet parse_witness(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<MixedElement> els;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ls(body);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "v") {
      int v;
      if (!(ls >> v)) throw ParseError(Errc::SyntaxError, lineno, 1, "expected vertex id");
      els.push_back(MixedElement::vertex(v));
    } else if (kind == "e") {
      int a, b;
      if (!(ls >> a >> b)) throw ParseError(Errc::SyntaxError, lineno, 1, "expected two endpoints");
      els.push_back(MixedElement::edge(a, b));
    } else {
      throw ParseError(Errc::SyntaxError, lineno, 1, "expected 'v' or 'e'");
    }
  }
  return MixedSet(host, std::move(els));
}

std::string write_witness(const MixedSet& s) {
  std::ostringstream out;
  for (const MixedElement& x : s.elements()) {
    if (x.is_vertex())
      out << "v " << x.vertex_id() << "\n";
    else
      out << "e " << x.as_edge().u << " " << x.as_edge().v << "\n";
  }
  return out.str();
}

std::string to_dot(const Graph& g, const MixedSet* highlight) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"v_" << v + 1 << "\"";
    if (highlight && highlight->contains(MixedElement::vertex(v)))
      out << ", style=filled, fillcolor=gold";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (highlight && highlight->contains(MixedElement::edge(e)))
      out << " [color=red, penwidth=2.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace domlab

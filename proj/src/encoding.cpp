#include "invring/encoding.hpp"

#include <sstream>

namespace invring {

namespace {

struct Prefix {
  ActionKind kind;
  int n;
  int positions;
  std::string body;
};

Prefix split_prefix(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("malformed graph encoding (want kind:<n>:<entries>): " + text);
  const std::string tag = text.substr(0, c1);
  int n;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(c1 + 1, c2 - c1 - 1), &used);
    if (used != c2 - c1 - 1) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("malformed vertex count in graph encoding: " + text);
  }
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1: " + text);
  Prefix p;
  p.n = n;
  p.body = text.substr(c2 + 1);
  if (tag == "g") {
    p.kind = ActionKind::GraphEdges;
    p.positions = pair_count(n);
  } else if (tag == "d") {
    p.kind = ActionKind::DigraphArcs;
    p.positions = n * n;
  } else if (tag == "v") {
    p.kind = ActionKind::Natural;
    p.positions = n;
  } else {
    throw std::invalid_argument("unknown graph encoding kind '" + tag + "' in: " + text);
  }
  return p;
}

std::vector<std::string> split_entries(const Prefix& p, const std::string& text) {
  std::vector<std::string> entries;
  if (p.body.find(',') == std::string::npos &&
      static_cast<int>(p.body.size()) == p.positions) {
    for (char c : p.body) entries.emplace_back(1, c);
  } else {
    std::stringstream ss(p.body);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(item);
  }
  if (static_cast<int>(entries.size()) != p.positions)
    throw std::invalid_argument("expected " + std::to_string(p.positions) + " entries in: " + text);
  return entries;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text) {
  const Prefix p = split_prefix(text);
  ParsedGraph out;
  out.kind = p.kind;
  out.n = p.n;
  out.exponents.assign(p.positions, '\0');
  const auto entries = split_entries(p, text);
  for (int i = 0; i < p.positions; ++i) {
    int v;
    try {
      size_t used = 0;
      v = std::stoi(entries[i], &used);
      if (used != entries[i].size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("malformed multiplicity '" + entries[i] + "' in: " + text);
    }
    if (v < 0 || v > 255)
      throw std::invalid_argument("multiplicity out of range in: " + text);
    out.exponents[i] = static_cast<char>(v);
  }
  return out;
}

ParsedWeightedGraph parse_weighted_graph_text(const std::string& text) {
  const Prefix p = split_prefix(text);
  ParsedWeightedGraph out;
  out.kind = p.kind;
  out.n = p.n;
  const auto entries = split_entries(p, text);
  for (const auto& e : entries) out.weights.push_back(parse_rational(e));
  return out;
}

std::string encode_graph_text(const ExponentVector& v, const ActionSpec& action) {
  std::string tag;
  int n;
  switch (action.kind()) {
    case ActionKind::GraphEdges:
      tag = "g", n = action.vertex_count();
      break;
    case ActionKind::DigraphArcs:
      tag = "d", n = action.vertex_count();
      break;
    case ActionKind::Natural:
    case ActionKind::Explicit:
      tag = "v", n = action.position_count();
      break;
  }
  if (static_cast<int>(v.size()) != action.position_count())
    throw std::invalid_argument("exponent vector length does not match action");
  bool compact = true;
  for (unsigned char c : v)
    if (c > 9) compact = false;
  std::string body;
  for (size_t i = 0; i < v.size(); ++i) {
    if (compact) {
      body += static_cast<char>('0' + v[i]);
    } else {
      if (i) body += ',';
      body += std::to_string(static_cast<unsigned char>(v[i]));
    }
  }
  return tag + ":" + std::to_string(n) + ":" + body;
}

ActionSpec action_for_parsed(const ParsedGraph& g) {
  switch (g.kind) {
    case ActionKind::GraphEdges:
      return ActionSpec::graph_edges(g.n);
    case ActionKind::DigraphArcs:
      return ActionSpec::digraph_arcs(g.n);
    default:
      return ActionSpec::natural(g.n);
  }
}

}  // namespace invring

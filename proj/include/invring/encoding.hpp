#ifndef INVRING_ENCODING_HPP
#define INVRING_ENCODING_HPP

/// Text encodings for (multi)graphs and weighted graphs.
///
/// A multigraph on n vertices is written "g:<n>:<entries>", a directed graph
/// (loops allowed) "d:<n>:<entries>", and a plain variable vector for the
/// natural action "v:<m>:<entries>".  Entries follow the fixed position
/// orders: unordered pairs {1,2} < {1,3} < ... < {n-1,n} lexicographically for
/// graphs, ordered pairs (1,1), (1,2), ..., (n,n) row-major for digraphs.
/// Entries are comma-separated multiplicities; when every multiplicity is a
/// single digit the commas may be dropped ("g:4:110000").  Weighted graphs use
/// the comma form with arbitrary exact rationals ("g:4:1/2,0,3,...").

#include <string>

#include "invring/invariant.hpp"

namespace invring {

struct ParsedGraph {
  ActionKind kind = ActionKind::GraphEdges;
  int n = 0;  // vertex count for g:/d:, position count for v:
  ExponentVector exponents;
};

/// Parses "g:<n>:<entries>", "d:<n>:<entries>" or "v:<m>:<entries>"; throws
/// std::invalid_argument on malformed input.
ParsedGraph parse_graph_text(const std::string& text);

/// Same syntax with rational entries; returns the weight vector.
struct ParsedWeightedGraph {
  ActionKind kind = ActionKind::GraphEdges;
  int n = 0;
  WeightedGraph weights;
};
ParsedWeightedGraph parse_weighted_graph_text(const std::string& text);

/// Canonical text form: compact digit string when all entries are below 10,
/// comma-separated otherwise.
std::string encode_graph_text(const ExponentVector& v, const ActionSpec& action);

/// The ActionSpec matching a parsed prefix (g:/d:/v:).
ActionSpec action_for_parsed(const ParsedGraph& g);

}  // namespace invring

#endif

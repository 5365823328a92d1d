#pragma once

#include <optional>
#include <vector>

#include "osborne/logmat.hpp"

namespace osborne {

// Directed support graph of a matrix: vertices [n], an edge (i,j) per stored
// entry K_ij > 0. Self-loops are kept in the directed view but excluded from
// the undirected adjacency used for degrees and coloring, since a vertex
// never interferes with its own update.
class SupportGraph {
 public:
  explicit SupportGraph(const LogSparseMatrix& m);
  SupportGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  const std::vector<int>& undirected_neighbors(int v) const { return undirected_[v]; }
  int max_degree() const { return max_degree_; }

 private:
  void finalize();

  int n_ = 0;
  std::vector<std::vector<int>> out_, in_, undirected_;
  int max_degree_ = 0;
};

// Partition of [n] into independent sets of the undirected support graph.
struct Coloring {
  std::vector<std::vector<int>> blocks;
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Strongly connected components in topological order of the condensation.
std::vector<std::vector<int>> scc_decompose(const SupportGraph& g);

// A matrix is balanceable iff its support graph is strongly connected.
bool is_balanceable(const SupportGraph& g);

// Longest directed shortest path; nullopt when not strongly connected.
std::optional<long long> diameter(const SupportGraph& g);

// Deterministic greedy coloring: vertices in index order, lowest free color.
// Uses at most max_degree + 1 colors.
Coloring greedy_coloring(const SupportGraph& g);

bool is_valid_coloring(const SupportGraph& g, const Coloring& c);

}  // namespace osborne

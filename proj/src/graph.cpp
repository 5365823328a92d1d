#include "osborne/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace osborne {

SupportGraph::SupportGraph(const LogSparseMatrix& m) {
  n_ = m.dim();
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (int e = 0; e < m.nnz(); ++e) {
    out_[m.entry_row(e)].push_back(m.entry_col(e));
    in_[m.entry_col(e)].push_back(m.entry_row(e));
  }
  finalize();
}

SupportGraph::SupportGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("graph order must be >= 1");
  n_ = n;
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge out of range");
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  finalize();
}

void SupportGraph::finalize() {
  for (int v = 0; v < n_; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
  }
  undirected_.assign(n_, {});
  for (int v = 0; v < n_; ++v) {
    std::vector<int> nb;
    nb.reserve(out_[v].size() + in_[v].size());
    for (int u : out_[v])
      if (u != v) nb.push_back(u);
    for (int u : in_[v])
      if (u != v) nb.push_back(u);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    undirected_[v] = std::move(nb);
    max_degree_ = std::max(max_degree_, static_cast<int>(undirected_[v].size()));
  }
}

// Iterative Tarjan. Components are emitted in reverse topological order of
// the condensation, so the result is reversed before returning.
std::vector<std::vector<int>> scc_decompose(const SupportGraph& g) {
  const int n = g.order();
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.out(f.v);
      if (f.child < succ.size()) {
        const int w = succ[f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        const int v = f.v;
        call.pop_back();
        if (!call.empty()) lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
        if (lowlink[v] == index[v]) {
          std::vector<int> comp;
          for (;;) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
      }
    }
  }
  std::reverse(components.begin(), components.end());
  return components;
}

bool is_balanceable(const SupportGraph& g) { return scc_decompose(g).size() == 1; }

std::optional<long long> diameter(const SupportGraph& g) {
  const int n = g.order();
  long long best = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.out(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (dist[t] == -1) return std::nullopt;
      best = std::max(best, static_cast<long long>(dist[t]));
    }
  }
  return best;
}

Coloring greedy_coloring(const SupportGraph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<char> used(g.max_degree() + 2, 0);
  int colors = 0;
  for (int v = 0; v < n; ++v) {
    for (int u : g.undirected_neighbors(v))
      if (color[u] >= 0) used[color[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    colors = std::max(colors, c + 1);
    for (int u : g.undirected_neighbors(v))
      if (color[u] >= 0) used[color[u]] = 0;
  }
  Coloring out;
  out.blocks.assign(colors, {});
  for (int v = 0; v < n; ++v) out.blocks[color[v]].push_back(v);
  return out;
}

bool is_valid_coloring(const SupportGraph& g, const Coloring& c) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (int b = 0; b < c.block_count(); ++b) {
    for (int v : c.blocks[b]) {
      if (v < 0 || v >= n || color[v] != -1) return false;
      color[v] = b;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (color[v] == -1) return false;
    for (int u : g.undirected_neighbors(v))
      if (color[u] == color[v]) return false;
  }
  return true;
}

}  // namespace osborne

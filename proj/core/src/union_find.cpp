#include "partcat/union_find.hpp"

namespace partcat {

void UnionFind::touch(Label i) {
  const auto needed = static_cast<std::size_t>(i) + 1;
  if (needed <= parent_.size()) return;
  const std::size_t old = parent_.size();
  parent_.resize(needed);
  rank_.resize(needed, 0);
  for (std::size_t k = old; k < needed; ++k) parent_[k] = static_cast<Label>(k);
}

Label UnionFind::find(Label i) {
  if (static_cast<std::size_t>(i) >= parent_.size()) return i;
  // Path halving: every other node on the path is pointed at its grandparent.
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

void UnionFind::unite(Label i, Label j) {
  touch(i > j ? i : j);
  Label a = find(i);
  Label b = find(j);
  if (a == b) return;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
}

std::unordered_map<Label, Label> components_by_dfs(std::span<const Label> vertices,
                                                   std::span<const std::pair<Label, Label>> edges) {
  // Compress labels to dense indices, then build a CSR adjacency.
  std::unordered_map<Label, std::size_t> index;
  std::vector<Label> names;
  index.reserve(vertices.size());
  auto intern = [&](Label v) {
    auto [it, inserted] = index.try_emplace(v, names.size());
    if (inserted) names.push_back(v);
    return it->second;
  };
  for (Label v : vertices) intern(v);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  arcs.reserve(edges.size());
  for (const auto& [u, v] : edges) arcs.emplace_back(intern(u), intern(v));

  const std::size_t n = names.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (const auto& [u, v] : arcs) {
    ++offset[u + 1];
    ++offset[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] += offset[i];
  std::vector<std::size_t> adjacency(offset[n]);
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (const auto& [u, v] : arcs) {
    adjacency[fill[u]++] = v;
    adjacency[fill[v]++] = u;
  }

  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component(n, unseen);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] != unseen) continue;
    component[start] = start;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t e = offset[u]; e < offset[u + 1]; ++e) {
        const std::size_t v = adjacency[e];
        if (component[v] == unseen) {
          component[v] = start;
          stack.push_back(v);
        }
      }
    }
  }

  std::unordered_map<Label, Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace(names[i], names[component[i]]);
  return out;
}

}  // namespace partcat

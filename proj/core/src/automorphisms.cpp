#include "cutcx/automorphisms.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cutcx {

namespace {

// Iterated neighborhood refinement: start from degrees, rehash with sorted
// neighbor invariants until the partition stabilizes.
std::vector<std::uint64_t> refine_invariants(const CutGraph& g) {
  const int n = g.size();
  std::vector<std::uint64_t> inv(n);
  for (int v = 0; v < n; ++v) inv[v] = static_cast<std::uint64_t>(g.degree(v));
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> nbr;
      for (int w = 0; w < n; ++w)
        if (g.edge(v, w)) nbr.push_back(inv[w]);
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = inv[v] * 1099511628211ull + 0x9e37;
      for (auto x : nbr) h = h * 1099511628211ull ^ (x + 0x517c);
      next[v] = h;
    }
    if (next == inv) break;
    inv = std::move(next);
  }
  return inv;
}

struct AutSearch {
  const CutGraph* g;
  int n, words;
  std::vector<std::uint64_t> inv;
  std::vector<int> order;          // vertex processing order
  std::vector<int> image;          // image[k] = sigma(order[k])
  std::vector<std::uint64_t> used; // image vertices taken

  std::uint64_t leaves = 0;
  std::uint64_t cap = ~std::uint64_t(0);
  // First-divergence structure of the stabilizer chain.
  std::vector<std::map<int, std::vector<int>>> level_reps;
  std::vector<std::vector<int>>* collect_all = nullptr;

  bool used_bit(int v) const { return used[std::size_t(v) / 64] >> (v % 64) & 1; }
  void set_used(int v, bool b) {
    if (b)
      used[std::size_t(v) / 64] |= std::uint64_t(1) << (v % 64);
    else
      used[std::size_t(v) / 64] &= ~(std::uint64_t(1) << (v % 64));
  }

  void record_leaf() {
    ++leaves;
    if (leaves > cap) throw std::length_error("automorphism group larger than the cap");
    std::vector<int> sigma(n);
    for (int k = 0; k < n; ++k) sigma[order[k]] = image[k];
    if (collect_all) collect_all->push_back(sigma);
    for (int k = 0; k < n; ++k) {
      if (image[k] != order[k]) {
        auto& slot = level_reps[k];
        if (!slot.count(image[k])) slot.emplace(image[k], std::move(sigma));
        return;
      }
    }
    // identity: nothing to record
  }

  void dfs(int k) {
    if (k == n) {
      record_leaf();
      return;
    }
    const int v = order[k];
    // Image-side constraint masks: candidates must be adjacent to exactly the
    // images of the already-mapped neighbors of v.
    std::vector<std::uint64_t> want(words, 0);
    std::vector<std::uint64_t> mapped = used;
    for (int j = 0; j < k; ++j) {
      if (g->edge(v, order[j]))
        want[std::size_t(image[j]) / 64] |= std::uint64_t(1) << (image[j] % 64);
    }
    for (int w = 0; w < n; ++w) {
      if (used_bit(w) || inv[w] != inv[v]) continue;
      bool ok = true;
      const std::uint64_t* row = g->adjacency().row(w);
      for (int i = 0; i < words && ok; ++i)
        if ((row[i] & mapped[i]) != want[i]) ok = false;
      if (!ok) continue;
      image[k] = w;
      set_used(w, true);
      dfs(k + 1);
      set_used(w, false);
    }
  }

  void run() {
    // Process small invariant classes first.
    std::map<std::uint64_t, int> class_size;
    for (int v = 0; v < n; ++v) ++class_size[inv[v]];
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (class_size[inv[a]] != class_size[inv[b]]) return class_size[inv[a]] < class_size[inv[b]];
      return a < b;
    });
    image.assign(n, -1);
    used.assign(words, 0);
    level_reps.assign(n, {});
    dfs(0);
  }
};

}  // namespace

AutomorphismGroup graph_automorphisms(const CutGraph& g) {
  if (g.size() > 160)
    throw std::length_error("automorphism search limited to 160 vertices, got " +
                            std::to_string(g.size()));
  AutomorphismGroup result;
  if (g.size() == 0) {
    result.order = 1;
    return result;
  }
  AutSearch s;
  s.g = &g;
  s.n = g.size();
  s.words = (g.size() + 63) / 64;
  s.inv = refine_invariants(g);
  s.run();

  std::uint64_t chain_order = 1;
  for (int k = 0; k < s.n; ++k) {
    chain_order *= s.level_reps[k].size() + 1;  // orbit includes the fixed image
    for (auto& [w, sigma] : s.level_reps[k]) result.generators.push_back(sigma);
  }
  if (chain_order != s.leaves)
    throw std::logic_error("automorphism chain order disagrees with leaf count");
  result.order = chain_order;
  return result;
}

std::vector<std::vector<int>> all_graph_automorphisms(const CutGraph& g, std::uint64_t cap) {
  if (g.size() > 160)
    throw std::length_error("automorphism search limited to 160 vertices, got " +
                            std::to_string(g.size()));
  std::vector<std::vector<int>> all;
  if (g.size() == 0) return all;
  AutSearch s;
  s.g = &g;
  s.n = g.size();
  s.words = (g.size() + 63) / 64;
  s.inv = refine_invariants(g);
  s.cap = cap;
  s.collect_all = &all;
  s.run();
  std::sort(all.begin(), all.end());
  return all;
}

bool is_graph_automorphism(const CutGraph& g, const std::vector<int>& perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edge(i, j) != g.edge(perm[i], perm[j])) return false;
  return true;
}

}  // namespace cutcx

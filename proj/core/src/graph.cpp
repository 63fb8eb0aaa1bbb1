#include "cutcx/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cutcx {

CutGraph CutGraph::build(std::vector<Cut> cuts) {
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cuts.size(); ++j)
      if (cuts[i] == cuts[j]) throw std::invalid_argument("duplicate cut in vertex set");
  CutGraph g;
  g.vertices_ = std::move(cuts);
  const int n = g.size();
  g.adj_ = BitMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.adj_.set_sym(i, j, compatible(g.vertices_[i], g.vertices_[j]));
  return g;
}

CutGraph CutGraph::build(const AtomSpace& atoms, const std::vector<std::uint64_t>& masks) {
  CutGraph g;
  const int n = static_cast<int>(masks.size());
  g.adj_ = BitMatrix(n);
  const std::uint64_t u = atoms.universe();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.adj_.set_sym(i, j, !atoms.crosses(masks[i] & u, masks[j] & u));
  g.vertices_.reserve(masks.size());
  for (std::uint64_t m : masks) g.vertices_.push_back(Cut::from_side(atoms.clopen(m)));
  return g;
}

CutGraph CutGraph::from_adjacency(std::vector<Cut> cuts, BitMatrix adj) {
  if (adj.size() != static_cast<int>(cuts.size()))
    throw std::invalid_argument("adjacency size mismatch");
  CutGraph g;
  g.vertices_ = std::move(cuts);
  g.adj_ = std::move(adj);
  return g;
}

int CutGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < size(); ++j)
    if (adj_.get(i, j)) ++d;
  return d;
}

std::size_t CutGraph::edge_count() const {
  std::size_t e = 0;
  for (int i = 0; i < size(); ++i) e += static_cast<std::size_t>(degree(i));
  return e / 2;
}

std::optional<int> CutGraph::index_of(const Cut& c) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[i] == c) return i;
  return std::nullopt;
}

std::vector<int> CutGraph::bfs_distances(int source) const {
  std::vector<int> dist(size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w = 0; w < size(); ++w) {
      if (adj_.get(v, w) && dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DiameterResult CutGraph::diameter() const {
  if (size() == 0) throw std::invalid_argument("diameter of an empty graph");
  DiameterResult r;
  r.connected = true;
  for (int v = 0; v < size(); ++v) {
    auto dist = bfs_distances(v);
    for (int w = 0; w < size(); ++w) {
      if (dist[w] == -1) {
        r.connected = false;
        return r;
      }
      r.diameter = std::max(r.diameter, dist[w]);
    }
  }
  return r;
}

std::vector<int> CutGraph::component_ids() const {
  std::vector<int> id(size(), -1);
  int next = 0;
  for (int v = 0; v < size(); ++v) {
    if (id[v] != -1) continue;
    std::queue<int> q;
    id[v] = next;
    q.push(v);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int w = 0; w < size(); ++w) {
        if (adj_.get(x, w) && id[w] == -1) {
          id[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return id;
}

int CutGraph::component_count() const {
  auto ids = component_ids();
  return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

CutGraph CutGraph::induced(const std::vector<int>& vertex_ids) const {
  std::vector<Cut> verts;
  verts.reserve(vertex_ids.size());
  for (int v : vertex_ids) verts.push_back(vertex(v));
  BitMatrix adj(static_cast<int>(vertex_ids.size()));
  for (std::size_t i = 0; i < vertex_ids.size(); ++i)
    for (std::size_t j = i + 1; j < vertex_ids.size(); ++j)
      adj.set_sym(static_cast<int>(i), static_cast<int>(j),
                  adj_.get(vertex_ids[i], vertex_ids[j]));
  return from_adjacency(std::move(verts), std::move(adj));
}

CutGraph CutGraph::link(int v) const {
  if (v < 0 || v >= size()) throw std::domain_error("link of a missing vertex");
  std::vector<int> nbrs;
  for (int w = 0; w < size(); ++w)
    if (adj_.get(v, w)) nbrs.push_back(w);
  return induced(nbrs);
}

CutGraph CutGraph::link_intersection(const std::vector<int>& vs) const {
  std::vector<int> common;
  for (int w = 0; w < size(); ++w) {
    bool in_all = true;
    for (int v : vs) {
      if (v < 0 || v >= size()) throw std::domain_error("link of a missing vertex");
      if (w == v || !adj_.get(v, w)) {
        in_all = false;
        break;
      }
    }
    if (in_all) common.push_back(w);
  }
  return induced(common);
}

CutGraph CutGraph::opposite() const {
  BitMatrix adj(size());
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) adj.set_sym(i, j, !adj_.get(i, j));
  return from_adjacency(vertices_, std::move(adj));
}

// ---------------------------------------------------------------------------
// Cliques: exact branch and bound on candidate bitsets.

namespace {

struct CliqueSearch {
  const BitMatrix* adj;
  int n, words;
  std::vector<std::uint64_t> scratch;
  int best = 0;
  std::vector<int> current;
  std::vector<std::vector<int>>* collect = nullptr;  // maximal cliques when set

  void run(std::vector<std::uint64_t> cand, std::vector<std::uint64_t> excluded) {
    int cand_count = 0;
    for (auto w : cand) cand_count += std::popcount(w);
    if (!collect && static_cast<int>(current.size()) + cand_count <= best) return;
    if (cand_count == 0) {
      bool maximal = true;
      for (auto w : excluded)
        if (w) maximal = false;
      if (maximal) {
        best = std::max(best, static_cast<int>(current.size()));
        if (collect) collect->push_back(current);
      }
      return;
    }
    // Branch on candidates not adjacent to a pivot (Bron-Kerbosch style).
    int pivot = -1;
    for (int i = 0; i < words && pivot < 0; ++i) {
      std::uint64_t w = cand[i] | excluded[i];
      if (w) pivot = i * 64 + std::countr_zero(w);
    }
    std::vector<int> branch;
    for (int i = 0; i < words; ++i) {
      std::uint64_t w = cand[i] & ~adj->row(pivot)[i];
      while (w) {
        int v = i * 64 + std::countr_zero(w);
        w &= w - 1;
        branch.push_back(v);
      }
    }
    for (int v : branch) {
      std::vector<std::uint64_t> c2(words), x2(words);
      for (int i = 0; i < words; ++i) {
        c2[i] = cand[i] & adj->row(v)[i];
        x2[i] = excluded[i] & adj->row(v)[i];
      }
      current.push_back(v);
      run(c2, x2);
      current.pop_back();
      cand[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t(1) << (v % 64));
      excluded[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64);
    }
  }
};

}  // namespace

int CutGraph::max_clique_size() const {
  if (size() == 0) return 0;
  CliqueSearch s;
  s.adj = &adj_;
  s.n = size();
  s.words = adj_.words();
  std::vector<std::uint64_t> cand(s.words, 0), excluded(s.words, 0);
  for (int v = 0; v < size(); ++v)
    cand[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64);
  s.run(cand, excluded);
  return s.best;
}

std::vector<std::vector<int>> CutGraph::maximal_cliques() const {
  std::vector<std::vector<int>> out;
  if (size() == 0) return out;
  CliqueSearch s;
  s.adj = &adj_;
  s.n = size();
  s.words = adj_.words();
  s.collect = &out;
  std::vector<std::uint64_t> cand(s.words, 0), excluded(s.words, 0);
  for (int v = 0; v < size(); ++v)
    cand[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64);
  s.run(cand, excluded);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CutGraph::triangle_free() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      if (!adj_.get(i, j)) continue;
      for (int k = j + 1; k < size(); ++k)
        if (adj_.get(i, k) && adj_.get(j, k)) return false;
    }
  return true;
}

bool CutGraph::is_regular(int degree_wanted) const {
  for (int i = 0; i < size(); ++i)
    if (degree(i) != degree_wanted) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism search with degree-class pruning.

namespace {

std::vector<std::uint64_t> invariant_classes(const CutGraph& g) {
  const int n = g.size();
  std::vector<std::uint64_t> inv(n);
  for (int v = 0; v < n; ++v) inv[v] = static_cast<std::uint64_t>(g.degree(v));
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> nbr;
      for (int w = 0; w < n; ++w)
        if (g.edge(v, w)) nbr.push_back(inv[w]);
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = inv[v] * 1000003 + 17;
      for (auto x : nbr) h = h * 1000003 + x + 1;
      next[v] = h;
    }
    if (next != inv) changed = true;
    inv = std::move(next);
    if (!changed) break;
  }
  return inv;
}

bool extend_iso(const CutGraph& g, const CutGraph& h, const std::vector<std::uint64_t>& ginv,
                const std::vector<std::uint64_t>& hinv, std::vector<int>& map,
                std::vector<bool>& used, int v) {
  const int n = g.size();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || ginv[v] != hinv[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.edge(v, u) != h.edge(w, map[u])) ok = false;
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_iso(g, h, ginv, hinv, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_graph_isomorphism(const CutGraph& g,
                                                       const CutGraph& h) {
  if (g.size() != h.size()) return std::nullopt;
  if (g.size() > 400) throw std::length_error("isomorphism search limited to 400 vertices");
  auto ginv = invariant_classes(g);
  auto hinv = invariant_classes(h);
  auto gs = ginv, hs = hinv;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return std::nullopt;
  std::vector<int> map(g.size(), -1);
  std::vector<bool> used(g.size(), false);
  if (extend_iso(g, h, ginv, hinv, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace cutcx

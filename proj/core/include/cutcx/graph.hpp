#ifndef CUTCX_GRAPH_HPP
#define CUTCX_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutcx/cuts.hpp"

namespace cutcx {

/// Square symmetric bit matrix for adjacency.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), data_(std::size_t(n) * words_) {}

  int size() const { return n_; }
  bool get(int i, int j) const {
    return data_[std::size_t(i) * words_ + std::size_t(j) / 64] >> (j % 64) & 1;
  }
  void set(int i, int j, bool v) {
    auto& w = data_[std::size_t(i) * words_ + std::size_t(j) / 64];
    const std::uint64_t bit = std::uint64_t(1) << (j % 64);
    if (v)
      w |= bit;
    else
      w &= ~bit;
  }
  void set_sym(int i, int j, bool v) {
    set(i, j, v);
    set(j, i, v);
  }
  const std::uint64_t* row(int i) const { return data_.data() + std::size_t(i) * words_; }
  int words() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct DiameterResult {
  bool connected = false;
  int diameter = 0;  // meaningful only when connected

  std::string str() const {
    return connected ? std::to_string(diameter) : std::string("disconnected");
  }
};

/// The simplicial graph on a set of cuts with compatibility edges.
class CutGraph {
 public:
  /// Edges from the crossing predicate on the given distinct cuts.
  static CutGraph build(std::vector<Cut> cuts);
  /// Fast path: cuts presented as masks over one atom space.
  static CutGraph build(const AtomSpace& atoms, const std::vector<std::uint64_t>& masks);
  /// Explicit graph with the given adjacency (used for derived graphs).
  static CutGraph from_adjacency(std::vector<Cut> cuts, BitMatrix adj);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Cut>& vertices() const { return vertices_; }
  const Cut& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  const BitMatrix& adjacency() const { return adj_; }

  bool edge(int i, int j) const { return adj_.get(i, j); }
  int degree(int i) const;
  std::size_t edge_count() const;
  std::optional<int> index_of(const Cut& c) const;

  std::vector<int> bfs_distances(int source) const;  // -1 for unreachable
  DiameterResult diameter() const;
  std::vector<int> component_ids() const;  // one id per vertex
  int component_count() const;

  CutGraph induced(const std::vector<int>& vertex_ids) const;
  CutGraph link(int v) const;
  CutGraph link_intersection(const std::vector<int>& vs) const;
  CutGraph opposite() const;  // same vertices, complemented edges

  int max_clique_size() const;
  std::vector<std::vector<int>> maximal_cliques() const;

  bool triangle_free() const;
  bool is_regular(int degree) const;

 private:
  std::vector<Cut> vertices_;
  BitMatrix adj_;
};

/// Isomorphism test on adjacency structure (labels ignored); both graphs
/// must be small. Returns a vertex map g -> h when one exists.
std::optional<std::vector<int>> find_graph_isomorphism(const CutGraph& g,
                                                       const CutGraph& h);

}  // namespace cutcx

#endif

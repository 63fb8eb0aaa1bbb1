#ifndef CUTCX_SPACE_HPP
#define CUTCX_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutcx/count.hpp"

namespace cutcx {

class ClopenSet;
namespace detail {
struct SpaceNode;
}

/// A second-countable Stone space, described as a closed subset of Cantor
/// space (the space of infinite binary strings). Points live on the infinite
/// binary tree; cylinders are addressed by finite prefix strings of '0'/'1'.
///
/// Constructors:
///   finite(n)      points i = 1^i 0^infinity for 0 <= i < n
///   cantor()       all infinite binary strings
///   convergent()   omega+1: points p_k = 1^k 0^infinity plus p_inf = 1^infinity
///   union_of(l, r) prefix bit 0 selects l, prefix bit 1 selects r
///   subspace(b, w) the part of b inside a nonempty clopen window w
class SpaceSpec {
 public:
  enum class Kind { Finite, Cantor, Convergent, Union, Subspace };

  SpaceSpec() = default;  // empty handle; only valid after assignment

  static SpaceSpec finite(int n);
  static SpaceSpec cantor();
  static SpaceSpec convergent();
  static SpaceSpec union_of(SpaceSpec left, SpaceSpec right);
  static SpaceSpec subspace(SpaceSpec base, ClopenSet window);

  Kind kind() const;
  int finite_size() const;           // Finite only
  const SpaceSpec& left() const;     // Union only
  const SpaceSpec& right() const;    // Union only
  const SpaceSpec& base() const;     // Subspace only
  const ClopenSet& window() const;   // Subspace only

  bool valid() const { return node_ != nullptr; }
  bool operator==(const SpaceSpec& o) const;
  bool operator!=(const SpaceSpec& o) const { return !(*this == o); }

  std::string str() const;

 private:
  explicit SpaceSpec(std::shared_ptr<const detail::SpaceNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::SpaceNode> node_;
};

/// Exact cardinality of [s] intersected with the space's point set.
CountClass count_cylinder(const SpaceSpec& spec, std::string_view s);

/// Total number of points.
CountClass count_space(const SpaceSpec& spec);

/// A clopen subset of a space, held in canonical form: the antichain of
/// maximal cylinder strings s with {} != [s] & E and [s] & E inside U.
/// The canonical form depends only on the trace U & E, so structural
/// equality is set equality.
class ClopenSet {
 public:
  ClopenSet() = default;

  const SpaceSpec& space() const { return space_; }
  const std::vector<std::string>& antichain() const { return antichain_; }

  bool empty() const { return antichain_.empty(); }
  bool is_whole_space() const {
    return antichain_.size() == 1 && antichain_[0].empty();
  }

  CountClass count() const;
  ClopenSet complement() const;
  ClopenSet intersect(const ClopenSet& o) const;
  ClopenSet unite(const ClopenSet& o) const;
  bool subset_of(const ClopenSet& o) const;

  bool operator==(const ClopenSet& o) const;
  bool operator!=(const ClopenSet& o) const { return !(*this == o); }
  bool operator<(const ClopenSet& o) const;  // lexicographic on antichains

  std::string str() const;  // antichain joined by commas, root shown as ""

 private:
  friend ClopenSet canonicalize(const SpaceSpec&, const std::vector<std::string>&);
  friend class SpaceSpec;
  SpaceSpec space_;
  std::vector<std::string> antichain_;  // sorted
};

/// Canonical antichain of the union of the given cylinders, relative to the
/// space. Idempotent; the result depends only on the denoted subset of E.
ClopenSet canonicalize(const SpaceSpec& spec, const std::vector<std::string>& raw);

ClopenSet whole_space(const SpaceSpec& spec);
ClopenSet empty_clopen(const SpaceSpec& spec);

/// The partition of E into nonempty cylinder classes of depth at most d;
/// a class keeps the shorter string from the depth at which it became a
/// single point. Classes are returned in lexicographic order.
std::vector<std::pair<std::string, CountClass>> points_at_depth(const SpaceSpec& spec,
                                                                int depth);

/// A self-homeomorphism of Cantor space given by a complete prefix-code
/// substitution: s_i y |-> t_i y. Both code sides must be complete antichains
/// (Kraft sum one).
class PrefixMap {
 public:
  static PrefixMap from_pairs(std::vector<std::pair<std::string, std::string>> pairs);
  static PrefixMap identity();
  PrefixMap inverse() const;

  const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }
  int max_code_length() const;

  /// Exact count of the preimage cylinder set f^{-1}([s]) inside E.
  CountClass preimage_count(const SpaceSpec& spec, std::string_view s) const;

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
};

/// A PrefixMap checked to carry the given space onto itself: cylinder counts
/// are preserved for every string up to depth max code length + slack.
/// Validation failure throws.
class ValidatedPrefixMap {
 public:
  static ValidatedPrefixMap validate(PrefixMap map, const SpaceSpec& spec, int slack);

  const PrefixMap& map() const { return map_; }
  const SpaceSpec& space() const { return spec_; }
  int validation_depth() const { return depth_; }

 private:
  ValidatedPrefixMap(PrefixMap m, SpaceSpec s, int d)
      : map_(std::move(m)), spec_(std::move(s)), depth_(d) {}
  PrefixMap map_;
  SpaceSpec spec_;
  int depth_;
};

/// Image of a clopen set under a validated map, in canonical form.
ClopenSet apply_prefix_map(const ValidatedPrefixMap& m, const ClopenSet& u);

}  // namespace cutcx

#endif

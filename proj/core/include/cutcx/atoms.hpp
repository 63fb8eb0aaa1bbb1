#ifndef CUTCX_ATOMS_HPP
#define CUTCX_ATOMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutcx/space.hpp"

namespace cutcx {

/// The depth-bounded view of a space: its cylinder classes at a fixed depth,
/// treated as atoms of a finite Boolean algebra. Every clopen set whose
/// canonical antichain stays within the depth is a union of these classes,
/// so depth-bounded cut arithmetic reduces to exact bitmask arithmetic.
class AtomSpace {
 public:
  static AtomSpace build(const SpaceSpec& spec, int depth);

  const SpaceSpec& spec() const { return spec_; }
  int depth() const { return depth_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<CountClass>& counts() const { return counts_; }

  std::uint64_t universe() const {
    return size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << size()) - 1;
  }

  CountClass mask_count(std::uint64_t m) const;
  bool nonperipheral(std::uint64_t m) const;

  /// All four quadrants of the two partitions are nonempty. Exact for masks
  /// over this atom space because every atom class is nonempty.
  bool crosses(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t u = universe();
    a &= u;
    b &= u;
    return (a & b) && (a & ~b & u) && (~a & b & u) && ((~a & ~b & u) != 0);
  }

  ClopenSet clopen(std::uint64_t m) const;

  /// Exact mask of a clopen set, or nullopt when the set is not a union of
  /// the atom classes (its antichain reaches below the depth).
  std::optional<std::uint64_t> mask_of(const ClopenSet& u) const;

 private:
  SpaceSpec spec_;
  int depth_ = 0;
  std::vector<std::string> labels_;
  std::vector<CountClass> counts_;
};

}  // namespace cutcx

#endif

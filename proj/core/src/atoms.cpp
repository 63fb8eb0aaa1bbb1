#include "cutcx/atoms.hpp"

#include <stdexcept>

#include "cutcx/strings.hpp"

namespace cutcx {

AtomSpace AtomSpace::build(const SpaceSpec& spec, int depth) {
  auto classes = points_at_depth(spec, depth);
  if (classes.size() > 64)
    throw std::length_error("atom space too large: " + std::to_string(classes.size()) +
                            " classes at depth " + std::to_string(depth) +
                            " (limit 64)");
  AtomSpace a;
  a.spec_ = spec;
  a.depth_ = depth;
  for (auto& [s, c] : classes) {
    a.labels_.push_back(s);
    a.counts_.push_back(c);
  }
  return a;
}

CountClass AtomSpace::mask_count(std::uint64_t m) const {
  CountClass total = CountClass::exactly(0);
  for (int i = 0; i < size(); ++i)
    if (m >> i & 1) total += counts_[i];
  return total;
}

bool AtomSpace::nonperipheral(std::uint64_t m) const {
  const std::uint64_t u = universe();
  return mask_count(m & u).at_least(2) && mask_count(~m & u).at_least(2);
}

ClopenSet AtomSpace::clopen(std::uint64_t m) const {
  std::vector<std::string> raw;
  for (int i = 0; i < size(); ++i)
    if (m >> i & 1) raw.push_back(labels_[i]);
  return canonicalize(spec_, raw);
}

std::optional<std::uint64_t> AtomSpace::mask_of(const ClopenSet& u) const {
  if (u.space() != spec_) throw std::domain_error("clopen set over a different space");
  std::uint64_t m = 0;
  for (int i = 0; i < size(); ++i) {
    ClopenSet cls = canonicalize(spec_, {labels_[i]});
    if (cls.subset_of(u))
      m |= std::uint64_t(1) << i;
    else if (cls.intersect(u).count().nonzero())
      return std::nullopt;  // the set splits this class
  }
  return m;
}

}  // namespace cutcx

#include "cutcx/space.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "cutcx/strings.hpp"

namespace cutcx {

namespace detail {

struct SpaceNode {
  SpaceSpec::Kind kind;
  int n = 0;
  SpaceSpec left;
  SpaceSpec right;
  SpaceSpec base;
  ClopenSet window;
};

}  // namespace detail

using detail::SpaceNode;

namespace {

std::shared_ptr<const SpaceNode> make_node(SpaceNode n) {
  return std::make_shared<const SpaceNode>(std::move(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// SpaceSpec

SpaceSpec SpaceSpec::finite(int n) {
  if (n < 1) throw std::invalid_argument("finite space needs at least one point");
  SpaceNode node;
  node.kind = Kind::Finite;
  node.n = n;
  return SpaceSpec(make_node(std::move(node)));
}

SpaceSpec SpaceSpec::cantor() {
  SpaceNode node;
  node.kind = Kind::Cantor;
  return SpaceSpec(make_node(std::move(node)));
}

SpaceSpec SpaceSpec::convergent() {
  SpaceNode node;
  node.kind = Kind::Convergent;
  return SpaceSpec(make_node(std::move(node)));
}

SpaceSpec SpaceSpec::union_of(SpaceSpec left, SpaceSpec right) {
  if (!left.valid() || !right.valid())
    throw std::invalid_argument("union of invalid space specs");
  SpaceNode node;
  node.kind = Kind::Union;
  node.left = std::move(left);
  node.right = std::move(right);
  return SpaceSpec(make_node(std::move(node)));
}

SpaceSpec SpaceSpec::subspace(SpaceSpec base, ClopenSet window) {
  if (!base.valid()) throw std::invalid_argument("subspace of invalid space spec");
  if (window.space() != base)
    throw std::domain_error("subspace window belongs to a different space");
  if (window.empty())
    throw std::invalid_argument("subspace window is empty; Stone spaces are nonempty");
  SpaceNode node;
  node.kind = Kind::Subspace;
  node.base = std::move(base);
  node.window = std::move(window);
  return SpaceSpec(make_node(std::move(node)));
}

SpaceSpec::Kind SpaceSpec::kind() const { return node_->kind; }
int SpaceSpec::finite_size() const {
  if (node_->kind != Kind::Finite) throw std::domain_error("finite_size on non-finite spec");
  return node_->n;
}
const SpaceSpec& SpaceSpec::left() const {
  if (node_->kind != Kind::Union) throw std::domain_error("left() on non-union spec");
  return node_->left;
}
const SpaceSpec& SpaceSpec::right() const {
  if (node_->kind != Kind::Union) throw std::domain_error("right() on non-union spec");
  return node_->right;
}
const SpaceSpec& SpaceSpec::base() const {
  if (node_->kind != Kind::Subspace) throw std::domain_error("base() on non-subspace spec");
  return node_->base;
}
const ClopenSet& SpaceSpec::window() const {
  if (node_->kind != Kind::Subspace) throw std::domain_error("window() on non-subspace spec");
  return node_->window;
}

bool SpaceSpec::operator==(const SpaceSpec& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Finite:
      return node_->n == o.node_->n;
    case Kind::Cantor:
    case Kind::Convergent:
      return true;
    case Kind::Union:
      return node_->left == o.node_->left && node_->right == o.node_->right;
    case Kind::Subspace:
      return node_->base == o.node_->base &&
             node_->window.antichain() == o.node_->window.antichain();
  }
  return false;
}

std::string SpaceSpec::str() const {
  if (!valid()) return "<empty>";
  switch (node_->kind) {
    case Kind::Finite:
      return "finite(" + std::to_string(node_->n) + ")";
    case Kind::Cantor:
      return "cantor";
    case Kind::Convergent:
      return "convergent";
    case Kind::Union:
      return "union(" + node_->left.str() + "," + node_->right.str() + ")";
    case Kind::Subspace:
      return "subspace(" + node_->base.str() + ",[" + node_->window.str() + "])";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Counting

namespace {

// Splits s as 1^a 0^b; returns false when a '1' follows a '0'.
bool ones_then_zeros(std::string_view s, std::size_t& ones, std::size_t& zeros) {
  std::size_t a = 0;
  while (a < s.size() && s[a] == '1') ++a;
  for (std::size_t i = a; i < s.size(); ++i)
    if (s[i] == '1') return false;
  ones = a;
  zeros = s.size() - a;
  return true;
}

}  // namespace

CountClass count_cylinder(const SpaceSpec& spec, std::string_view s) {
  switch (spec.kind()) {
    case SpaceSpec::Kind::Finite: {
      std::size_t ones = 0, zeros = 0;
      if (!ones_then_zeros(s, ones, zeros)) return CountClass::exactly(0);
      const auto n = static_cast<std::size_t>(spec.finite_size());
      if (zeros > 0) return CountClass::exactly(ones < n ? 1 : 0);
      return CountClass::exactly(ones < n ? n - ones : 0);
    }
    case SpaceSpec::Kind::Cantor:
      return CountClass::infinite();
    case SpaceSpec::Kind::Convergent: {
      std::size_t ones = 0, zeros = 0;
      if (!ones_then_zeros(s, ones, zeros)) return CountClass::exactly(0);
      return zeros > 0 ? CountClass::exactly(1) : CountClass::infinite();
    }
    case SpaceSpec::Kind::Union: {
      if (s.empty())
        return count_cylinder(spec.left(), "") + count_cylinder(spec.right(), "");
      const SpaceSpec& half = s[0] == '0' ? spec.left() : spec.right();
      return count_cylinder(half, s.substr(1));
    }
    case SpaceSpec::Kind::Subspace: {
      CountClass total = CountClass::exactly(0);
      for (const std::string& w : spec.window().antichain()) {
        if (!comparable(w, s)) continue;
        total += count_cylinder(spec.base(), w.size() >= s.size() ? std::string_view(w) : s);
      }
      return total;
    }
  }
  return CountClass::exactly(0);
}

CountClass count_space(const SpaceSpec& spec) { return count_cylinder(spec, ""); }

// ---------------------------------------------------------------------------
// Canonicalization: one in-order pass over the prefix trie of the raw strings
// collecting maximal covered cylinders and maximal disjoint cylinders.

namespace {

struct Trie {
  std::array<std::unique_ptr<Trie>, 2> child;
  bool terminal = false;
};

std::unique_ptr<Trie> build_trie(const std::vector<std::string>& raw) {
  auto root = std::make_unique<Trie>();
  for (const std::string& s : raw) {
    check_binary_string(s);
    Trie* cur = root.get();
    for (char c : s) {
      auto& slot = cur->child[c - '0'];
      if (!slot) slot = std::make_unique<Trie>();
      cur = slot.get();
    }
    cur->terminal = true;
  }
  return root;
}

enum class Rel { Empty, Covered, Disjoint, Mixed };

// Relation of [s] & E to the union U of the trie cylinders. Maximal covered
// and disjoint cylinders are appended along the way; the root cases are
// handled by the caller.
Rel split_walk(const SpaceSpec& spec, std::string& s, const Trie* node, bool covered_above,
               std::vector<std::string>* cov, std::vector<std::string>* dis) {
  if (count_cylinder(spec, s).is_zero()) return Rel::Empty;
  if (covered_above) return Rel::Covered;
  if (node == nullptr) return Rel::Disjoint;

  Rel part[2];
  for (int b = 0; b < 2; ++b) {
    const Trie* c = node->child[b].get();
    s.push_back(static_cast<char>('0' + b));
    part[b] = split_walk(spec, s, c, c != nullptr && c->terminal, cov, dis);
    s.pop_back();
  }

  auto covered_ish = [](Rel r) { return r == Rel::Covered || r == Rel::Empty; };
  auto disjoint_ish = [](Rel r) { return r == Rel::Disjoint || r == Rel::Empty; };
  if (covered_ish(part[0]) && covered_ish(part[1])) return Rel::Covered;
  if (disjoint_ish(part[0]) && disjoint_ish(part[1])) return Rel::Disjoint;

  for (int b = 0; b < 2; ++b) {
    if (part[b] == Rel::Covered && cov) cov->push_back(s + static_cast<char>('0' + b));
    if (part[b] == Rel::Disjoint && dis) dis->push_back(s + static_cast<char>('0' + b));
  }
  return Rel::Mixed;
}

// Computes both canonical antichains at once: the set itself and its
// complement relative to E.
void split_relative(const SpaceSpec& spec, const std::vector<std::string>& raw,
                    std::vector<std::string>* cov, std::vector<std::string>* dis) {
  auto trie = build_trie(raw);
  std::string s;
  Rel top = split_walk(spec, s, trie.get(), trie->terminal, cov, dis);
  if (top == Rel::Covered && cov) cov->push_back("");
  if (top == Rel::Disjoint && dis) dis->push_back("");
  if (cov) std::sort(cov->begin(), cov->end());
  if (dis) std::sort(dis->begin(), dis->end());
}

}  // namespace

ClopenSet canonicalize(const SpaceSpec& spec, const std::vector<std::string>& raw) {
  if (!spec.valid()) throw std::invalid_argument("canonicalize: empty space spec");
  ClopenSet out;
  out.space_ = spec;
  split_relative(spec, raw, &out.antichain_, nullptr);
  return out;
}

ClopenSet whole_space(const SpaceSpec& spec) { return canonicalize(spec, {""}); }
ClopenSet empty_clopen(const SpaceSpec& spec) { return canonicalize(spec, {}); }

// ---------------------------------------------------------------------------
// ClopenSet

CountClass ClopenSet::count() const {
  CountClass total = CountClass::exactly(0);
  for (const std::string& s : antichain_) total += count_cylinder(space_, s);
  return total;
}

ClopenSet ClopenSet::complement() const {
  ClopenSet out;
  out.space_ = space_;
  split_relative(space_, antichain_, nullptr, &out.antichain_);
  return out;
}

ClopenSet ClopenSet::intersect(const ClopenSet& o) const {
  if (space_ != o.space_) throw std::domain_error("clopen sets over different spaces");
  std::vector<std::string> raw;
  for (const std::string& a : antichain_) {
    for (const std::string& b : o.antichain_) {
      if (prefix_of(a, b))
        raw.push_back(b);
      else if (prefix_of(b, a))
        raw.push_back(a);
    }
  }
  return canonicalize(space_, raw);
}

ClopenSet ClopenSet::unite(const ClopenSet& o) const {
  if (space_ != o.space_) throw std::domain_error("clopen sets over different spaces");
  std::vector<std::string> raw = antichain_;
  raw.insert(raw.end(), o.antichain_.begin(), o.antichain_.end());
  return canonicalize(space_, raw);
}

bool ClopenSet::subset_of(const ClopenSet& o) const {
  return intersect(o.complement()).empty();
}

bool ClopenSet::operator==(const ClopenSet& o) const {
  if (space_ != o.space_) throw std::domain_error("clopen sets over different spaces");
  return antichain_ == o.antichain_;
}

bool ClopenSet::operator<(const ClopenSet& o) const {
  if (space_ != o.space_) throw std::domain_error("clopen sets over different spaces");
  return antichain_ < o.antichain_;
}

std::string ClopenSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < antichain_.size(); ++i) {
    if (i) out += ",";
    out += antichain_[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// points_at_depth

namespace {

void classes_rec(const SpaceSpec& spec, std::string& s, int depth,
                 std::vector<std::pair<std::string, CountClass>>& out) {
  CountClass c = count_cylinder(spec, s);
  if (c.is_zero()) return;
  if (c == CountClass::exactly(1) || static_cast<int>(s.size()) >= depth) {
    out.emplace_back(s, c);
    return;
  }
  for (int b = 0; b < 2; ++b) {
    s.push_back(static_cast<char>('0' + b));
    classes_rec(spec, s, depth, out);
    s.pop_back();
  }
}

}  // namespace

std::vector<std::pair<std::string, CountClass>> points_at_depth(const SpaceSpec& spec,
                                                                int depth) {
  if (depth < 0) throw std::invalid_argument("points_at_depth: negative depth");
  std::vector<std::pair<std::string, CountClass>> out;
  std::string s;
  classes_rec(spec, s, depth, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// PrefixMap

namespace {

void check_complete_code(const std::vector<std::string>& code, const char* side) {
  std::size_t max_len = 0;
  for (const std::string& s : code) {
    check_binary_string(s);
    max_len = std::max(max_len, s.size());
  }
  if (max_len > 48) throw std::invalid_argument("prefix code too deep");
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      if (comparable(code[i], code[j]))
        throw std::invalid_argument(std::string("prefix map ") + side +
                                    " code is not an antichain");
  std::uint64_t kraft = 0;
  for (const std::string& s : code) kraft += std::uint64_t(1) << (max_len - s.size());
  if (kraft != std::uint64_t(1) << max_len)
    throw std::invalid_argument(std::string("prefix map ") + side +
                                " code is not complete");
}

}  // namespace

PrefixMap PrefixMap::from_pairs(std::vector<std::pair<std::string, std::string>> pairs) {
  if (pairs.empty()) throw std::invalid_argument("prefix map needs at least one pair");
  std::vector<std::string> dom, img;
  for (auto& [s, t] : pairs) {
    dom.push_back(s);
    img.push_back(t);
  }
  check_complete_code(dom, "source");
  check_complete_code(img, "target");
  std::sort(pairs.begin(), pairs.end());
  PrefixMap m;
  m.pairs_ = std::move(pairs);
  return m;
}

PrefixMap PrefixMap::identity() { return from_pairs({{"", ""}}); }

PrefixMap PrefixMap::inverse() const {
  std::vector<std::pair<std::string, std::string>> swapped;
  for (const auto& [s, t] : pairs_) swapped.emplace_back(t, s);
  return from_pairs(std::move(swapped));
}

int PrefixMap::max_code_length() const {
  std::size_t m = 0;
  for (const auto& [s, t] : pairs_) m = std::max({m, s.size(), t.size()});
  return static_cast<int>(m);
}

CountClass PrefixMap::preimage_count(const SpaceSpec& spec, std::string_view s) const {
  for (const auto& [src, dst] : pairs_) {
    if (prefix_of(dst, s))
      return count_cylinder(spec, src + std::string(s.substr(dst.size())));
  }
  CountClass total = CountClass::exactly(0);
  for (const auto& [src, dst] : pairs_) {
    if (prefix_of(s, dst)) total += count_cylinder(spec, src);
  }
  return total;
}

ValidatedPrefixMap ValidatedPrefixMap::validate(PrefixMap map, const SpaceSpec& spec,
                                                int slack) {
  if (slack < 0) throw std::invalid_argument("negative validation slack");
  const int depth = map.max_code_length() + slack;
  if (depth > 28) throw std::invalid_argument("validation depth too large");
  // Enumerate every cylinder up to the validation depth and compare counts.
  std::vector<std::string> frontier = {""};
  for (int d = 0; d <= depth; ++d) {
    std::vector<std::string> next;
    for (const std::string& v : frontier) {
      if (map.preimage_count(spec, v) != count_cylinder(spec, v))
        throw std::invalid_argument("prefix map does not preserve counts at [" + v +
                                    "] for " + spec.str());
      if (d < depth) {
        next.push_back(v + "0");
        next.push_back(v + "1");
      }
    }
    frontier = std::move(next);
  }
  return ValidatedPrefixMap(std::move(map), spec, depth);
}

namespace {

void map_refined(const PrefixMap& m, const std::string& u, std::vector<std::string>& out,
                 int guard) {
  if (guard > 64) throw std::logic_error("prefix map refinement ran away");
  for (const auto& [src, dst] : m.pairs()) {
    if (prefix_of(src, u)) {
      out.push_back(dst + u.substr(src.size()));
      return;
    }
  }
  map_refined(m, u + "0", out, guard + 1);
  map_refined(m, u + "1", out, guard + 1);
}

}  // namespace

ClopenSet apply_prefix_map(const ValidatedPrefixMap& m, const ClopenSet& u) {
  if (u.space() != m.space())
    throw std::domain_error("prefix map was validated for a different space");
  std::vector<std::string> image;
  for (const std::string& s : u.antichain()) map_refined(m.map(), s, image, 0);
  return canonicalize(u.space(), image);
}

}  // namespace cutcx

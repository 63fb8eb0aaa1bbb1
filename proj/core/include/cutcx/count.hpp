#ifndef CUTCX_COUNT_HPP
#define CUTCX_COUNT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cutcx {

/// Exact cardinality of a point set: a nonnegative integer or infinity.
/// Addition saturates at infinity.
class CountClass {
 public:
  CountClass() : infinite_(false), value_(0) {}

  static CountClass exactly(std::uint64_t k) { return CountClass(false, k); }
  static CountClass infinite() { return CountClass(true, 0); }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  bool nonzero() const { return infinite_ || value_ > 0; }

  /// Exact finite value; throws on infinity.
  std::uint64_t value() const {
    if (infinite_) throw std::domain_error("CountClass: value() on infinite count");
    return value_;
  }

  bool at_least(std::uint64_t k) const { return infinite_ || value_ >= k; }

  CountClass operator+(const CountClass& o) const {
    if (infinite_ || o.infinite_) return infinite();
    return exactly(value_ + o.value_);
  }
  CountClass& operator+=(const CountClass& o) { return *this = *this + o; }

  bool operator==(const CountClass& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  bool operator!=(const CountClass& o) const { return !(*this == o); }
  bool operator<(const CountClass& o) const {
    if (infinite_ != o.infinite_) return !infinite_;
    return !infinite_ && value_ < o.value_;
  }

  std::string str() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

 private:
  CountClass(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::uint64_t value_;
};

}  // namespace cutcx

#endif

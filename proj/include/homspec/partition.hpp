#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homspec {

/// Set partition of {0..n-1} in restricted-growth-string form: rgs[i] is the
/// block of element i, and block b first appears before block b+1.
class Partition {
 public:
  static constexpr std::size_t kMaxElements = 12;

  explicit Partition(std::vector<std::uint8_t> rgs) : rgs_(std::move(rgs)) {
    std::uint8_t next = 0;
    for (auto b : rgs_) {
      if (b > next) throw std::invalid_argument("not a restricted growth string");
      if (b == next) ++next;
    }
    block_count_ = next;
  }

  static Partition singletons(std::size_t n) {
    std::vector<std::uint8_t> rgs(n);
    for (std::size_t i = 0; i < n; ++i) rgs[i] = static_cast<std::uint8_t>(i);
    return Partition(std::move(rgs));
  }

  std::size_t size() const noexcept { return rgs_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::size_t block_of(std::size_t element) const { return rgs_.at(element); }
  const std::vector<std::uint8_t>& rgs() const noexcept { return rgs_; }
  bool trivial() const noexcept { return block_count_ == rgs_.size(); }

  std::vector<std::vector<std::size_t>> blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(i);
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint8_t> rgs_;
  std::size_t block_count_ = 0;
};

inline void check_partition_guard(std::size_t n) {
  if (n < 1 || n > Partition::kMaxElements)
    throw std::out_of_range("partition enumeration supports 1 <= n <= 12, got " + std::to_string(n));
}

/// Calls f(partition) for every set partition of {0..n-1}, in RGS
/// lexicographic order.
template <typename F>
void for_each_partition(std::size_t n, F&& f) {
  check_partition_guard(n);
  std::vector<std::uint8_t> a(n, 0), prefix_max(n, 0);
  while (true) {
    f(Partition(a));
    // Rightmost position that can still grow.
    std::size_t i = n;
    while (i-- > 1) {
      if (a[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0 || i >= n) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

inline std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// Möbius weight (-1)^(n-|P|) * prod over blocks of (|S|-1)!.
inline std::int64_t moebius_coeff(const Partition& p) {
  std::int64_t value = (p.size() - p.block_count()) % 2 == 0 ? 1 : -1;
  for (const auto& block : p.blocks())
    for (std::size_t k = 2; k < block.size(); ++k) value *= static_cast<std::int64_t>(k);
  return value;
}

}  // namespace homspec

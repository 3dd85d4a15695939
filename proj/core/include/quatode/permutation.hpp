#pragma once

#include <cstddef>
#include <vector>

namespace quatode {

/// A bijection on {0, …, n-1}; image()[i] is where i is sent.
class Permutation {
 public:
  /// Throws InputError if `image` is not a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator[](std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

 private:
  std::vector<std::size_t> image_;
};

/// Disjoint cycles in normal form: each cycle starts at its largest element
/// and the cycles are ordered by strictly decreasing leader. Fixed points
/// are kept as singleton cycles. Within a cycle, element m is followed by
/// the image of m.
struct NormalCycleForm {
  std::vector<std::vector<std::size_t>> cycles;

  /// (-1)^(n - r) with r the number of cycles.
  int sign() const;
  std::size_t size() const;
};

NormalCycleForm normal_cycle_form(const Permutation& sigma);

}  // namespace quatode

#include "quatode/permutation.hpp"

#include <numeric>
#include <string>

#include "quatode/errors.hpp"

namespace quatode {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const std::size_t m = image_[i];
    if (m >= image_.size()) {
      throw InputError("permutation index " + std::to_string(m) + " out of range");
    }
    if (hit[m]) {
      throw InputError("permutation repeats index " + std::to_string(m));
    }
    hit[m] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

int NormalCycleForm::sign() const {
  return (size() - cycles.size()) % 2 == 0 ? 1 : -1;
}

std::size_t NormalCycleForm::size() const {
  std::size_t n = 0;
  for (const auto& c : cycles) {
    n += c.size();
  }
  return n;
}

NormalCycleForm normal_cycle_form(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  NormalCycleForm form;
  std::vector<bool> seen(n, false);
  // Scanning leaders from the top guarantees each leader is the maximum of
  // its cycle: every larger element already belongs to an earlier cycle.
  for (std::size_t lead = n; lead-- > 0;) {
    if (seen[lead]) {
      continue;
    }
    std::vector<std::size_t> cycle;
    std::size_t m = lead;
    do {
      seen[m] = true;
      cycle.push_back(m);
      m = sigma[m];
    } while (m != lead);
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

}  // namespace quatode

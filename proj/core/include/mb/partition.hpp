#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace mb {

/// Integer partition: non-increasing non-negative parts, trailing zeros
/// permitted.  Indexes Schur objects and the mu^(j) constructions.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be non-increasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  /// |lambda| = sum of parts.
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Copy padded with trailing zeros to exactly n parts.
  Partition padded(std::size_t n) const {
    if (parts_.size() > n) throw std::invalid_argument("Partition: more parts than pad length");
    std::vector<int> p = parts_;
    p.resize(n, 0);
    return Partition(std::move(p));
  }

 private:
  std::vector<int> parts_;
};

}  // namespace mb

#ifndef REGT_PARTITION_HPP_
#define REGT_PARTITION_HPP_

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace regt {

// An equivalence relation E on the ground set {0, ..., n - 1}, stored as
// its blocks.  Blocks are sorted internally and ordered by least element,
// so two partitions of the same ground set compare equal exactly when
// they induce the same relation.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks)
      : n_(n), blocks_(std::move(blocks)), class_of_() {
    if (n_ <= 0) {
      throw std::invalid_argument("Partition: ground-set size must be >= 1");
    }
    class_of_.assign(static_cast<std::size_t>(n_), -1);
    for (auto& b : blocks_) {
      if (b.empty()) {
        throw std::invalid_argument("Partition: empty block");
      }
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(),
              blocks_.end(),
              [](std::vector<int> const& a, std::vector<int> const& b) {
                return a.front() < b.front();
              });
    int covered = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (int x : blocks_[i]) {
        if (x < 0 || x >= n_) {
          throw std::invalid_argument("Partition: point " + std::to_string(x)
                                      + " out of range");
        }
        if (class_of_[static_cast<std::size_t>(x)] != -1) {
          throw std::invalid_argument("Partition: point " + std::to_string(x)
                                      + " occurs in two blocks");
        }
        class_of_[static_cast<std::size_t>(x)] = static_cast<int>(i);
        ++covered;
      }
    }
    if (covered != n_) {
      throw std::invalid_argument(
          "Partition: blocks do not cover the ground set");
    }
  }

  // The universal relation X x X (a single block).
  static Partition universal(int n) {
    std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(all.begin(), all.end(), 0);
    return Partition(n, {all});
  }

  // The identity relation (all blocks singletons).
  static Partition discrete(int n) {
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < n; ++x) {
      blocks.push_back({x});
    }
    return Partition(n, std::move(blocks));
  }

  // Contiguous blocks of the given sizes: {0..s0-1}, {s0..s0+s1-1}, ...
  static Partition from_block_sizes(std::vector<int> const& sizes) {
    std::vector<std::vector<int>> blocks;
    int                           next = 0;
    for (int s : sizes) {
      if (s <= 0) {
        throw std::invalid_argument("Partition: block sizes must be >= 1");
      }
      std::vector<int> b(static_cast<std::size_t>(s));
      std::iota(b.begin(), b.end(), next);
      next += s;
      blocks.push_back(std::move(b));
    }
    return Partition(next, std::move(blocks));
  }

  int size() const noexcept {
    return n_;
  }

  int num_blocks() const noexcept {
    return static_cast<int>(blocks_.size());
  }

  std::vector<std::vector<int>> const& blocks() const noexcept {
    return blocks_;
  }

  std::vector<int> const& block(int i) const {
    return blocks_.at(static_cast<std::size_t>(i));
  }

  int block_size(int i) const {
    return static_cast<int>(block(i).size());
  }

  int class_of(int x) const {
    if (x < 0 || x >= n_) {
      throw std::invalid_argument("Partition: point out of range");
    }
    return class_of_[static_cast<std::size_t>(x)];
  }

  bool related(int x, int y) const {
    return class_of(x) == class_of(y);
  }

  friend bool operator==(Partition const& a, Partition const& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  int                           n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int>              class_of_;
};

}  // namespace regt

#endif  // REGT_PARTITION_HPP_

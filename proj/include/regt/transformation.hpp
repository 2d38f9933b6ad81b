#ifndef REGT_TRANSFORMATION_HPP_
#define REGT_TRANSFORMATION_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace regt {

// A total self-map of {0, ..., n - 1}, stored by its image sequence.
// Value semantics throughout: two transformations are equal iff their
// image sequences are equal.  Composition is left-to-right, matching
// postfix notation: x(ab) = (xa)b.
class Transformation {
 public:
  explicit Transformation(std::vector<int> img) : img_(std::move(img)) {
    if (img_.empty()) {
      throw std::invalid_argument("Transformation: degree must be >= 1");
    }
    for (int v : img_) {
      if (v < 0 || v >= degree()) {
        throw std::invalid_argument(
            "Transformation: image point out of range");
      }
    }
  }

  static Transformation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Transformation(std::move(img));
  }

  int degree() const noexcept {
    return static_cast<int>(img_.size());
  }

  int operator[](int x) const {
    return img_[static_cast<std::size_t>(x)];
  }

  std::vector<int> const& img() const noexcept {
    return img_;
  }

  friend auto operator<=>(Transformation const&,
                          Transformation const&) = default;

 private:
  std::vector<int> img_;
};

inline Transformation compose(Transformation const& a,
                              Transformation const& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<int> img(static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) {
    img[static_cast<std::size_t>(x)] = b[a[x]];
  }
  return Transformation(std::move(img));
}

// The range of a, as a sorted set of points.
inline std::vector<int> image(Transformation const& a) {
  std::vector<int> im = a.img();
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

inline int rank(Transformation const& a) {
  return static_cast<int>(image(a).size());
}

inline bool is_idempotent(Transformation const& a) {
  for (int x = 0; x < a.degree(); ++x) {
    if (a[a[x]] != a[x]) {
      return false;
    }
  }
  return true;
}

// The kernel partition pi(a) of equal-image fibers, together with the
// map a_* sending each fiber back to its common image point.
struct KernelData {
  std::vector<std::vector<int>> classes;   // fibers, ordered by least element
  std::vector<int>              star_map;  // star_map[k] = image of classes[k]
};

inline KernelData kernel_data(Transformation const& a) {
  std::vector<std::vector<int>> fibers(
      static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) {
    fibers[static_cast<std::size_t>(a[x])].push_back(x);
  }
  // nonempty fibers, keyed by least element
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (int y = 0; y < a.degree(); ++y) {
    auto& f = fibers[static_cast<std::size_t>(y)];
    if (!f.empty()) {
      keyed.emplace_back(std::move(f), y);
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](auto const& p, auto const& q) {
    return p.first.front() < q.first.front();
  });
  KernelData kd;
  for (auto& [fiber, y] : keyed) {
    kd.classes.push_back(std::move(fiber));
    kd.star_map.push_back(y);
  }
  return kd;
}

}  // namespace regt

#endif  // REGT_TRANSFORMATION_HPP_

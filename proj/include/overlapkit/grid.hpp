#pragma once

#include <stdexcept>
#include <vector>

namespace overlapkit {

/// Uniform grid on [0,1] with exact endpoints. n >= 3; point i is i/(n-1),
/// so 0.0 and 1.0 are hit exactly and refinement keeps every existing point.
class Grid {
 public:
  static Grid uniform(int n) { return Grid(n, 0); }

  /// Doubled resolution: 2n-1 points, step halved, original points kept.
  Grid refined() const { return Grid(2 * n_ - 1, depth_ + 1); }

  int n() const noexcept { return n_; }
  double step() const noexcept { return 1.0 / (n_ - 1); }
  int refinement_depth() const noexcept { return depth_; }
  const std::vector<double>& points() const noexcept { return pts_; }
  double operator[](int i) const noexcept { return pts_[i]; }

 private:
  Grid(int n, int depth) : n_(n), depth_(depth) {
    if (n < 3) throw std::invalid_argument("Grid: n must be >= 3");
    pts_.resize(n);
    for (int i = 0; i < n; ++i) pts_[i] = static_cast<double>(i) / (n - 1);
  }

  int n_;
  int depth_;
  std::vector<double> pts_;
};

}  // namespace overlapkit

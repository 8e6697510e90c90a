#ifndef APF_FINARRAY_HPP
#define APF_FINARRAY_HPP

#include <vector>

#include "apf/ast.hpp"

namespace apf {

/// Eventually-constant integer array: leftTail for j < lo, an explicit
/// window on [lo, hi], rightTail for j > hi. Kept in canonical form so
/// that structural equality coincides with equality as functions.
///
/// Canonical form: window edges equal to the adjacent tail are trimmed.
/// A constant array has an empty window (and equal tails). A pure step
/// (leftTail below some split, rightTail from the split on) keeps one
/// window cell [split, split] holding rightTail.
class FinArray {
 public:
  FinArray() : leftTail_(0), rightTail_(0), lo_(0) {}  // constant 0

  static FinArray constant(Int v);
  static FinArray make(Int leftTail, Int lo, std::vector<Int> window,
                       Int rightTail);

  const Int& leftTail() const { return leftTail_; }
  const Int& rightTail() const { return rightTail_; }
  const Int& lo() const { return lo_; }
  Int hi() const { return lo_ + Int(window_.size()) - 1; }
  const std::vector<Int>& window() const { return window_; }
  bool windowEmpty() const { return window_.empty(); }

  Int read(const Int& j) const;
  FinArray store(const Int& j, const Int& v) const;

  /// Extensional equality (canonical forms are compared structurally).
  bool operator==(const FinArray& o) const {
    return leftTail_ == o.leftTail_ && rightTail_ == o.rightTail_ &&
           lo_ == o.lo_ && window_ == o.window_;
  }
  bool operator!=(const FinArray& o) const { return !(*this == o); }

  /// Largest value the array takes anywhere.
  Int maxValue() const;

 private:
  void canonicalize();

  Int leftTail_;
  Int rightTail_;
  Int lo_;
  std::vector<Int> window_;
};

/// The fixed diff interpretation: 0 when s and t are equal; otherwise the
/// greatest negative index of difference when one exists, else the least
/// nonnegative one. Computed from tails and windows, no unbounded scan.
Int diffIndex(const FinArray& s, const FinArray& t);

}  // namespace apf

#endif

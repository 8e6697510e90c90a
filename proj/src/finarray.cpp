#include "apf/finarray.hpp"

#include <algorithm>
#include <stdexcept>

namespace apf {

FinArray FinArray::constant(Int v) {
  FinArray a;
  a.leftTail_ = v;
  a.rightTail_ = std::move(v);
  return a;
}

FinArray FinArray::make(Int leftTail, Int lo, std::vector<Int> window,
                        Int rightTail) {
  if (window.empty() && leftTail != rightTail)
    throw std::invalid_argument(
        "empty window requires equal tails; a step needs one window cell");
  FinArray a;
  a.leftTail_ = std::move(leftTail);
  a.rightTail_ = std::move(rightTail);
  a.lo_ = std::move(lo);
  a.window_ = std::move(window);
  a.canonicalize();
  return a;
}

void FinArray::canonicalize() {
  size_t b = 0, e = window_.size();
  while (b < e && window_[b] == leftTail_) ++b;
  Int firstKept = lo_ + Int(b);
  while (e > b && window_[e - 1] == rightTail_) --e;
  if (b == e) {
    window_.clear();
    if (leftTail_ == rightTail_) {
      lo_ = 0;
      return;
    }
    // pure step: keep the first right-tail cell at the split position
    lo_ = firstKept;
    window_.push_back(rightTail_);
    return;
  }
  window_ = std::vector<Int>(window_.begin() + b, window_.begin() + e);
  lo_ = firstKept;
}

Int FinArray::read(const Int& j) const {
  if (window_.empty()) return leftTail_;  // constant array
  if (j < lo_) return leftTail_;
  Int off = j - lo_;
  if (off >= Int(window_.size())) return rightTail_;
  return window_[static_cast<size_t>(off)];
}

FinArray FinArray::store(const Int& j, const Int& v) const {
  if (read(j) == v) return *this;
  FinArray r = *this;
  if (r.window_.empty()) {
    r.lo_ = j;
    r.window_.push_back(v);
  } else if (j < r.lo_) {
    Int gap = r.lo_ - j;
    std::vector<Int> w;
    w.reserve(static_cast<size_t>(gap) + r.window_.size());
    w.push_back(v);
    for (Int g = 1; g < gap; ++g) w.push_back(r.leftTail_);
    w.insert(w.end(), r.window_.begin(), r.window_.end());
    r.window_ = std::move(w);
    r.lo_ = j;
  } else if (j > hi()) {
    Int gap = j - hi();
    for (Int g = 1; g < gap; ++g) r.window_.push_back(r.rightTail_);
    r.window_.push_back(v);
  } else {
    r.window_[static_cast<size_t>(j - r.lo_)] = v;
  }
  r.canonicalize();
  return r;
}

Int FinArray::maxValue() const {
  Int m = std::max(leftTail_, rightTail_);
  for (auto& v : window_) m = std::max(m, v);
  return m;
}

Int diffIndex(const FinArray& s, const FinArray& t) {
  if (s == t) return 0;
  // negative case: below min(lo_s, lo_t) - 1 both arrays read their left
  // tails, so all differences at negative indices lie in [low, -1]
  Int low = std::min(s.windowEmpty() ? Int(0) : s.lo(),
                     t.windowEmpty() ? Int(0) : t.lo()) -
            1;
  if (low > -1) low = -1;
  for (Int j = -1; j >= low; --j)
    if (s.read(j) != t.read(j)) return j;
  if (s.leftTail() != t.leftTail())
    throw std::logic_error("diffIndex: differing left tails must show by low");
  // nonnegative case: beyond max(hi_s, hi_t) + 1 both read right tails
  Int high = std::max(s.windowEmpty() ? Int(0) : s.hi(),
                      t.windowEmpty() ? Int(0) : t.hi()) +
             1;
  if (high < 0) high = 0;
  for (Int j = 0; j <= high; ++j)
    if (s.read(j) != t.read(j)) return j;
  throw std::logic_error("diffIndex: unequal arrays with no difference found");
}

}  // namespace apf

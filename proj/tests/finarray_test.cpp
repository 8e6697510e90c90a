#include <doctest.h>

#include <random>

#include "apf/finarray.hpp"
#include "apf/model.hpp"

using namespace apf;

namespace {

// independent oracle: brute-force diff scan over a covering interval
Int diffBruteForce(const FinArray& s, const FinArray& t) {
  Int lo = -1, hi = 0;
  for (auto* arr : {&s, &t}) {
    if (!arr->windowEmpty()) {
      lo = std::min(lo, Int(arr->lo() - 1));
      hi = std::max(hi, Int(arr->hi() + 1));
    }
  }
  Int best = 0;
  bool haveNeg = false;
  for (Int j = -1; j >= lo; --j)
    if (s.read(j) != t.read(j)) {
      best = j;
      haveNeg = true;
      break;  // scanning downward, the first hit is the max
    }
  if (haveNeg) return best;
  for (Int j = 0; j <= hi; ++j)
    if (s.read(j) != t.read(j)) return j;
  return 0;  // equal as functions
}

FinArray randArray(std::mt19937_64& rng) {
  auto ri = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  Int left(ri(-4, 4)), right(ri(-4, 4));
  int len = ri(0, 6);
  if (len == 0) right = left;
  std::vector<Int> w;
  for (int j = 0; j < len; ++j) w.emplace_back(ri(-4, 4));
  return FinArray::make(left, Int(ri(-5, 5)), std::move(w), right);
}

}  // namespace

TEST_CASE("reads follow the three-case semantics") {
  Model m4 = mkPaperModel(4);
  CHECK(m4.arrays.at("a").read(3) == 2);   // ceil(3/2)
  CHECK(m4.arrays.at("b").read(-7) == 1);  // left tail
  CHECK(FinArray::constant(0).read(123456) == 0);
}

TEST_CASE("canonical form trims tail-equal edges") {
  // window entries equal to tails vanish
  auto arr = FinArray::make(0, 1, {0, 0, 5, 7, 7}, 7);
  CHECK(arr.lo() == 3);
  CHECK(arr.window() == std::vector<Int>{5});
  CHECK(arr.rightTail() == 7);

  // a pure step keeps exactly one window cell holding the right tail
  auto step = FinArray::make(0, 1, {1, 1}, 1);
  CHECK_FALSE(step.windowEmpty());
  CHECK(step.window() == std::vector<Int>{1});
  CHECK(step.read(0) == 0);
  CHECK(step.read(1) == 1);

  // constant array has an empty window
  auto c = FinArray::make(3, 5, {3, 3}, 3);
  CHECK(c.windowEmpty());

  // empty window with unequal tails is rejected
  CHECK_THROWS(FinArray::make(0, 0, {}, 1));
}

TEST_CASE("canonical equality is extensional equality") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 500; ++t) {
    FinArray x = randArray(rng), y = randArray(rng);
    Int lo = std::min(Int(x.windowEmpty() ? 0 : x.lo()),
                      Int(y.windowEmpty() ? 0 : y.lo())) -
             2;
    Int hi = std::max(Int(x.windowEmpty() ? 0 : x.hi()),
                      Int(y.windowEmpty() ? 0 : y.hi())) +
             2;
    bool pointwise = x.leftTail() == y.leftTail() &&
                     x.rightTail() == y.rightTail();
    for (Int j = lo; pointwise && j <= hi; ++j)
      pointwise = x.read(j) == y.read(j);
    CHECK((x == y) == pointwise);
  }
}

TEST_CASE("store semantics") {
  std::mt19937_64 rng(102);
  for (int t = 0; t < 300; ++t) {
    FinArray s = randArray(rng);
    Int j(std::uniform_int_distribution<int>(-8, 8)(rng));
    Int v(std::uniform_int_distribution<int>(-5, 5)(rng));
    FinArray w = s.store(j, v);
    CHECK(w.read(j) == v);  // read-over-write
    for (Int p = j - 3; p <= j + 3; ++p)
      if (p != j) CHECK(w.read(p) == s.read(p));
  }

  // idempotent write on a constant array
  auto c = FinArray::constant(0);
  CHECK(c.store(5, 0) == c);

  // store extends the window and leaves other reads unchanged
  Model m4 = mkPaperModel(4);
  FinArray ext = m4.arrays.at("a").store(-2, 9);
  CHECK(ext.read(-2) == 9);
  for (Int j = -10; j <= 10; ++j)
    if (j != -2) CHECK(ext.read(j) == m4.arrays.at("a").read(j));
}

TEST_CASE("diffIndex pinned examples") {
  CHECK(diffIndex(FinArray::constant(0), FinArray::constant(0)) == 0);

  auto s = FinArray::constant(0);
  CHECK(diffIndex(s, s.store(5, 1)) == 5);

  // differences at exactly -3 and 2: the negative case wins
  auto t = s.store(-3, 1).store(2, 1);
  CHECK(diffIndex(s, t) == -3);

  // left tails differ: maximal negative difference
  auto u = FinArray::make(1, 0, {5}, 0);
  // s(j) = 0 everywhere, u(j) = 1 for j < 0 -> they differ at every j < 0
  CHECK(diffIndex(s, u) == -1);
}

TEST_CASE("diffIndex equals the brute-force oracle and satisfies axiom (*)") {
  std::mt19937_64 rng(103);
  int distinct = 0;
  for (int t = 0; t < 1500 || distinct < 1000; ++t) {
    REQUIRE(t < 100000);
    FinArray s = randArray(rng), u = randArray(rng);
    Int d = diffIndex(s, u);
    CHECK(d == diffBruteForce(s, u));
    if (s == u) {
      CHECK(d == 0);
    } else {
      ++distinct;
      CHECK(s.read(d) != u.read(d));  // axiom (*)
    }
  }
}

TEST_CASE("maxValue") {
  auto arr = FinArray::make(0, 1, {4, -2}, 1);
  CHECK(arr.maxValue() == 4);
  CHECK(FinArray::constant(-3).maxValue() == -3);
}

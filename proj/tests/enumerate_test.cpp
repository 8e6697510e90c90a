#include <doctest.h>

#include <unordered_set>

#include "apf/enumerate.hpp"
#include "apf/fragment.hpp"

using namespace apf;

namespace {

int nodeCount(const TermPtr& t) {
  int n = 1;
  for (auto& a : t->args) n += nodeCount(a);
  return n;
}

int nodeCount(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Atom) return nodeCount(f->atom);
  int n = 1;
  for (auto& k : f->kids) n += nodeCount(k);
  return n;
}

bool streamContains(const std::vector<FormulaPtr>& fs, const std::string& s) {
  for (auto& f : fs)
    if (printFormula(f) == s) return true;
  return false;
}

}  // namespace

TEST_CASE("canonicalization") {
  auto lit = [](int v) { return mkIntLit(v); };
  // constant folding
  auto sum = mkAtom(buildTerm(sym::lt(), {buildTerm(sym::add(), {lit(2), lit(3)}),
                                          lit(9)}));
  CHECK(printFormula(canonicalize(sum)) == "true");

  // commutative argument ordering
  auto ca = mkConst(sym::arrayConst("a"));
  auto read = buildTerm(sym::select(), {ca, lit(0)});
  auto x = mkAtom(buildTerm(sym::eq(), {buildTerm(sym::add(), {read, lit(1)}),
                                        lit(0)}));
  auto y = mkAtom(buildTerm(sym::eq(), {buildTerm(sym::add(), {lit(1), read}),
                                        lit(0)}));
  CHECK(printFormula(canonicalize(x)) == printFormula(canonicalize(y)));

  // diff(t, t) folds to 0
  auto d = mkAtom(buildTerm(sym::le(), {buildTerm(sym::diff(), {ca, ca}), lit(0)}));
  std::string dCanon = printFormula(canonicalize(d));
  CHECK((dCanon == "(<= 0 0)" || dCanon == "true"));

  // and/or flattening and deduplication
  auto atom = mkAtom(buildTerm(sym::le(), {read, lit(0)}));
  auto nested = mkAnd(atom, mkAnd(atom, atom));
  CHECK(printFormula(canonicalize(nested)) == printFormula(canonicalize(atom)));

  // dead binder elimination
  auto dead = mkForall({"j"}, atom);
  CHECK(printFormula(canonicalize(dead)) == printFormula(canonicalize(atom)));
}

TEST_CASE("size bound and signature") {
  EnumOptions opt;
  opt.sizeBound = 5;
  auto fs = enumerateCandidates(opt);
  CHECK(!fs.empty());
  for (auto& f : fs) {
    CAPTURE(printFormula(f));
    CHECK(nodeCount(f) <= 5);
    CHECK(isInFragment(f).member);
    for (auto& s : freeSymbols(f)) CHECK((s == "a" || s == "b"));
  }
  // diff(a, b) appears as a ground term inside size-5 atoms
  CHECK(streamContains(fs, "(<= (diff a b) 0)"));
}

TEST_CASE("small bounds") {
  EnumOptions opt;
  opt.sizeBound = 1;
  auto fs = enumerateCandidates(opt);
  // only the Boolean constants fit in one node
  CHECK(fs.size() == 2);
  CHECK(streamContains(fs, "true"));
  CHECK(streamContains(fs, "false"));
  CHECK_THROWS(enumerateCandidates(EnumOptions{0, true}));
}

TEST_CASE("stream is duplicate-free under canonical printing") {
  EnumOptions opt;
  opt.sizeBound = 6;
  auto fs = enumerateCandidates(opt);
  std::unordered_set<std::string> seen;
  for (auto& f : fs) CHECK(seen.insert(printFormula(canonicalize(f))).second);
}

TEST_CASE("membership of expected candidates at size 7") {
  EnumOptions opt;
  opt.sizeBound = 7;
  auto fs = enumerateCandidates(opt);
  CHECK(streamContains(fs, "(forall ((j Int)) (<= (select a j) 1))"));
  CHECK(streamContains(fs, "(not (forall ((j Int)) (<= (select a j) 1)))"));
  CHECK(streamContains(fs, "(< (select a 0) (select b 1))"));
  // monotone growth of the candidate set
  EnumOptions small;
  small.sizeBound = 5;
  auto fewer = enumerateCandidates(small);
  CHECK(fewer.size() < fs.size());
  std::unordered_set<std::string> big;
  for (auto& f : fs) big.insert(printFormula(f));
  for (auto& f : fewer) CHECK(big.count(printFormula(f)));
}

TEST_CASE("excluding diff removes diff candidates") {
  EnumOptions with;
  with.sizeBound = 5;
  EnumOptions without;
  without.sizeBound = 5;
  without.includeDiff = false;
  auto a = enumerateCandidates(with);
  auto b = enumerateCandidates(without);
  CHECK(b.size() < a.size());
  for (auto& f : b)
    CHECK(printFormula(f).find("diff") == std::string::npos);
}

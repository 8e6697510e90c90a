#include <doctest.h>

#include "apf/ast.hpp"

using namespace apf;

namespace {

TermPtr a() { return mkConst(sym::arrayConst("a")); }
TermPtr b() { return mkConst(sym::arrayConst("b")); }
TermPtr k() { return mkConst(sym::intConst("k")); }
TermPtr l() { return mkConst(sym::intConst("l")); }

FormulaPtr exampleA() {
  return mkForall({"i"}, mkAtom(buildTerm(sym::lt(),
                                          {buildTerm(sym::select(), {a(), mkVar("i")}),
                                           buildTerm(sym::select(), {b(), k()})})));
}

FormulaPtr exampleB() {
  return mkForall({"j"}, mkNot(mkAtom(buildTerm(
                             sym::lt(), {buildTerm(sym::select(), {a(), l()}),
                                         buildTerm(sym::select(), {b(), mkVar("j")})}))));
}

}  // namespace

TEST_CASE("buildTerm rank checking") {
  auto sel = buildTerm(sym::select(), {a(), mkIntLit(3)});
  CHECK(sel->sort == Sort::Int);

  auto st = buildTerm(sym::store(), {a(), mkIntLit(3), mkIntLit(5)});
  CHECK(st->sort == Sort::Array);

  // swapped arguments: error at position 0
  try {
    buildTerm(sym::select(), {mkIntLit(3), a()});
    FAIL("expected SortError");
  } catch (const SortError& e) {
    CHECK(e.position == 0);
  }

  CHECK_THROWS_AS(buildTerm(sym::select(), {a()}), SortError);
  CHECK_THROWS_AS(buildTerm(sym::add(), {a(), mkIntLit(1)}), SortError);
}

TEST_CASE("freeSymbols of the example formulas") {
  CHECK(freeSymbols(exampleA()) == std::set<std::string>{"a", "b", "k"});
  CHECK(freeSymbols(exampleB()) == std::set<std::string>{"a", "b", "l"});
  CHECK(freeSymbols(mkIntLit(0)).empty());
}

TEST_CASE("substitute instantiates quantified bodies") {
  auto bodyA = exampleA()->kids[0];
  auto inst = substitute(bodyA, mkVar("i"), l());
  CHECK(printFormula(inst) == "(< (select a l) (select b k))");

  auto bodyB = exampleB()->kids[0];
  auto instB = substitute(bodyB, mkVar("j"), k());
  CHECK(printFormula(instB) == "(not (< (select a l) (select b k)))");

  // no-op when v does not occur
  auto same = substitute(bodyA, mkVar("z"), mkIntLit(0));
  CHECK(printFormula(same) == printFormula(bodyA));

  // shadowing is refused
  CHECK_THROWS(substitute(exampleA(), mkVar("i"), mkIntLit(0)));
  // non-ground replacement is refused
  CHECK_THROWS(substitute(bodyA, mkVar("i"), mkVar("j")));
  // sort mismatch is refused
  CHECK_THROWS_AS(substitute(bodyA, mkVar("i"), a()), SortError);
}

TEST_CASE("freeSymbols after substitution shrink correctly") {
  auto bodyA = exampleA()->kids[0];
  auto inst = substitute(bodyA, mkVar("i"), l());
  auto fs = freeSymbols(inst);
  CHECK(fs == std::set<std::string>{"a", "b", "k", "l"});
}

TEST_CASE("wellFormed validator") {
  CHECK(wellFormed(exampleA()));
  CHECK(wellFormed(exampleB()));

  // unbound variable
  std::string why;
  auto loose = mkAtom(buildTerm(sym::le(), {mkVar("j"), mkIntLit(0)}));
  CHECK_FALSE(wellFormed(loose, &why));
  CHECK(why.find("unbound") != std::string::npos);

  // shadowed binder
  auto shadow = mkForall({"j"}, mkForall({"j"}, loose));
  CHECK_FALSE(wellFormed(shadow, &why));
}

TEST_CASE("printing round-trips negative literals") {
  CHECK(printTerm(mkIntLit(-2)) == "(- 2)");
  CHECK(printTerm(mkIntLit(7)) == "7");
  CHECK(printFormula(exampleA()) ==
        "(forall ((i Int)) (< (select a i) (select b k)))");
}

TEST_CASE("partition of the example problem") {
  auto p = makePartition(exampleA(), exampleB());
  CHECK(p.shared == std::set<std::string>{"a", "b"});
  CHECK(p.aLocal == std::set<std::string>{"k"});
  CHECK(p.bLocal == std::set<std::string>{"l"});
}

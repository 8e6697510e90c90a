#include <doctest.h>

#include <fstream>
#include <sstream>

#include "apf/fragment.hpp"
#include "apf/smtlib.hpp"

using namespace apf;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("Example 1 script parses to the paper formulas") {
  Script s = parseScript(slurp("example1.smt2"));
  REQUIRE(s.assertions.size() == 2);
  CHECK(s.declarations.size() == 4);
  CHECK(printFormula(s.assertions[0]) ==
        "(forall ((i Int)) (< (select a i) (select b k)))");
  CHECK(printFormula(s.assertions[1]) ==
        "(forall ((j Int)) (not (< (select a l) (select b j))))");
  CHECK(wellFormed(s.assertions[0]));
}

TEST_CASE("empty script") {
  Script s = parseScript("");
  CHECK(s.declarations.empty());
  CHECK(s.assertions.empty());
  // comments and whitespace only
  CHECK(parseScript("; nothing here\n\n").assertions.empty());
}

TEST_CASE("exists becomes not-forall-not") {
  Script s = parseScript(slurp("i1.smt2"));
  REQUIRE(s.assertions.size() == 1);
  CHECK(printFormula(s.assertions[0]) ==
        "(not (forall ((j Int)) (not (forall ((i Int)) "
        "(< (select a i) (select b j))))))");
  auto v = isInFragment(s.assertions[0]);
  CHECK_FALSE(v.member);
  CHECK(*v.reason == RejectReason::QuantifierAlternation);
}

TEST_CASE("arity error carries a position") {
  try {
    parseScript(slurp("bad_arity.smt2"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("select") != std::string::npos);
  }
}

TEST_CASE("lexical and symbol errors with line/column") {
  try {
    parseScript("(declare-const x Int)\n(assert (<= y 0))\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("unknown symbol 'y'") != std::string::npos);
  }

  // sort mismatch
  CHECK_THROWS_AS(
      parseScript("(declare-const a (Array Int Int))\n(assert (<= a 0))\n"),
      ParseError);

  // unsupported commands are rejected, not ignored
  CHECK_THROWS_AS(parseScript("(push 1)"), ParseError);
  CHECK_THROWS_AS(parseScript("(define-fun f () Int 0)"), ParseError);
  CHECK_THROWS_AS(
      parseScript("(assert (let ((x 1)) (<= x 1)))"), ParseError);

  // duplicate declarations and unknown sorts
  CHECK_THROWS_AS(
      parseScript("(declare-const x Int)(declare-const x Int)"), ParseError);
  CHECK_THROWS_AS(parseScript("(declare-const x Real)"), ParseError);
}

TEST_CASE("negative literals and n-ary arithmetic") {
  Script s = parseScript(
      "(declare-const x Int)\n"
      "(assert (<= (+ x 1 2) (- 5)))\n"
      "(assert (= (- x 1 1) (* 2 3)))\n");
  CHECK(printFormula(s.assertions[0]) == "(<= (+ (+ x 1) 2) (- 5))");
  CHECK(printFormula(s.assertions[1]) == "(= (- (- x 1) 1) (* 2 3))");
}

TEST_CASE("print-then-parse round trip") {
  for (const char* name : {"example1.smt2", "i1.smt2", "sorted.smt2",
                           "candidate_true.smt2"}) {
    Script s = parseScript(slurp(name));
    std::string text = printScript(s);
    Script back = parseScript(text);
    REQUIRE(back.assertions.size() == s.assertions.size());
    for (size_t i = 0; i < s.assertions.size(); ++i)
      CHECK(printFormula(back.assertions[i]) == printFormula(s.assertions[i]));
    CHECK(printScript(back) == text);
  }
}

TEST_CASE("diff is implicit concrete syntax") {
  Script s = parseScript(
      "(declare-const a (Array Int Int))\n"
      "(declare-const b (Array Int Int))\n"
      "(assert (= (select a (diff a b)) 0))\n");
  CHECK(printFormula(s.assertions[0]) == "(= (select a (diff a b)) 0)");
  // diff cannot be declared
  CHECK_THROWS_AS(parseScript("(declare-const diff Int)"), ParseError);
}

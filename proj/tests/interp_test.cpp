#include <doctest.h>

#include "apf/eval.hpp"
#include "apf/interp.hpp"

using namespace apf;

namespace {

TermPtr a() { return mkConst(sym::arrayConst("a")); }
TermPtr b() { return mkConst(sym::arrayConst("b")); }
TermPtr sel(const TermPtr& arr, const TermPtr& i) {
  return buildTerm(sym::select(), {arr, i});
}

}  // namespace

TEST_CASE("example problem shape") {
  auto p = exampleProblem();
  CHECK(printFormula(p.a) == "(forall ((i Int)) (< (select a i) (select b k)))");
  CHECK(printFormula(p.b) ==
        "(forall ((j Int)) (not (< (select a l) (select b j))))");
  CHECK(p.partition.shared == std::set<std::string>{"a", "b"});
  CHECK(p.partition.aLocal == std::set<std::string>{"k"});
  CHECK(p.partition.bLocal == std::set<std::string>{"l"});
}

TEST_CASE("unsat witness is the exact clash pair") {
  auto [pos, neg] = verifyExampleUnsat();
  CHECK(printFormula(pos) == "(< (select a l) (select b k))");
  CHECK(printFormula(neg) == "(not (< (select a l) (select b k)))");
}

TEST_CASE("checkCandidate pinned examples") {
  auto p = exampleProblem();

  auto vTrue = checkCandidate(p, mkTrue(), 64);
  CHECK(vTrue.outcome == CandidateOutcome::FailsConditionII);
  CHECK(*vTrue.witness == 1);

  auto vFalse = checkCandidate(p, mkFalse(), 64);
  CHECK(vFalse.outcome == CandidateOutcome::FailsConditionI);
  CHECK(*vFalse.witness == 0);

  // forall i, j. a[i] <= b[j] holds in M_1, which satisfies B
  auto c = mkForall({"i", "j"},
                    mkAtom(buildTerm(sym::le(), {sel(a(), mkVar("i")),
                                                 sel(b(), mkVar("j"))})));
  auto vc = checkCandidate(p, c, 64);
  CHECK(vc.outcome == CandidateOutcome::FailsConditionII);
  CHECK(*vc.witness == 1);

  // non-shared symbol k
  auto shared = mkAtom(buildTerm(sym::le(), {mkConst(sym::intConst("k")),
                                             mkIntLit(0)}));
  CHECK(checkCandidate(p, shared, 8).outcome == CandidateOutcome::NotShared);

  // alternation is rejected before any sweep
  auto body = mkAtom(buildTerm(sym::lt(), {sel(a(), mkVar("i")),
                                           sel(b(), mkVar("j"))}));
  auto i1 = mkNot(mkForall({"j"}, mkNot(mkForall({"i"}, body))));
  auto vi1 = checkCandidate(p, i1, 8);
  CHECK(vi1.outcome == CandidateOutcome::NotInFragment);
  REQUIRE(vi1.fragmentVerdict.has_value());
  CHECK(*vi1.fragmentVerdict->reason == RejectReason::QuantifierAlternation);
}

TEST_CASE("witness parity and re-evaluation") {
  auto p = exampleProblem();
  for (const FormulaPtr& c :
       {mkTrue(), mkFalse(),
        mkForall({"j"}, mkAtom(buildTerm(sym::le(), {sel(a(), mkVar("j")),
                                                     mkIntLit(0)})))}) {
    auto v = checkCandidate(p, c, 64);
    REQUIRE(v.witness.has_value());
    long long w = *v.witness;
    bool val = evalFormula(mkPaperModel(w), c);
    if (v.outcome == CandidateOutcome::FailsConditionI) {
      CHECK(w % 2 == 0);
      CHECK_FALSE(val);
    } else {
      REQUIRE(v.outcome == CandidateOutcome::FailsConditionII);
      CHECK(w % 2 == 1);
      CHECK(val);
    }
  }
}

TEST_CASE("verdict serialization") {
  auto p = exampleProblem();
  auto v = checkCandidate(p, mkTrue(), 8);
  auto doc = writeVerdict(v);
  CHECK(doc == "{\"candidate\":\"true\",\"outcome\":\"fails-condition-ii\","
               "\"witness\":1,\"parity\":\"odd\"}");
}

TEST_CASE("alternating interpolants") {
  // I1 on M_2 is true (witness j = 2), on M_3 false
  CHECK(evalExistsForall(mkPaperModel(2)));
  CHECK_FALSE(evalExistsForall(mkPaperModel(3)));
  CHECK(evalForallExists(mkPaperModel(2)));
  CHECK_FALSE(evalForallExists(mkPaperModel(3)));

  auto rep = checkAlternatingInterpolants(100);
  CHECK(rep.parityOk);
  CHECK_FALSE(rep.i1Verdict.member);
  CHECK(*rep.i1Verdict.reason == RejectReason::QuantifierAlternation);
  CHECK_FALSE(rep.i2Verdict.member);
  CHECK(*rep.i2Verdict.reason == RejectReason::QuantifierAlternation);
}

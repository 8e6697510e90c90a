#include "apf/interp.hpp"

#include <functional>

#include <nlohmann/json.hpp>

#include "apf/eval.hpp"

namespace apf {

const char* candidateOutcomeName(CandidateOutcome o) {
  switch (o) {
    case CandidateOutcome::NotShared: return "not-shared";
    case CandidateOutcome::NotInFragment: return "not-in-fragment";
    case CandidateOutcome::FailsConditionI: return "fails-condition-i";
    case CandidateOutcome::FailsConditionII: return "fails-condition-ii";
    case CandidateOutcome::SurvivesHorizon: return "survives-horizon";
  }
  return "?";
}

namespace {

TermPtr constA() { return mkConst(sym::arrayConst("a")); }
TermPtr constB() { return mkConst(sym::arrayConst("b")); }

TermPtr read(const TermPtr& arr, const TermPtr& idx) {
  return buildTerm(sym::select(), {arr, idx});
}

}  // namespace

InterpolationProblem exampleProblem() {
  TermPtr k = mkConst(sym::intConst("k"));
  TermPtr l = mkConst(sym::intConst("l"));
  TermPtr i = mkVar("i");
  TermPtr j = mkVar("j");
  FormulaPtr a = mkForall(
      {"i"}, mkAtom(buildTerm(sym::lt(), {read(constA(), i), read(constB(), k)})));
  FormulaPtr b = mkForall(
      {"j"},
      mkNot(mkAtom(buildTerm(sym::lt(), {read(constA(), l), read(constB(), j)}))));
  return {a, b, makePartition(a, b)};
}

std::pair<FormulaPtr, FormulaPtr> verifyExampleUnsat() {
  InterpolationProblem p = exampleProblem();

  // ground index terms appearing as select indices on each side
  auto groundIndices = [](const FormulaPtr& f) {
    std::vector<TermPtr> out;
    std::function<bool(const TermPtr&)> hasVar = [&](const TermPtr& t) {
      if (t->kind == Term::Kind::Var) return true;
      for (auto& a : t->args)
        if (hasVar(a)) return true;
      return false;
    };
    std::function<void(const TermPtr&)> scanT = [&](const TermPtr& t) {
      if (t->kind == Term::Kind::Apply) {
        if (t->symbol == sym::select() && !hasVar(t->args[1]))
          out.push_back(t->args[1]);
        for (auto& a : t->args) scanT(a);
      }
    };
    std::function<void(const FormulaPtr&)> scanF = [&](const FormulaPtr& g) {
      if (g->kind == Formula::Kind::Atom)
        scanT(g->atom);
      else
        for (auto& kf : g->kids) scanF(kf);
    };
    scanF(f);
    return out;
  };

  auto instantiations = [](const FormulaPtr& quantified,
                           const std::vector<TermPtr>& terms) {
    std::vector<FormulaPtr> out;
    for (auto& t : terms) {
      FormulaPtr g = quantified->kids[0];
      for (auto& v : quantified->boundVars)
        g = substitute(g, mkVar(v), t);
      out.push_back(g);
    }
    return out;
  };

  auto fromA = instantiations(p.a, groundIndices(p.b));
  auto fromB = instantiations(p.b, groundIndices(p.a));

  auto literalKey = [](const FormulaPtr& f, bool& positive) {
    FormulaPtr g = f;
    positive = true;
    while (g->kind == Formula::Kind::Not) {
      positive = !positive;
      g = g->kids[0];
    }
    return printFormula(g);
  };

  for (auto& x : fromA) {
    bool px;
    std::string kx = literalKey(x, px);
    for (auto& y : fromB) {
      bool py;
      std::string ky = literalKey(y, py);
      if (kx == ky && px != py) return px ? std::make_pair(x, y)
                                         : std::make_pair(y, x);
    }
  }
  throw std::logic_error("no complementary instantiation pair found");
}

CandidateVerdict checkCandidate(const InterpolationProblem& p,
                                const FormulaPtr& c, long long horizon,
                                const ModelFamily& family) {
  CandidateVerdict v;
  v.candidate = c;
  auto frees = freeSymbols(c);
  for (auto& s : frees) {
    if (!p.partition.shared.count(s)) {
      v.outcome = CandidateOutcome::NotShared;
      return v;
    }
  }
  auto fv = isInFragment(c);
  if (!fv.member) {
    v.outcome = CandidateOutcome::NotInFragment;
    v.fragmentVerdict = fv;
    return v;
  }
  for (long long i = 0; i <= horizon; ++i) {
    bool val = evalFormula(family.at(i), c);
    if (i % 2 == 0 && !val) {
      v.outcome = CandidateOutcome::FailsConditionI;
      v.witness = i;
      return v;
    }
    if (i % 2 == 1 && val) {
      v.outcome = CandidateOutcome::FailsConditionII;
      v.witness = i;
      return v;
    }
  }
  v.outcome = CandidateOutcome::SurvivesHorizon;
  return v;
}

CandidateVerdict checkCandidate(const InterpolationProblem& p,
                                const FormulaPtr& c, long long horizon) {
  ModelFamily family(horizon);
  return checkCandidate(p, c, horizon, family);
}

std::string writeVerdict(const CandidateVerdict& v) {
  nlohmann::ordered_json doc{{"candidate", printFormula(v.candidate)},
                             {"outcome", candidateOutcomeName(v.outcome)}};
  if (v.witness) {
    doc["witness"] = *v.witness;
    doc["parity"] = (*v.witness % 2 == 0) ? "even" : "odd";
  }
  if (v.fragmentVerdict) {
    doc["reason"] = rejectReasonName(*v.fragmentVerdict->reason);
    doc["location"] = v.fragmentVerdict->location;
  }
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Alternating interpolants.

// shared instantiation points: both windows plus +-1 neighbours
static std::vector<Int> alternatingPoints(const Model& m) {
  std::set<Int> pts;
  for (auto& [name, arr] : m.arrays) {
    if (arr.windowEmpty()) continue;
    for (Int j = arr.lo(); j <= arr.hi(); ++j) pts.insert(j);
  }
  if (pts.empty()) pts.insert(0);
  std::set<Int> s;
  for (auto& p : pts) {
    s.insert(p - 1);
    s.insert(p);
    s.insert(p + 1);
  }
  return {s.begin(), s.end()};
}

static bool bodyHolds(const Model& m, const Int& i, const Int& j) {
  return m.arrays.at("a").read(i) < m.arrays.at("b").read(j);
}

bool evalExistsForall(const Model& m) {
  auto pts = alternatingPoints(m);
  for (auto& j : pts) {
    bool all = true;
    for (auto& i : pts)
      if (!bodyHolds(m, i, j)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

bool evalForallExists(const Model& m) {
  auto pts = alternatingPoints(m);
  for (auto& i : pts) {
    bool some = false;
    for (auto& j : pts)
      if (bodyHolds(m, i, j)) {
        some = true;
        break;
      }
    if (!some) return false;
  }
  return true;
}

AlternatingReport checkAlternatingInterpolants(long long horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  AlternatingReport rep;
  rep.horizon = horizon;
  rep.parityOk = true;
  ModelFamily family(horizon);
  for (long long i = 0; i <= horizon; ++i) {
    bool v1 = evalExistsForall(family.at(i));
    bool v2 = evalForallExists(family.at(i));
    bool expect = (i % 2 == 0);
    if (v1 != expect || v2 != expect) {
      rep.parityOk = false;
      rep.firstViolation = i;
      break;
    }
  }

  TermPtr i = mkVar("i");
  TermPtr j = mkVar("j");
  FormulaPtr body =
      mkAtom(buildTerm(sym::lt(), {read(constA(), i), read(constB(), j)}));
  // exists j. forall i. body  ==  not forall j. not forall i. body
  rep.i1Encoded = mkNot(mkForall({"j"}, mkNot(mkForall({"i"}, body))));
  // forall i. exists j. body  ==  forall i. not forall j. not body
  rep.i2Encoded = mkForall({"i"}, mkNot(mkForall({"j"}, mkNot(body))));
  rep.i1Verdict = isInFragment(rep.i1Encoded);
  rep.i2Verdict = isInFragment(rep.i2Encoded);
  return rep;
}

}  // namespace apf

#include "apf/stabilize.hpp"

#include <algorithm>
#include <functional>

#include <nlohmann/json.hpp>

#include "apf/eval.hpp"
#include "apf/fragment.hpp"

namespace apf {

const char* stabPropertyName(StabProperty p) {
  switch (p) {
    case StabProperty::P1Scalar: return "P1-scalar";
    case StabProperty::P2Array: return "P2-array";
    case StabProperty::FConstantValue: return "F-constant-value";
  }
  return "?";
}

namespace {

void requireShared(const std::set<std::string>& frees, const std::string& what) {
  for (auto& s : frees)
    if (s != "a" && s != "b")
      throw StabError("non-shared symbol '" + s + "' in " + what);
}

struct Rec {
  Int index;
  bool isArray;
  bool conditional;
};

struct StabCtx {
  const ModelFamily& family;
  long long horizon;

  const Model& at(const Int& i) const {
    if (i > horizon)
      throw StabError("computed index " + i.str() + " exceeds horizon " +
                      std::to_string(horizon));
    return family.at(static_cast<long long>(i));
  }
};

Int clampIndex(Int i) { return i < 0 ? Int(0) : i; }

Rec recTerm(const StabCtx& cx, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::IntLit:
      return {0, false, false};
    case Term::Kind::Const:
      return {0, t->sort == Sort::Array, false};
    case Term::Kind::Var:
      throw StabError("stabilization applies to ground terms only");
    case Term::Kind::Apply:
      break;
  }
  const FuncSymbol& s = t->symbol;
  if (s == sym::select()) {
    Rec ra = recTerm(cx, t->args[0]);
    Rec rs = recTerm(cx, t->args[1]);
    Int val = evalInt(cx.at(rs.index), t->args[1]);
    Int idx = std::max({ra.index, rs.index, val});
    return {clampIndex(idx), false, ra.conditional || rs.conditional};
  }
  if (s == sym::store()) {
    Rec ra = recTerm(cx, t->args[0]);
    Rec r0 = recTerm(cx, t->args[1]);
    Rec r1 = recTerm(cx, t->args[2]);
    Int v0 = evalInt(cx.at(r0.index), t->args[1]);
    Int idx = std::max({ra.index, r0.index, r1.index, Int(v0 + 1)});
    return {clampIndex(idx), true,
            ra.conditional || r0.conditional || r1.conditional};
  }
  if (s == sym::diff()) {
    Rec r1 = recTerm(cx, t->args[0]);
    Rec r2 = recTerm(cx, t->args[1]);
    Int i0 = std::max(r1.index, r2.index);
    bool cond = r1.conditional || r2.conditional;
    // first model at or past i0 where the two arrays differ fixes the
    // diff value for all later models; equality through the horizon is
    // only an empirical observation, hence conditional
    for (Int i = i0; i <= cx.horizon; ++i) {
      if (evalArray(cx.at(i), t->args[0]) != evalArray(cx.at(i), t->args[1]))
        return {i, false, cond};
    }
    return {i0, false, true};
  }
  // arithmetic and comparisons
  Rec acc{0, false, false};
  for (auto& a : t->args) {
    Rec r = recTerm(cx, a);
    acc.index = std::max(acc.index, r.index);
    acc.conditional |= r.conditional;
  }
  return acc;
}

bool valuesEqual(const Value& x, const Value& y) { return x == y; }

// P2(b): from i' on the suffix repeats the element at i'
bool suffixRepeats(const FinArray& a, const Int& iPrime, int probe) {
  if (a.read(iPrime) != a.rightTail()) return false;
  if (!a.windowEmpty() && a.hi() > iPrime) return false;
  for (int d = 1; d <= probe; ++d)
    if (a.read(iPrime + d) != a.read(iPrime)) return false;
  return true;
}

// P2(a): prefix up to iPrime agrees between the two interpretations
bool prefixAgrees(const FinArray& x, const FinArray& y, const Int& iPrime) {
  if (x.leftTail() != y.leftTail()) return false;
  Int from = std::min({x.windowEmpty() ? Int(0) : x.lo(),
                       y.windowEmpty() ? Int(0) : y.lo(), Int(0)});
  for (Int j = from; j <= iPrime; ++j)
    if (x.read(j) != y.read(j)) return false;
  return true;
}

bool checkTermProperty(const ModelFamily& family, const TermPtr& t,
                       StabProperty prop, long long from, long long to) {
  if (prop == StabProperty::P1Scalar) {
    Value ref = evalTerm(family.at(from), t);
    for (long long i = from + 1; i <= to; ++i)
      if (!valuesEqual(ref, evalTerm(family.at(i), t))) return false;
    return true;
  }
  for (long long i = from; i <= to; ++i) {
    FinArray cur = evalArray(family.at(i), t);
    if (!suffixRepeats(cur, Int(i), 3)) return false;
    if (i + 1 <= to &&
        !prefixAgrees(cur, evalArray(family.at(i + 1), t), Int(i)))
      return false;
  }
  return true;
}

bool checkFormulaConstant(const ModelFamily& family, const FormulaPtr& f,
                          long long from, long long to) {
  bool ref = evalFormula(family.at(from), f);
  for (long long i = from + 1; i <= to; ++i)
    if (evalFormula(family.at(i), f) != ref) return false;
  return true;
}

// maximal ground subterms of a quantified body
void collectGroundSubterms(const TermPtr& t, const std::set<std::string>& vars,
                           std::vector<TermPtr>& out) {
  bool ground = true;
  std::function<void(const TermPtr&)> scan = [&](const TermPtr& u) {
    if (u->kind == Term::Kind::Var && vars.count(u->var)) ground = false;
    for (auto& a : u->args) scan(a);
  };
  scan(t);
  if (ground) {
    out.push_back(t);
    return;
  }
  for (auto& a : t->args) collectGroundSubterms(a, vars, out);
}

void collectGroundSubterms(const FormulaPtr& f,
                           const std::set<std::string>& vars,
                           std::vector<TermPtr>& out) {
  if (f->kind == Formula::Kind::Atom)
    collectGroundSubterms(f->atom, vars, out);
  else
    for (auto& k : f->kids) collectGroundSubterms(k, vars, out);
}

// ground terms appearing as comparison sides in the index guard
void collectGuardGroundTerms(const FormulaPtr& g,
                             const std::set<std::string>& vars,
                             std::vector<TermPtr>& out) {
  switch (g->kind) {
    case Formula::Kind::Atom: {
      const TermPtr& t = g->atom;
      if (t->kind != Term::Kind::Apply) return;
      for (auto& side : t->args) {
        if (side->sort != Sort::Int) continue;
        if (side->kind == Term::Kind::Var && vars.count(side->var)) continue;
        out.push_back(side);
      }
      return;
    }
    case Formula::Kind::BoolConst:
      return;
    default:
      for (auto& k : g->kids) collectGuardGroundTerms(k, vars, out);
      return;
  }
}

struct FRec {
  Int index;
  bool conditional;
};

FRec recFormula(const StabCtx& cx, const FormulaPtr& f);

// the two-stage index construction for a single array property
FRec recProperty(const StabCtx& cx, const FormulaPtr& f) {
  std::set<std::string> vars(f->boundVars.begin(), f->boundVars.end());
  std::vector<TermPtr> ground;
  collectGroundSubterms(f->kids[0], vars, ground);
  Int i0 = 0;
  bool cond = false;
  for (auto& t : ground) {
    Rec r = recTerm(cx, t);
    i0 = std::max(i0, r.index);
    cond |= r.conditional;
  }
  const FormulaPtr& body = f->kids[0];
  FormulaPtr guard =
      body->kind == Formula::Kind::Implies ? body->kids[0] : mkTrue();
  std::vector<TermPtr> guardTerms;
  collectGuardGroundTerms(guard, vars, guardTerms);
  Int i1 = i0;
  for (auto& t : guardTerms)
    i1 = std::max(i1, Int(evalInt(cx.at(i0), t) + 1));
  if (i1 > cx.horizon)
    throw StabError("guard value index " + i1.str() + " exceeds horizon");
  for (Int i2 = i1; i2 <= cx.horizon; ++i2)
    if (!evalFormula(cx.at(i2), f)) return {i2, cond};  // false persists
  return {i1, true};  // true through the horizon, only observed
}

FRec recFormula(const StabCtx& cx, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      return {0, false};
    case Formula::Kind::Atom: {
      Rec r = recTerm(cx, f->atom);
      return {r.index, r.conditional};
    }
    case Formula::Kind::Forall:
      return recProperty(cx, f);
    default: {
      FRec acc{0, false};
      for (auto& k : f->kids) {
        FRec r = recFormula(cx, k);
        acc.index = std::max(acc.index, r.index);
        acc.conditional |= r.conditional;
      }
      return acc;
    }
  }
}

}  // namespace

StabilizationReport stabIndexTerm(const TermPtr& t, long long horizon) {
  requireShared(freeSymbols(t), "term " + printTerm(t));
  ModelFamily family(horizon);
  StabCtx cx{family, horizon};
  Rec r = recTerm(cx, t);
  StabilizationReport rep;
  rep.term = t;
  rep.index = static_cast<long long>(r.index);
  rep.property = r.isArray ? StabProperty::P2Array : StabProperty::P1Scalar;
  rep.verifiedHorizon = horizon;
  rep.conditional = r.conditional;
  if (!checkTermProperty(family, t, rep.property, rep.index, horizon))
    throw StabError("verification failure for " + printTerm(t));
  return rep;
}

StabilizationReport stabIndexProperty(const FormulaPtr& f, long long horizon) {
  requireShared(freeSymbols(f), "formula " + printFormula(f));
  auto v = isInFragment(f);
  if (!v.member)
    throw StabError("formula outside the fragment: " + printFormula(f));
  ModelFamily family(horizon);
  StabCtx cx{family, horizon};
  FRec r = recFormula(cx, f);
  StabilizationReport rep;
  rep.formula = f;
  rep.index = static_cast<long long>(r.index);
  rep.property = StabProperty::FConstantValue;
  rep.verifiedHorizon = horizon;
  rep.conditional = r.conditional;
  if (!checkFormulaConstant(family, f, rep.index, horizon))
    throw StabError("verification failure for " + printFormula(f));
  return rep;
}

bool verifyStabilization(const StabilizationReport& r, long long extra) {
  long long to = r.verifiedHorizon + extra;
  ModelFamily family(to);
  if (r.term)
    return checkTermProperty(family, r.term, r.property, r.index, to);
  if (r.formula)
    return checkFormulaConstant(family, r.formula, r.index, to);
  return false;
}

std::string writeReport(const StabilizationReport& r) {
  nlohmann::ordered_json doc{
      {"subject", r.term ? printTerm(r.term) : printFormula(r.formula)},
      {"index", r.index},
      {"property", stabPropertyName(r.property)},
      {"verifiedHorizon", r.verifiedHorizon},
      {"conditional", r.conditional}};
  return doc.dump();
}

}  // namespace apf

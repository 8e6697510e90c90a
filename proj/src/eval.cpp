#include "apf/eval.hpp"

#include <algorithm>

#include "apf/fragment.hpp"

namespace apf {

Value evalTerm(const Model& m, const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::IntLit:
      return t->value;
    case Term::Kind::Var: {
      auto it = env.find(t->var);
      if (it == env.end())
        throw EvalError("unbound variable '" + t->var + "' in evaluation");
      return it->second;
    }
    case Term::Kind::Const: {
      if (t->sort == Sort::Int) {
        auto it = m.ints.find(t->symbol.name);
        if (it == m.ints.end())
          throw EvalError("unassigned symbol '" + t->symbol.name + "'");
        return it->second;
      }
      auto it = m.arrays.find(t->symbol.name);
      if (it == m.arrays.end())
        throw EvalError("unassigned symbol '" + t->symbol.name + "'");
      return it->second;
    }
    case Term::Kind::Apply:
      break;
  }
  const FuncSymbol& s = t->symbol;
  if (s == sym::select())
    return evalArray(m, t->args[0], env).read(evalInt(m, t->args[1], env));
  if (s == sym::store())
    return evalArray(m, t->args[0], env)
        .store(evalInt(m, t->args[1], env), evalInt(m, t->args[2], env));
  if (s == sym::diff())
    return diffIndex(evalArray(m, t->args[0], env),
                     evalArray(m, t->args[1], env));
  Int x = evalInt(m, t->args[0], env);
  Int y = evalInt(m, t->args[1], env);
  if (s == sym::add()) return x + y;
  if (s == sym::sub()) return x - y;
  if (s == sym::mul()) return x * y;
  if (s == sym::lt()) return x < y;
  if (s == sym::le()) return x <= y;
  if (s == sym::eq()) return x == y;
  throw EvalError("uninterpreted application '" + s.name + "'");
}

Int evalInt(const Model& m, const TermPtr& t, const Env& env) {
  Value v = evalTerm(m, t, env);
  if (auto* p = std::get_if<Int>(&v)) return std::move(*p);
  throw EvalError("expected an integer value for " + printTerm(t));
}

bool evalBool(const Model& m, const TermPtr& t, const Env& env) {
  Value v = evalTerm(m, t, env);
  if (auto* p = std::get_if<bool>(&v)) return *p;
  throw EvalError("expected a Boolean value for " + printTerm(t));
}

FinArray evalArray(const Model& m, const TermPtr& t, const Env& env) {
  Value v = evalTerm(m, t, env);
  if (auto* p = std::get_if<FinArray>(&v)) return std::move(*p);
  throw EvalError("expected an array value for " + printTerm(t));
}

// ---------------------------------------------------------------------------
// Instantiation points.

static bool isBoundVar(const TermPtr& t, const std::set<std::string>& vars) {
  return t->kind == Term::Kind::Var && vars.count(t->var) > 0;
}

// window indices of arrays read at quantified positions
static void collectReadWindows(const Model& m, const TermPtr& t,
                               const std::set<std::string>& vars,
                               const Env& env, std::set<Int>& out) {
  if (t->kind != Term::Kind::Apply) return;
  if (t->symbol == sym::select() && isBoundVar(t->args[1], vars)) {
    FinArray a = evalArray(m, t->args[0], env);
    if (!a.windowEmpty())
      for (Int j = a.lo(); j <= a.hi(); ++j) out.insert(j);
    return;
  }
  for (auto& a : t->args) collectReadWindows(m, a, vars, env, out);
}

static void collectReadWindows(const Model& m, const FormulaPtr& f,
                               const std::set<std::string>& vars,
                               const Env& env, std::set<Int>& out) {
  if (f->kind == Formula::Kind::Atom)
    collectReadWindows(m, f->atom, vars, env, out);
  else
    for (auto& k : f->kids) collectReadWindows(m, k, vars, env, out);
}

// values of ground terms sitting in guard literals
static void collectGuardValues(const Model& m, const FormulaPtr& g,
                               const std::set<std::string>& vars,
                               const Env& env, std::set<Int>& out) {
  switch (g->kind) {
    case Formula::Kind::Atom: {
      const TermPtr& t = g->atom;
      if (t->kind != Term::Kind::Apply) return;
      for (auto& side : t->args)
        if (side->sort == Sort::Int && !isBoundVar(side, vars))
          out.insert(evalInt(m, side, env));
      return;
    }
    case Formula::Kind::BoolConst:
      return;
    default:
      for (auto& k : g->kids) collectGuardValues(m, k, vars, env, out);
      return;
  }
}

static void splitProperty(const FormulaPtr& property, FormulaPtr& guard,
                          FormulaPtr& value) {
  const FormulaPtr& body = property->kids[0];
  if (body->kind == Formula::Kind::Implies) {
    guard = body->kids[0];
    value = body->kids[1];
  } else {
    guard = mkTrue();
    value = body;
  }
}

static std::set<Int> basePoints(const Model& m, const FormulaPtr& property,
                                const Env& env) {
  std::set<std::string> vars(property->boundVars.begin(),
                             property->boundVars.end());
  FormulaPtr guard, value;
  splitProperty(property, guard, value);
  std::set<Int> pts;
  collectReadWindows(m, property->kids[0], vars, env, pts);
  collectGuardValues(m, guard, vars, env, pts);
  return pts;
}

std::set<Int> instantiationSet(const Model& m, const FormulaPtr& property,
                               const Env& env) {
  if (property->kind != Formula::Kind::Forall)
    throw EvalError("instantiationSet expects a quantified property");
  std::set<Int> pts = basePoints(m, property, env);
  if (pts.empty()) pts.insert(0);
  std::set<Int> s;
  for (auto& p : pts) {
    s.insert(p - 1);  // covers region boundaries and doubles as sentinels
    s.insert(p);
    s.insert(p + 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Formula evaluation.

namespace {
struct EvalCtx {
  const Model& m;
  const Int* bruteBound;  // nullptr: finite instantiation
};
}  // namespace

static bool evalRec(const EvalCtx& cx, const FormulaPtr& f, Env& env);

static bool evalTuples(const EvalCtx& cx, const FormulaPtr& body,
                       const std::vector<std::string>& vars, size_t k,
                       const std::vector<Int>& points, Env& env) {
  if (k == vars.size()) return evalRec(cx, body, env);
  for (auto& p : points) {
    env[vars[k]] = p;
    bool ok = evalTuples(cx, body, vars, k + 1, points, env);
    env.erase(vars[k]);
    if (!ok) return false;
  }
  return true;
}

static bool evalRec(const EvalCtx& cx, const FormulaPtr& f, Env& env) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      return f->boolValue;
    case Formula::Kind::Atom:
      return evalBool(cx.m, f->atom, env);
    case Formula::Kind::Not:
      return !evalRec(cx, f->kids[0], env);
    case Formula::Kind::And:
      for (auto& k : f->kids)
        if (!evalRec(cx, k, env)) return false;
      return true;
    case Formula::Kind::Or:
      for (auto& k : f->kids)
        if (evalRec(cx, k, env)) return true;
      return false;
    case Formula::Kind::Implies:
      return !evalRec(cx, f->kids[0], env) || evalRec(cx, f->kids[1], env);
    case Formula::Kind::Forall: {
      std::vector<Int> points;
      if (cx.bruteBound) {
        const Int& b = *cx.bruteBound;
        for (auto& p : basePoints(cx.m, f, env))
          if (p < -b + 1 || p > b - 1)
            throw EvalError("insufficient bound " + b.str() +
                            " for instantiation point " + p.str());
        for (Int j = -b; j <= b; ++j) points.push_back(j);
      } else {
        auto s = instantiationSet(cx.m, f, env);
        points.assign(s.begin(), s.end());
      }
      return evalTuples(cx, f->kids[0], f->boundVars, 0, points, env);
    }
  }
  return false;
}

bool evalFormula(const Model& m, const FormulaPtr& f) {
  auto v = isInFragment(f);
  if (!v.member)
    throw EvalError("formula outside the array property fragment (" +
                    std::string(rejectReasonName(*v.reason)) + " at " +
                    v.location + ")");
  Env env;
  EvalCtx cx{m, nullptr};
  return evalRec(cx, f, env);
}

bool bruteForceEval(const Model& m, const FormulaPtr& f, const Int& bound) {
  if (bound <= 0) throw EvalError("bound must be positive");
  auto v = isInFragment(f);
  if (!v.member)
    throw EvalError("formula outside the array property fragment");
  Env env;
  EvalCtx cx{m, &bound};
  return evalRec(cx, f, env);
}

}  // namespace apf

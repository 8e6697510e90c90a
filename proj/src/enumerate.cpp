#include "apf/enumerate.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace apf {

// ---------------------------------------------------------------------------
// Canonicalization: commutative-argument ordering, and/or flattening,
// constant folding, dead-binder elimination.

static bool allIntLits(const std::vector<TermPtr>& args) {
  for (auto& a : args)
    if (a->kind != Term::Kind::IntLit) return false;
  return true;
}

static TermPtr canonTerm(const TermPtr& t) {
  if (t->kind != Term::Kind::Apply) return t;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  for (auto& a : t->args) args.push_back(canonTerm(a));
  const FuncSymbol& s = t->symbol;
  if (allIntLits(args)) {
    if (s == sym::add()) return mkIntLit(args[0]->value + args[1]->value);
    if (s == sym::sub()) return mkIntLit(args[0]->value - args[1]->value);
    if (s == sym::mul()) return mkIntLit(args[0]->value * args[1]->value);
  }
  if (s == sym::diff() && printTerm(args[0]) == printTerm(args[1]))
    return mkIntLit(0);
  if ((s == sym::add() || s == sym::mul()) &&
      printTerm(args[0]) > printTerm(args[1]))
    std::swap(args[0], args[1]);
  return buildTerm(s, std::move(args));
}

FormulaPtr canonicalize(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      return f;
    case Formula::Kind::Atom: {
      TermPtr t = canonTerm(f->atom);
      if (t->kind == Term::Kind::Apply && allIntLits(t->args)) {
        const Int& x = t->args[0]->value;
        const Int& y = t->args[1]->value;
        if (t->symbol == sym::lt()) return mkBoolConst(x < y);
        if (t->symbol == sym::le()) return mkBoolConst(x <= y);
        if (t->symbol == sym::eq()) return mkBoolConst(x == y);
      }
      if (t->kind == Term::Kind::Apply && t->symbol == sym::eq()) {
        auto args = t->args;
        if (printTerm(args[0]) > printTerm(args[1])) {
          std::swap(args[0], args[1]);
          t = buildTerm(sym::eq(), std::move(args));
        }
      }
      return mkAtom(t);
    }
    case Formula::Kind::Not: {
      FormulaPtr k = canonicalize(f->kids[0]);
      if (k->kind == Formula::Kind::BoolConst)
        return mkBoolConst(!k->boolValue);
      return mkNot(k);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool isAnd = f->kind == Formula::Kind::And;
      std::vector<FormulaPtr> kids;
      for (auto& k0 : f->kids) {
        FormulaPtr k = canonicalize(k0);
        if (k->kind == Formula::Kind::BoolConst) {
          if (k->boolValue == isAnd) continue;  // neutral element
          return mkBoolConst(!isAnd);           // dominating element
        }
        if (k->kind == f->kind)  // flatten
          kids.insert(kids.end(), k->kids.begin(), k->kids.end());
        else
          kids.push_back(k);
      }
      std::sort(kids.begin(), kids.end(),
                [](const FormulaPtr& x, const FormulaPtr& y) {
                  return printFormula(x) < printFormula(y);
                });
      kids.erase(std::unique(kids.begin(), kids.end(),
                             [](const FormulaPtr& x, const FormulaPtr& y) {
                               return printFormula(x) == printFormula(y);
                             }),
                 kids.end());
      if (kids.empty()) return mkBoolConst(isAnd);
      if (kids.size() == 1) return kids[0];
      return isAnd ? mkAnd(std::move(kids)) : mkOr(std::move(kids));
    }
    case Formula::Kind::Implies: {
      FormulaPtr a = canonicalize(f->kids[0]);
      FormulaPtr b = canonicalize(f->kids[1]);
      if (a->kind == Formula::Kind::BoolConst)
        return a->boolValue ? b : mkTrue();
      if (b->kind == Formula::Kind::BoolConst)
        return b->boolValue ? mkTrue() : canonicalize(mkNot(a));
      return mkImplies(a, b);
    }
    case Formula::Kind::Forall: {
      FormulaPtr body = canonicalize(f->kids[0]);
      if (body->kind == Formula::Kind::BoolConst) return body;
      std::vector<std::string> vars;
      for (auto& v : f->boundVars)
        if (occursFree(body, v)) vars.push_back(v);
      if (vars.empty()) return body;
      return mkForall(std::move(vars), body);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Enumeration. Every pool is indexed by AST node count; applications,
// connectives and quantifiers cost 1 plus their children, leaves cost 1.

namespace {

struct Pools {
  int bound;
  bool withDiff;
  std::vector<std::vector<TermPtr>> ints;   // ground integer terms
  std::vector<std::vector<TermPtr>> arrs;   // ground array terms
  std::vector<std::vector<TermPtr>> mixed;  // terms with bound-variable reads
  std::unordered_set<std::string> seenTerms;

  bool addTerm(std::vector<std::vector<TermPtr>>& pool, int n, TermPtr t) {
    t = canonTerm(t);
    if (!seenTerms.insert(printTerm(t)).second) return false;
    pool[static_cast<size_t>(n)].push_back(std::move(t));
    return true;
  }
};

const std::array<const FuncSymbol*, 3> kComparisons = {&sym::lt(), &sym::le(),
                                                       &sym::eq()};

void buildGroundTerms(Pools& p) {
  p.ints.assign(static_cast<size_t>(p.bound) + 1, {});
  p.arrs.assign(static_cast<size_t>(p.bound) + 1, {});
  if (p.bound < 1) return;
  for (int v = -2; v <= 2; ++v) p.addTerm(p.ints, 1, mkIntLit(v));
  p.addTerm(p.arrs, 1, mkConst(sym::arrayConst("a")));
  p.addTerm(p.arrs, 1, mkConst(sym::arrayConst("b")));
  for (int n = 3; n <= p.bound; ++n) {
    for (int na = 1; na <= n - 2; ++na) {
      int nb = n - 1 - na;
      for (auto& A : p.arrs[static_cast<size_t>(na)])
        for (auto& i : p.ints[static_cast<size_t>(nb)])
          p.addTerm(p.ints, n, buildTerm(sym::select(), {A, i}));
      if (p.withDiff)
        for (auto& A : p.arrs[static_cast<size_t>(na)])
          for (auto& B : p.arrs[static_cast<size_t>(nb)])
            p.addTerm(p.ints, n, buildTerm(sym::diff(), {A, B}));
      for (auto& x : p.ints[static_cast<size_t>(na)])
        for (auto& y : p.ints[static_cast<size_t>(nb)]) {
          p.addTerm(p.ints, n, buildTerm(sym::add(), {x, y}));
          p.addTerm(p.ints, n, buildTerm(sym::sub(), {x, y}));
        }
    }
    for (int na = 1; na <= n - 3; ++na)
      for (int ni = 1; na + ni <= n - 2; ++ni) {
        int nv = n - 1 - na - ni;
        for (auto& A : p.arrs[static_cast<size_t>(na)])
          for (auto& i : p.ints[static_cast<size_t>(ni)])
            for (auto& v : p.ints[static_cast<size_t>(nv)])
              p.addTerm(p.arrs, n, buildTerm(sym::store(), {A, i, v}));
      }
  }
}

// terms reading ground arrays at bound variables, closed under +/-
void buildMixedTerms(Pools& p, const std::vector<std::string>& vars) {
  p.mixed.assign(static_cast<size_t>(p.bound) + 1, {});
  for (auto& v : vars) {
    TermPtr var = mkVar(v);
    for (int na = 1; na + 2 <= p.bound; ++na)
      for (auto& A : p.arrs[static_cast<size_t>(na)])
        p.mixed[static_cast<size_t>(na) + 2].push_back(
            buildTerm(sym::select(), {A, var}));
  }
  for (int n = 3; n <= p.bound; ++n) {
    std::vector<TermPtr> fresh;
    for (int na = 1; na <= n - 2; ++na) {
      int nb = n - 1 - na;
      auto combine = [&](const TermPtr& x, const TermPtr& y) {
        fresh.push_back(canonTerm(buildTerm(sym::add(), {x, y})));
        fresh.push_back(canonTerm(buildTerm(sym::sub(), {x, y})));
        fresh.push_back(canonTerm(buildTerm(sym::sub(), {y, x})));
      };
      for (auto& x : p.mixed[static_cast<size_t>(na)]) {
        for (auto& y : p.ints[static_cast<size_t>(nb)]) combine(x, y);
        for (auto& y : p.mixed[static_cast<size_t>(nb)]) combine(x, y);
      }
    }
    std::unordered_set<std::string> local;
    for (auto& t : fresh)
      if (local.insert(printTerm(t)).second)
        p.mixed[static_cast<size_t>(n)].push_back(t);
  }
}

struct FormulaPools {
  std::vector<std::vector<FormulaPtr>> groundAtoms;
  std::vector<std::vector<FormulaPtr>> properties;
};

void buildGroundAtoms(Pools& p, FormulaPools& fp,
                      std::unordered_set<std::string>& seen) {
  fp.groundAtoms.assign(static_cast<size_t>(p.bound) + 1, {});
  for (int n = 3; n <= p.bound; ++n)
    for (int na = 1; na <= n - 2; ++na) {
      int nb = n - 1 - na;
      for (auto* cmp : kComparisons)
        for (auto& x : p.ints[static_cast<size_t>(na)])
          for (auto& y : p.ints[static_cast<size_t>(nb)]) {
            FormulaPtr at = canonicalize(mkAtom(buildTerm(*cmp, {x, y})));
            if (at->kind == Formula::Kind::BoolConst) continue;  // folded
            if (seen.insert(printFormula(at)).second)
              fp.groundAtoms[static_cast<size_t>(n)].push_back(at);
          }
    }
}

// guard literals and positive and/or combinations over them
std::vector<std::vector<FormulaPtr>> buildGuards(Pools& p,
                                                 const std::vector<std::string>& vars,
                                                 int maxCost,
                                                 const FormulaPools& fp) {
  std::vector<std::vector<FormulaPtr>> g;
  if (maxCost < 0) maxCost = 0;
  g.assign(static_cast<size_t>(maxCost) + 1, {});
  std::unordered_set<std::string> seen;
  auto add = [&](int n, FormulaPtr f) {
    if (n > maxCost) return;
    f = canonicalize(f);
    if (f->kind == Formula::Kind::BoolConst) return;
    if (seen.insert(printFormula(f)).second)
      g[static_cast<size_t>(n)].push_back(std::move(f));
  };
  for (auto& vn : vars) {
    TermPtr v = mkVar(vn);
    for (int nt = 1; nt + 2 <= maxCost; ++nt)
      for (auto& t : p.ints[static_cast<size_t>(nt)]) {
        add(nt + 2, mkAtom(buildTerm(sym::le(), {v, t})));
        add(nt + 2, mkAtom(buildTerm(sym::le(), {t, v})));
        add(nt + 2, mkAtom(buildTerm(sym::eq(), {v, t})));
      }
  }
  if (vars.size() == 2) {
    TermPtr v0 = mkVar(vars[0]);
    TermPtr v1 = mkVar(vars[1]);
    add(3, mkAtom(buildTerm(sym::le(), {v0, v1})));
    add(3, mkAtom(buildTerm(sym::le(), {v1, v0})));
    add(3, mkAtom(buildTerm(sym::eq(), {v0, v1})));
  }
  for (int n = 3; n <= maxCost; ++n) {
    for (auto& at : fp.groundAtoms[static_cast<size_t>(n)]) add(n, at);
    if (n >= 4)
      for (auto& at : fp.groundAtoms[static_cast<size_t>(n) - 1])
        add(n, mkNot(at));
  }
  for (int n = 3; n <= maxCost; ++n) {
    std::vector<FormulaPtr> combos;
    for (int na = 3; na <= n - 1; ++na) {
      int nb = n - 1 - na;
      if (nb < 3 || nb > na) continue;  // unordered pair, counted once
      for (auto& x : g[static_cast<size_t>(na)])
        for (auto& y : g[static_cast<size_t>(nb)]) {
          combos.push_back(mkAnd(x, y));
          combos.push_back(mkOr(x, y));
        }
    }
    for (auto& c : combos) add(n, c);
  }
  return g;
}

// value constraints: comparisons over mixed/ground terms, closed under
// not/and/or/implies
std::vector<std::vector<FormulaPtr>> buildValueConstraints(Pools& p,
                                                           int maxCost) {
  std::vector<std::vector<FormulaPtr>> vc;
  if (maxCost < 0) maxCost = 0;
  vc.assign(static_cast<size_t>(maxCost) + 1, {});
  std::unordered_set<std::string> seen;
  auto add = [&](int n, FormulaPtr f) {
    if (n > maxCost) return;
    f = canonicalize(f);
    if (f->kind == Formula::Kind::BoolConst) return;
    if (seen.insert(printFormula(f)).second)
      vc[static_cast<size_t>(n)].push_back(std::move(f));
  };
  for (int n = 3; n <= maxCost; ++n)
    for (int na = 1; na <= n - 2; ++na) {
      int nb = n - 1 - na;
      for (auto* cmp : kComparisons) {
        for (auto& x : p.mixed[static_cast<size_t>(na)]) {
          for (auto& y : p.ints[static_cast<size_t>(nb)])
            add(n, mkAtom(buildTerm(*cmp, {x, y})));
          for (auto& y : p.mixed[static_cast<size_t>(nb)])
            add(n, mkAtom(buildTerm(*cmp, {x, y})));
        }
        for (auto& x : p.ints[static_cast<size_t>(na)])
          for (auto& y : p.mixed[static_cast<size_t>(nb)])
            add(n, mkAtom(buildTerm(*cmp, {x, y})));
      }
    }
  for (int n = 4; n <= maxCost; ++n) {
    std::vector<FormulaPtr> layer;
    for (auto& f : vc[static_cast<size_t>(n) - 1]) layer.push_back(mkNot(f));
    for (int na = 3; na <= n - 1; ++na) {
      int nb = n - 1 - na;
      if (nb < 3) continue;
      for (auto& x : vc[static_cast<size_t>(na)])
        for (auto& y : vc[static_cast<size_t>(nb)]) {
          if (na <= nb) {
            layer.push_back(mkAnd(x, y));
            layer.push_back(mkOr(x, y));
          }
          layer.push_back(mkImplies(x, y));
        }
    }
    for (auto& f : layer) add(n, f);
  }
  return vc;
}

void buildProperties(Pools& p, FormulaPools& fp,
                     std::unordered_set<std::string>& seen) {
  fp.properties.assign(static_cast<size_t>(p.bound) + 1, {});
  std::vector<std::vector<std::string>> blocks = {{"j"}, {"j", "j2"}};
  for (auto& vars : blocks) {
    if (p.bound < 1 + 3 * static_cast<int>(vars.size())) continue;
    buildMixedTerms(p, vars);
    auto vc = buildValueConstraints(p, p.bound - 1);
    auto guards = buildGuards(p, vars, p.bound - 2, fp);
    auto everyVarOccurs = [&](const FormulaPtr& f) {
      for (auto& v : vars)
        if (!occursFree(f, v)) return false;
      return true;
    };
    auto emit = [&](int cost, FormulaPtr prop) {
      prop = canonicalize(prop);
      if (prop->kind != Formula::Kind::Forall) return;  // binder collapsed
      if (prop->boundVars.size() != vars.size()) return;
      if (seen.insert(printFormula(prop)).second)
        fp.properties[static_cast<size_t>(cost)].push_back(std::move(prop));
    };
    for (int nv = 3; nv + 1 <= p.bound; ++nv)
      for (auto& body : vc[static_cast<size_t>(nv)]) {
        if (!everyVarOccurs(body)) continue;
        emit(nv + 1, mkForall(vars, body));  // guard-true normal form
      }
    for (int ng = 3; ng + 3 + 2 <= p.bound; ++ng)
      for (int nv = 3; ng + nv + 2 <= p.bound; ++nv)
        for (auto& g : guards[static_cast<size_t>(ng)])
          for (auto& body : vc[static_cast<size_t>(nv)]) {
            FormulaPtr whole = mkImplies(g, body);
            if (!everyVarOccurs(whole)) continue;
            emit(ng + nv + 2, mkForall(vars, whole));
          }
  }
}

}  // namespace

std::vector<FormulaPtr> enumerateCandidates(const EnumOptions& opt) {
  if (opt.sizeBound < 1) throw std::invalid_argument("sizeBound must be >= 1");
  Pools p;
  p.bound = opt.sizeBound;
  p.withDiff = opt.includeDiff;
  buildGroundTerms(p);

  std::unordered_set<std::string> seen;
  FormulaPools fp;
  buildGroundAtoms(p, fp, seen);
  buildProperties(p, fp, seen);

  std::vector<std::vector<FormulaPtr>> F(static_cast<size_t>(p.bound) + 1);
  std::unordered_set<std::string> seenTop;
  auto add = [&](int n, FormulaPtr f) {
    f = canonicalize(f);
    if (seenTop.insert(printFormula(f)).second)
      F[static_cast<size_t>(n)].push_back(std::move(f));
  };
  add(1, mkTrue());
  add(1, mkFalse());
  for (int n = 3; n <= p.bound; ++n) {
    for (auto& at : fp.groundAtoms[static_cast<size_t>(n)]) add(n, at);
    for (auto& pr : fp.properties[static_cast<size_t>(n)]) add(n, pr);
    if (n >= 4)
      for (auto& f : F[static_cast<size_t>(n) - 1])
        if (f->kind != Formula::Kind::BoolConst) add(n, mkNot(f));
    for (int na = 3; na <= n - 1; ++na) {
      int nb = n - 1 - na;
      if (nb < 3) continue;
      for (auto& x : F[static_cast<size_t>(na)])
        for (auto& y : F[static_cast<size_t>(nb)]) {
          if (na <= nb) {
            add(n, mkAnd(x, y));
            add(n, mkOr(x, y));
          }
          add(n, mkImplies(x, y));
        }
    }
  }
  std::vector<FormulaPtr> out;
  for (auto& layer : F)
    for (auto& f : layer) out.push_back(f);
  return out;
}

}  // namespace apf

#include "apf/ast.hpp"

#include <sstream>

namespace apf {

const char* sortName(Sort s) {
  switch (s) {
    case Sort::Int: return "Int";
    case Sort::Bool: return "Bool";
    case Sort::Array: return "(Array Int Int)";
  }
  return "?";
}

namespace sym {

static FuncSymbol theory(const char* name, std::vector<Sort> args, Sort res) {
  return FuncSymbol{name, std::move(args), res, SymbolKind::Theory};
}

const FuncSymbol& add() {
  static const FuncSymbol s = theory("+", {Sort::Int, Sort::Int}, Sort::Int);
  return s;
}
const FuncSymbol& sub() {
  static const FuncSymbol s = theory("-", {Sort::Int, Sort::Int}, Sort::Int);
  return s;
}
const FuncSymbol& mul() {
  static const FuncSymbol s = theory("*", {Sort::Int, Sort::Int}, Sort::Int);
  return s;
}
const FuncSymbol& lt() {
  static const FuncSymbol s = theory("<", {Sort::Int, Sort::Int}, Sort::Bool);
  return s;
}
const FuncSymbol& le() {
  static const FuncSymbol s = theory("<=", {Sort::Int, Sort::Int}, Sort::Bool);
  return s;
}
const FuncSymbol& eq() {
  static const FuncSymbol s = theory("=", {Sort::Int, Sort::Int}, Sort::Bool);
  return s;
}
const FuncSymbol& select() {
  static const FuncSymbol s =
      theory("select", {Sort::Array, Sort::Int}, Sort::Int);
  return s;
}
const FuncSymbol& store() {
  static const FuncSymbol s =
      theory("store", {Sort::Array, Sort::Int, Sort::Int}, Sort::Array);
  return s;
}
const FuncSymbol& diff() {
  static const FuncSymbol s =
      theory("diff", {Sort::Array, Sort::Array}, Sort::Int);
  return s;
}

FuncSymbol intConst(const std::string& name) {
  return FuncSymbol{name, {}, Sort::Int, SymbolKind::Free};
}
FuncSymbol arrayConst(const std::string& name) {
  return FuncSymbol{name, {}, Sort::Array, SymbolKind::Free};
}

}  // namespace sym

TermPtr mkIntLit(Int v) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::IntLit;
  t->sort = Sort::Int;
  t->value = std::move(v);
  return t;
}

TermPtr mkConst(const FuncSymbol& sym) {
  if (!sym.argSorts.empty())
    throw SortError("constant symbol '" + sym.name + "' must be zero-ary");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Const;
  t->sort = sym.resultSort;
  t->symbol = sym;
  return t;
}

TermPtr mkVar(const std::string& name, Sort sort) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->sort = sort;
  t->var = name;
  return t;
}

TermPtr buildTerm(const FuncSymbol& sym, std::vector<TermPtr> args) {
  if (args.size() != sym.argSorts.size())
    throw SortError("'" + sym.name + "' expects " +
                        std::to_string(sym.argSorts.size()) + " arguments, got " +
                        std::to_string(args.size()),
                    static_cast<int>(args.size()));
  for (size_t i = 0; i < args.size(); ++i) {
    if (!args[i]) throw SortError("null argument", static_cast<int>(i));
    if (args[i]->sort != sym.argSorts[i])
      throw SortError("sort mismatch at position " + std::to_string(i) +
                          " of '" + sym.name + "': expected " +
                          sortName(sym.argSorts[i]) + ", got " +
                          sortName(args[i]->sort),
                      static_cast<int>(i));
  }
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Apply;
  t->sort = sym.resultSort;
  t->symbol = sym;
  t->args = std::move(args);
  return t;
}

FormulaPtr mkBoolConst(bool b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::BoolConst;
  f->boolValue = b;
  return f;
}
FormulaPtr mkTrue() { return mkBoolConst(true); }
FormulaPtr mkFalse() { return mkBoolConst(false); }

FormulaPtr mkAtom(TermPtr t) {
  if (!t || t->sort != Sort::Bool)
    throw SortError("atom requires a term of sort Bool");
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->atom = std::move(t);
  return f;
}

FormulaPtr mkNot(FormulaPtr f) {
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::Not;
  r->kids = {std::move(f)};
  return r;
}

static FormulaPtr mkNary(Formula::Kind k, std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw std::runtime_error("empty connective");
  if (fs.size() == 1) return fs[0];
  auto r = std::make_shared<Formula>();
  r->kind = k;
  r->kids = std::move(fs);
  return r;
}

FormulaPtr mkAnd(std::vector<FormulaPtr> fs) {
  return mkNary(Formula::Kind::And, std::move(fs));
}
FormulaPtr mkAnd(FormulaPtr a, FormulaPtr b) {
  return mkAnd(std::vector<FormulaPtr>{std::move(a), std::move(b)});
}
FormulaPtr mkOr(std::vector<FormulaPtr> fs) {
  return mkNary(Formula::Kind::Or, std::move(fs));
}
FormulaPtr mkOr(FormulaPtr a, FormulaPtr b) {
  return mkOr(std::vector<FormulaPtr>{std::move(a), std::move(b)});
}

FormulaPtr mkImplies(FormulaPtr a, FormulaPtr b) {
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::Implies;
  r->kids = {std::move(a), std::move(b)};
  return r;
}

FormulaPtr mkForall(std::vector<std::string> vars, FormulaPtr body) {
  if (vars.empty()) throw std::runtime_error("forall needs at least one variable");
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::Forall;
  r->boundVars = std::move(vars);
  r->kids = {std::move(body)};
  return r;
}

static void collectFree(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::IntLit:
    case Term::Kind::Var:
      return;
    case Term::Kind::Const:
      if (t->symbol.kind == SymbolKind::Free) out.insert(t->symbol.name);
      return;
    case Term::Kind::Apply:
      if (t->symbol.kind == SymbolKind::Free) out.insert(t->symbol.name);
      for (auto& a : t->args) collectFree(a, out);
      return;
  }
}

static void collectFree(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      return;
    case Formula::Kind::Atom:
      collectFree(f->atom, out);
      return;
    default:
      for (auto& k : f->kids) collectFree(k, out);
      return;
  }
}

std::set<std::string> freeSymbols(const TermPtr& t) {
  std::set<std::string> out;
  collectFree(t, out);
  return out;
}

std::set<std::string> freeSymbols(const FormulaPtr& f) {
  std::set<std::string> out;
  collectFree(f, out);
  return out;
}

bool occursFree(const TermPtr& t, const std::string& name) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->var == name;
    case Term::Kind::Apply:
      for (auto& a : t->args)
        if (occursFree(a, name)) return true;
      return false;
    default:
      return false;
  }
}

bool occursFree(const FormulaPtr& f, const std::string& name) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      return false;
    case Formula::Kind::Atom:
      return occursFree(f->atom, name);
    case Formula::Kind::Forall:
      for (auto& v : f->boundVars)
        if (v == name) return false;
      return occursFree(f->kids[0], name);
    default:
      for (auto& k : f->kids)
        if (occursFree(k, name)) return true;
      return false;
  }
}

static bool isGround(const TermPtr& t) {
  if (t->kind == Term::Kind::Var) return false;
  for (auto& a : t->args)
    if (!isGround(a)) return false;
  return true;
}

TermPtr substitute(const TermPtr& in, const TermPtr& v, const TermPtr& t) {
  if (in->kind == Term::Kind::Var)
    return (in->var == v->var) ? t : in;
  if (in->kind != Term::Kind::Apply) return in;
  std::vector<TermPtr> args;
  args.reserve(in->args.size());
  bool changed = false;
  for (auto& a : in->args) {
    auto r = substitute(a, v, t);
    changed |= (r != a);
    args.push_back(std::move(r));
  }
  if (!changed) return in;
  return buildTerm(in->symbol, std::move(args));
}

static FormulaPtr substituteRec(const FormulaPtr& f, const TermPtr& v,
                                const TermPtr& t) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      return f;
    case Formula::Kind::Atom: {
      auto a = substitute(f->atom, v, t);
      return (a == f->atom) ? f : mkAtom(a);
    }
    case Formula::Kind::Forall: {
      for (auto& bv : f->boundVars)
        if (bv == v->var)
          throw std::runtime_error("substitution target '" + v->var +
                                   "' is shadowed by a quantifier");
      auto body = substituteRec(f->kids[0], v, t);
      if (body == f->kids[0]) return f;
      return mkForall(f->boundVars, body);
    }
    default: {
      std::vector<FormulaPtr> kids;
      kids.reserve(f->kids.size());
      bool changed = false;
      for (auto& k : f->kids) {
        auto r = substituteRec(k, v, t);
        changed |= (r != k);
        kids.push_back(std::move(r));
      }
      if (!changed) return f;
      auto r = std::make_shared<Formula>(*f);
      r->kids = std::move(kids);
      return r;
    }
  }
}

FormulaPtr substitute(const FormulaPtr& f, const TermPtr& v, const TermPtr& t) {
  if (v->kind != Term::Kind::Var)
    throw std::runtime_error("substitute: replacement target is not a variable");
  if (!isGround(t)) throw std::runtime_error("substitute: term is not ground");
  if (t->sort != v->sort)
    throw SortError("substitute: sort of term does not match variable");
  return substituteRec(f, v, t);
}

static bool checkTerm(const TermPtr& t, const std::set<std::string>& scope,
                      std::string* why) {
  switch (t->kind) {
    case Term::Kind::IntLit:
    case Term::Kind::Const:
      return true;
    case Term::Kind::Var:
      if (!scope.count(t->var)) {
        if (why) *why = "unbound variable '" + t->var + "'";
        return false;
      }
      return true;
    case Term::Kind::Apply: {
      if (t->args.size() != t->symbol.argSorts.size()) {
        if (why) *why = "arity mismatch at '" + t->symbol.name + "'";
        return false;
      }
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (t->args[i]->sort != t->symbol.argSorts[i]) {
          if (why)
            *why = "sort mismatch at argument " + std::to_string(i) + " of '" +
                   t->symbol.name + "'";
          return false;
        }
        if (!checkTerm(t->args[i], scope, why)) return false;
      }
      return true;
    }
  }
  return false;
}

static bool checkFormula(const FormulaPtr& f, std::set<std::string> scope,
                         std::string* why) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      return true;
    case Formula::Kind::Atom:
      if (f->atom->sort != Sort::Bool) {
        if (why) *why = "atom of non-Bool sort";
        return false;
      }
      return checkTerm(f->atom, scope, why);
    case Formula::Kind::Forall: {
      for (auto& v : f->boundVars) {
        if (scope.count(v)) {
          if (why) *why = "shadowed bound variable '" + v + "'";
          return false;
        }
        scope.insert(v);
      }
      return checkFormula(f->kids[0], scope, why);
    }
    default:
      for (auto& k : f->kids)
        if (!checkFormula(k, scope, why)) return false;
      return true;
  }
}

bool wellFormed(const FormulaPtr& f, std::string* why) {
  return checkFormula(f, {}, why);
}

static void print(const TermPtr& t, std::ostream& os) {
  switch (t->kind) {
    case Term::Kind::IntLit:
      if (t->value < 0)
        os << "(- " << -t->value << ")";
      else
        os << t->value;
      return;
    case Term::Kind::Const:
      os << t->symbol.name;
      return;
    case Term::Kind::Var:
      os << t->var;
      return;
    case Term::Kind::Apply: {
      os << '(' << t->symbol.name;
      for (auto& a : t->args) {
        os << ' ';
        print(a, os);
      }
      os << ')';
      return;
    }
  }
}

static void print(const FormulaPtr& f, std::ostream& os) {
  switch (f->kind) {
    case Formula::Kind::BoolConst:
      os << (f->boolValue ? "true" : "false");
      return;
    case Formula::Kind::Atom:
      print(f->atom, os);
      return;
    case Formula::Kind::Not:
      os << "(not ";
      print(f->kids[0], os);
      os << ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      os << '(' << (f->kind == Formula::Kind::And
                        ? "and"
                        : f->kind == Formula::Kind::Or ? "or" : "=>");
      for (auto& k : f->kids) {
        os << ' ';
        print(k, os);
      }
      os << ')';
      return;
    }
    case Formula::Kind::Forall: {
      os << "(forall (";
      for (size_t i = 0; i < f->boundVars.size(); ++i) {
        if (i) os << ' ';
        os << '(' << f->boundVars[i] << " Int)";
      }
      os << ") ";
      print(f->kids[0], os);
      os << ')';
      return;
    }
  }
}

std::string printTerm(const TermPtr& t) {
  std::ostringstream os;
  print(t, os);
  return os.str();
}

std::string printFormula(const FormulaPtr& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

SymbolPartition makePartition(const FormulaPtr& a, const FormulaPtr& b) {
  SymbolPartition p;
  auto fa = freeSymbols(a);
  auto fb = freeSymbols(b);
  for (auto& s : fa) {
    if (fb.count(s))
      p.shared.insert(s);
    else
      p.aLocal.insert(s);
  }
  for (auto& s : fb)
    if (!fa.count(s)) p.bLocal.insert(s);
  return p;
}

}  // namespace apf

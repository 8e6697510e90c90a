#ifndef APF_AST_HPP
#define APF_AST_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace apf {

/// Unbounded integer used for every arithmetic value in the artifact.
using Int = boost::multiprecision::cpp_int;

/// Sorts of the combined theory of arrays and integers. Arrays always have
/// integer index and element sort, so a plain enum suffices.
enum class Sort { Int, Bool, Array };

const char* sortName(Sort s);

enum class SymbolKind { Theory, Free };

/// A ranked function symbol. Theory symbols are fixed (see the sym
/// namespace); free symbols are zero-ary integer or array constants.
struct FuncSymbol {
  std::string name;
  std::vector<Sort> argSorts;
  Sort resultSort = Sort::Int;
  SymbolKind kind = SymbolKind::Free;

  bool operator==(const FuncSymbol& o) const {
    return name == o.name && argSorts == o.argSorts &&
           resultSort == o.resultSort && kind == o.kind;
  }
};

/// The fixed theory signature: +, -, *, <, <=, = over Int, and
/// select/store/diff over (Array Int Int).
namespace sym {
const FuncSymbol& add();
const FuncSymbol& sub();
const FuncSymbol& mul();
const FuncSymbol& lt();
const FuncSymbol& le();
const FuncSymbol& eq();
const FuncSymbol& select();
const FuncSymbol& store();
const FuncSymbol& diff();

FuncSymbol intConst(const std::string& name);
FuncSymbol arrayConst(const std::string& name);
}  // namespace sym

struct SortError : std::runtime_error {
  int position;  // offending argument position, -1 if not applicable
  SortError(const std::string& msg, int pos = -1)
      : std::runtime_error(msg), position(pos) {}
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { IntLit, Const, Var, Apply };

  Kind kind;
  Sort sort;
  Int value;               // IntLit
  FuncSymbol symbol;       // Const, Apply
  std::string var;         // Var
  std::vector<TermPtr> args;  // Apply
};

TermPtr mkIntLit(Int v);
TermPtr mkConst(const FuncSymbol& sym);
TermPtr mkVar(const std::string& name, Sort sort = Sort::Int);

/// Rank-checked application; throws SortError naming the offending
/// argument position.
TermPtr buildTerm(const FuncSymbol& sym, std::vector<TermPtr> args);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { BoolConst, Atom, Not, And, Or, Implies, Forall };

  Kind kind;
  bool boolValue = false;              // BoolConst
  TermPtr atom;                        // Atom (sort Bool)
  std::vector<FormulaPtr> kids;        // Not(1), And/Or(n), Implies(2), Forall(1)
  std::vector<std::string> boundVars;  // Forall, all of sort Int
};

FormulaPtr mkTrue();
FormulaPtr mkFalse();
FormulaPtr mkBoolConst(bool b);
FormulaPtr mkAtom(TermPtr t);
FormulaPtr mkNot(FormulaPtr f);
FormulaPtr mkAnd(std::vector<FormulaPtr> fs);
FormulaPtr mkAnd(FormulaPtr a, FormulaPtr b);
FormulaPtr mkOr(std::vector<FormulaPtr> fs);
FormulaPtr mkOr(FormulaPtr a, FormulaPtr b);
FormulaPtr mkImplies(FormulaPtr a, FormulaPtr b);
FormulaPtr mkForall(std::vector<std::string> vars, FormulaPtr body);

/// Names of free (non-theory, non-bound) symbols.
std::set<std::string> freeSymbols(const TermPtr& t);
std::set<std::string> freeSymbols(const FormulaPtr& f);

/// True iff the quantified variable `name` occurs free in t/f.
bool occursFree(const TermPtr& t, const std::string& name);
bool occursFree(const FormulaPtr& f, const std::string& name);

/// Replaces every free occurrence of v by the ground term t.
/// Throws SortError on sort mismatch and std::runtime_error when v's
/// name is rebound somewhere in f (shadowing) or t is not ground.
FormulaPtr substitute(const FormulaPtr& f, const TermPtr& v, const TermPtr& t);
TermPtr substitute(const TermPtr& in, const TermPtr& v, const TermPtr& t);

/// Recursive validator: rank-correctness of every application, Int-sorted
/// bound variables, no shadowing, no unbound variables.
bool wellFormed(const FormulaPtr& f, std::string* why = nullptr);

/// SMT-LIB style rendering, e.g. (forall ((j Int)) (< (select a j) 0)).
std::string printTerm(const TermPtr& t);
std::string printFormula(const FormulaPtr& f);

struct SymbolPartition {
  std::set<std::string> shared;
  std::set<std::string> aLocal;
  std::set<std::string> bLocal;
};

SymbolPartition makePartition(const FormulaPtr& a, const FormulaPtr& b);

}  // namespace apf

#endif

#ifndef APF_EVAL_HPP
#define APF_EVAL_HPP

#include <map>
#include <set>
#include <variant>

#include "apf/ast.hpp"
#include "apf/model.hpp"

namespace apf {

using Value = std::variant<Int, bool, FinArray>;

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Binding of quantified variables during evaluation.
using Env = std::map<std::string, Int>;

Value evalTerm(const Model& m, const TermPtr& t, const Env& env = {});

/// Convenience accessors; throw EvalError on kind mismatch.
Int evalInt(const Model& m, const TermPtr& t, const Env& env = {});
bool evalBool(const Model& m, const TermPtr& t, const Env& env = {});
FinArray evalArray(const Model& m, const TermPtr& t, const Env& env = {});

/// Instantiation points for one quantifier block: window indices of every
/// array read at a quantified position, values of ground guard terms, the
/// +-1 neighbours of all of these, and sentinels beyond both ends. Truth
/// of the block over the integers equals truth over this set.
std::set<Int> instantiationSet(const Model& m, const FormulaPtr& property,
                               const Env& env = {});

/// Exact truth value of a fragment formula; refuses non-members.
bool evalFormula(const Model& m, const FormulaPtr& f);

/// Testing oracle: quantifiers range over [-bound, bound]. Throws
/// EvalError when the bound does not cover every window index and ground
/// guard value plus one index beyond on each side.
bool bruteForceEval(const Model& m, const FormulaPtr& f, const Int& bound);

}  // namespace apf

#endif

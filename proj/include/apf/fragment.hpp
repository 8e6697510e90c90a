#ifndef APF_FRAGMENT_HPP
#define APF_FRAGMENT_HPP

#include <optional>
#include <set>
#include <string>

#include "apf/ast.hpp"

namespace apf {

enum class RejectReason {
  NegatedGuardLiteral,
  IllegalGuardLiteralShape,
  NestedSelectOnQuantifiedVar,
  QuantifiedVarInStoreOrDiff,
  QuantifiedVarOutsideSelect,
  QuantifierAlternation,
  QuantifierUnderUninterpretedContext,
};

const char* rejectReasonName(RejectReason r);

/// Result of a fragment membership check. `location` is a path into the
/// formula, e.g. "forall.guard.arg[1]".
struct FragmentVerdict {
  bool member = true;
  std::optional<RejectReason> reason;
  std::string location;

  static FragmentVerdict accept() { return {}; }
  static FragmentVerdict reject(RejectReason r, std::string loc) {
    return {false, r, std::move(loc)};
  }
};

/// Index guard check: positive and/or combination of ground literals and
/// variable literals of the shapes j <= t, t <= j, j <= j', j = t, j = j'.
FragmentVerdict isIndexGuard(const FormulaPtr& g,
                             const std::set<std::string>& vars);

/// Value constraint check: quantified variables occur only as non-nested
/// select indices, never inside select/store/diff arguments.
FragmentVerdict isValueConstraint(const FormulaPtr& v,
                                  const std::set<std::string>& vars);

/// Membership in the alternation-free array property fragment: Boolean
/// combinations of quantifier-free formulas and array properties
/// (forall js. guard => vc), with a bare forall read as guard true.
FragmentVerdict isInFragment(const FormulaPtr& f);

/// Opt-in preprocessing: rewrites strict guard comparisons on bound
/// variables, j < t into j <= t - 1 and t < j into t + 1 <= j. The
/// recognizer itself stays faithful to the <=/= grammar.
FormulaPtr rewriteStrictGuards(const FormulaPtr& f);

}  // namespace apf

#endif

#ifndef APF_STABILIZE_HPP
#define APF_STABILIZE_HPP

#include "apf/ast.hpp"
#include "apf/model.hpp"

namespace apf {

enum class StabProperty { P1Scalar, P2Array, FConstantValue };

const char* stabPropertyName(StabProperty p);

struct StabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Certificate that a shared term or formula behaves uniformly over the
/// model family from `index` on: P1Scalar — the value is constant;
/// P2Array — stable prefix and repeating suffix; FConstantValue — the
/// truth value is constant. `conditional` marks reports whose diff
/// subterms were only checked equal up to the horizon, not proven equal
/// forever.
struct StabilizationReport {
  TermPtr term;        // exactly one of term/formula is set
  FormulaPtr formula;
  long long index = 0;
  StabProperty property = StabProperty::P1Scalar;
  long long verifiedHorizon = 0;
  bool conditional = false;
};

/// Stabilization index for a shared ground term, computed by structural
/// recursion (max over subterm indices, select/store cases add the
/// evaluated index value). The claimed property is checked empirically on
/// [index, horizon]; a failure throws StabError and means a bug.
StabilizationReport stabIndexTerm(const TermPtr& t, long long horizon);

/// Stabilization index for a shared fragment formula. Array properties
/// follow the two-stage construction (subterm indices, then guard values
/// + 1, then the first index where the property goes false); Boolean
/// structure takes maxima.
StabilizationReport stabIndexProperty(const FormulaPtr& f, long long horizon);

/// Re-checks a report's property for every i in
/// [index, verifiedHorizon + extra]; false on any violation.
bool verifyStabilization(const StabilizationReport& r, long long extra);

/// Report serialization (subject printed in SMT-LIB syntax).
std::string writeReport(const StabilizationReport& r);

}  // namespace apf

#endif

#ifndef APF_INTERP_HPP
#define APF_INTERP_HPP

#include <optional>
#include <utility>

#include "apf/ast.hpp"
#include "apf/fragment.hpp"
#include "apf/model.hpp"

namespace apf {

struct InterpolationProblem {
  FormulaPtr a;
  FormulaPtr b;
  SymbolPartition partition;
};

/// The fixed example problem:
///   A: (forall ((i Int)) (< (select a i) (select b k)))
///   B: (forall ((j Int)) (not (< (select a l) (select b j))))
/// shared = {a, b}, A-local = {k}, B-local = {l}.
InterpolationProblem exampleProblem();

/// Instantiates each side's quantifier with the other side's ground index
/// terms and returns the resulting complementary pair of ground literals,
/// (< (select a l) (select b k)) and its negation.
std::pair<FormulaPtr, FormulaPtr> verifyExampleUnsat();

enum class CandidateOutcome {
  NotShared,
  NotInFragment,
  FailsConditionI,    // false in some even model, which satisfies A
  FailsConditionII,   // true in some odd model, which satisfies B
  SurvivesHorizon,
};

const char* candidateOutcomeName(CandidateOutcome o);

struct CandidateVerdict {
  FormulaPtr candidate;
  CandidateOutcome outcome = CandidateOutcome::SurvivesHorizon;
  std::optional<long long> witness;                // model index
  std::optional<FragmentVerdict> fragmentVerdict;  // set for NotInFragment
};

std::string writeVerdict(const CandidateVerdict& v);

/// Sweeps the model family M_0..M_horizon looking for the first parity
/// violation: an interpolant would have to be true in every even model
/// and false in every odd one.
CandidateVerdict checkCandidate(const InterpolationProblem& p,
                                const FormulaPtr& c, long long horizon);

/// Same sweep against a prebuilt family (used by the parallel kernels).
CandidateVerdict checkCandidate(const InterpolationProblem& p,
                                const FormulaPtr& c, long long horizon,
                                const ModelFamily& family);

/// The two alternating-quantifier interpolants of the example,
///   I1 = exists j. forall i. a[i] < b[j]
///   I2 = forall i. exists j. a[i] < b[j],
/// evaluated by explicit two-level finite instantiation, plus the
/// recognizer's rejection of their not-forall-not encodings.
struct AlternatingReport {
  long long horizon = 0;
  bool parityOk = false;
  long long firstViolation = -1;  // -1 when parityOk
  FormulaPtr i1Encoded;
  FormulaPtr i2Encoded;
  FragmentVerdict i1Verdict;
  FragmentVerdict i2Verdict;
};

AlternatingReport checkAlternatingInterpolants(long long horizon);

/// Truth of I1/I2 in a single model (exposed for tests).
bool evalExistsForall(const Model& m);
bool evalForallExists(const Model& m);

}  // namespace apf

#endif

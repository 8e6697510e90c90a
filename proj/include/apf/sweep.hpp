#ifndef APF_SWEEP_HPP
#define APF_SWEEP_HPP

#include <vector>

#include "apf/interp.hpp"

namespace apf {

/// Aggregate result of refuting a batch of candidates against the model
/// family. `verdicts` is in candidate order regardless of scheduling, so
/// serial and parallel runs produce identical summaries.
struct SweepSummary {
  long long horizon = 0;
  std::vector<CandidateVerdict> verdicts;
  size_t refuted = 0;
  size_t rejected = 0;  // not shared or not in the fragment
  size_t survivors = 0;
  long long maxWitness = -1;
};

SweepSummary sweepCandidatesSerial(const InterpolationProblem& p,
                                   const std::vector<FormulaPtr>& candidates,
                                   long long horizon);

/// OpenMP kernel; `jobs` <= 0 means the OpenMP default.
SweepSummary sweepCandidatesParallel(const InterpolationProblem& p,
                                     const std::vector<FormulaPtr>& candidates,
                                     long long horizon, int jobs = 0);

/// Parity sweep for a single formula: true in every even model and false
/// in every odd one up to the horizon.
bool paritySweepSerial(const FormulaPtr& f, long long horizon,
                       long long* firstViolation = nullptr);
bool paritySweepParallel(const FormulaPtr& f, long long horizon,
                         long long* firstViolation = nullptr, int jobs = 0);

}  // namespace apf

#endif

#include "apf/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "apf/eval.hpp"

namespace apf {

namespace {

SweepSummary summarize(long long horizon, std::vector<CandidateVerdict> vs) {
  SweepSummary s;
  s.horizon = horizon;
  s.verdicts = std::move(vs);
  for (auto& v : s.verdicts) {
    switch (v.outcome) {
      case CandidateOutcome::NotShared:
      case CandidateOutcome::NotInFragment:
        ++s.rejected;
        break;
      case CandidateOutcome::FailsConditionI:
      case CandidateOutcome::FailsConditionII:
        ++s.refuted;
        if (v.witness) s.maxWitness = std::max(s.maxWitness, *v.witness);
        break;
      case CandidateOutcome::SurvivesHorizon:
        ++s.survivors;
        break;
    }
  }
  return s;
}

}  // namespace

SweepSummary sweepCandidatesSerial(const InterpolationProblem& p,
                                   const std::vector<FormulaPtr>& candidates,
                                   long long horizon) {
  ModelFamily family(horizon);
  std::vector<CandidateVerdict> vs(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i)
    vs[i] = checkCandidate(p, candidates[i], horizon, family);
  return summarize(horizon, std::move(vs));
}

SweepSummary sweepCandidatesParallel(const InterpolationProblem& p,
                                     const std::vector<FormulaPtr>& candidates,
                                     long long horizon, int jobs) {
  ModelFamily family(horizon);
  std::vector<CandidateVerdict> vs(candidates.size());
  const long long n = static_cast<long long>(candidates.size());
#ifdef _OPENMP
  if (jobs > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
    for (long long i = 0; i < n; ++i)
      vs[static_cast<size_t>(i)] =
          checkCandidate(p, candidates[static_cast<size_t>(i)], horizon, family);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i)
      vs[static_cast<size_t>(i)] =
          checkCandidate(p, candidates[static_cast<size_t>(i)], horizon, family);
  }
#else
  (void)jobs;
  for (long long i = 0; i < n; ++i)
    vs[static_cast<size_t>(i)] =
        checkCandidate(p, candidates[static_cast<size_t>(i)], horizon, family);
#endif
  return summarize(horizon, std::move(vs));
}

bool paritySweepSerial(const FormulaPtr& f, long long horizon,
                       long long* firstViolation) {
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  ModelFamily family(horizon);
  for (long long i = 0; i <= horizon; ++i) {
    bool val = evalFormula(family.at(i), f);
    if (val != (i % 2 == 0)) {
      if (firstViolation) *firstViolation = i;
      return false;
    }
  }
  if (firstViolation) *firstViolation = -1;
  return true;
}

bool paritySweepParallel(const FormulaPtr& f, long long horizon,
                         long long* firstViolation, int jobs) {
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  ModelFamily family(horizon);
  long long first = horizon + 1;
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  {
    long long localFirst = horizon + 1;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i <= horizon; ++i) {
      bool val = evalFormula(family.at(i), f);
      if (val != (i % 2 == 0)) localFirst = std::min(localFirst, i);
    }
#pragma omp critical
    first = std::min(first, localFirst);
  }
#else
  (void)jobs;
  for (long long i = 0; i <= horizon; ++i) {
    bool val = evalFormula(family.at(i), f);
    if (val != (i % 2 == 0)) {
      first = i;
      break;
    }
  }
#endif
  if (first <= horizon) {
    if (firstViolation) *firstViolation = first;
    return false;
  }
  if (firstViolation) *firstViolation = -1;
  return true;
}

}  // namespace apf

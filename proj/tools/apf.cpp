#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "apf/enumerate.hpp"
#include "apf/eval.hpp"
#include "apf/interp.hpp"
#include "apf/model.hpp"
#include "apf/smtlib.hpp"
#include "apf/stabilize.hpp"
#include "apf/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // property or fragment failure
constexpr int kExitUsage = 2;    // usage, parse, or sort error

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

apf::Script loadScript(const std::string& path) {
  return apf::parseScript(readFile(path));
}

apf::Model loadModel(const std::string& spec) {
  if (spec.rfind("paper:", 0) == 0) {
    long long i = std::stoll(spec.substr(6));
    if (i < 0) throw std::runtime_error("paper model index must be >= 0");
    return apf::mkPaperModel(apf::Int(i));
  }
  return apf::readModel(readFile(spec));
}

int cmdCheckFragment(const std::string& file) {
  apf::Script s = loadScript(file);
  bool allMember = true;
  for (size_t i = 0; i < s.assertions.size(); ++i) {
    auto v = apf::isInFragment(s.assertions[i]);
    std::cout << "assertion " << (i + 1) << ": ";
    if (v.member) {
      std::cout << "member\n";
    } else {
      allMember = false;
      std::cout << "non-member reason=" << apf::rejectReasonName(*v.reason)
                << " at " << v.location << "\n";
    }
  }
  return allMember ? kExitOk : kExitFailure;
}

int cmdEval(const std::string& file, const std::string& modelSpec) {
  apf::Script s = loadScript(file);
  apf::Model m = loadModel(modelSpec);
  for (size_t i = 0; i < s.assertions.size(); ++i) {
    auto v = apf::isInFragment(s.assertions[i]);
    if (!v.member) {
      std::cerr << "assertion " << (i + 1) << " is outside the fragment: "
                << apf::rejectReasonName(*v.reason) << " at " << v.location
                << "\n";
      return kExitFailure;
    }
    bool val = apf::evalFormula(m, s.assertions[i]);
    std::cout << "assertion " << (i + 1) << ": " << (val ? "true" : "false")
              << "\n";
  }
  return kExitOk;
}

bool diffAxiomSamples(int count, std::ostream& log) {
  std::mt19937_64 rng(20240901);
  auto randInt = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto randArray = [&]() {
    apf::Int left(randInt(-3, 3)), right(randInt(-3, 3));
    int len = randInt(0, 5);
    if (len == 0) right = left;  // empty window requires equal tails
    std::vector<apf::Int> w;
    for (int j = 0; j < len; ++j) w.emplace_back(randInt(-3, 3));
    return apf::FinArray::make(left, apf::Int(randInt(-4, 4)), std::move(w),
                               right);
  };
  int checked = 0;
  while (checked < count) {
    apf::FinArray s = randArray(), t = randArray();
    if (s == t) continue;
    apf::Int d = apf::diffIndex(s, t);
    if (s.read(d) == t.read(d)) {
      log << "diff axiom violated at index " << d << "\n";
      return false;
    }
    ++checked;
  }
  return true;
}

int cmdVerifyPaper(long long maxI) {
  apf::InterpolationProblem p = apf::exampleProblem();
  apf::ModelFamily family(maxI);
  long long evenOk = 0, evenTotal = 0, oddOk = 0, oddTotal = 0;
  for (long long i = 0; i <= maxI; ++i) {
    const apf::Model& m = family.at(i);
    if (i % 2 == 0) {
      ++evenTotal;
      if (apf::evalFormula(m, p.a)) ++evenOk;
    } else {
      ++oddTotal;
      if (apf::evalFormula(m, p.b)) ++oddOk;
    }
  }
  std::cout << "even⊨A: " << evenOk << "/" << evenTotal << ", odd⊨B: " << oddOk
            << "/" << oddTotal << "\n";

  bool diffOk = diffAxiomSamples(1000, std::cerr);
  std::cout << "diff axiom samples: " << (diffOk ? "1000/1000" : "failed")
            << "\n";

  auto clash = apf::verifyExampleUnsat();
  std::cout << "clash: " << apf::printFormula(clash.first) << "  vs  "
            << apf::printFormula(clash.second) << "\n";
  bool clashOk =
      apf::printFormula(clash.first) == "(< (select a l) (select b k))" &&
      apf::printFormula(clash.second) == "(not (< (select a l) (select b k)))";

  bool ok = evenOk == evenTotal && oddOk == oddTotal && diffOk && clashOk;
  std::cout << (ok ? "verify-paper: ok" : "verify-paper: FAILED") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmdStabilize(const std::string& file, long long horizon) {
  apf::Script s = loadScript(file);
  for (auto& f : s.assertions) {
    auto rep = apf::stabIndexProperty(f, horizon);
    std::cout << apf::writeReport(rep) << "\n";
  }
  return kExitOk;
}

int cmdRefute(const std::string& file, long long horizon) {
  apf::Script s = loadScript(file);
  if (s.assertions.size() != 1)
    throw std::runtime_error("refute expects exactly one assertion");
  apf::InterpolationProblem p = apf::exampleProblem();
  auto v = apf::checkCandidate(p, s.assertions[0], horizon);
  std::cout << apf::writeVerdict(v) << "\n";
  return v.outcome == apf::CandidateOutcome::SurvivesHorizon ? kExitFailure
                                                             : kExitOk;
}

int cmdEnumerate(int size, long long horizon, bool noDiff, int jobs,
                 bool quiet) {
  apf::EnumOptions opt;
  opt.sizeBound = size;
  opt.includeDiff = !noDiff;
  auto candidates = apf::enumerateCandidates(opt);
  apf::InterpolationProblem p = apf::exampleProblem();
  apf::SweepSummary sum =
      jobs == 1 ? apf::sweepCandidatesSerial(p, candidates, horizon)
                : apf::sweepCandidatesParallel(p, candidates, horizon, jobs);
  if (!quiet)
    for (auto& v : sum.verdicts) std::cout << apf::writeVerdict(v) << "\n";
  std::cout << "candidates=" << candidates.size()
            << " refuted=" << (sum.refuted + sum.rejected)
            << " survivors=" << sum.survivors << "\n";
  return sum.survivors == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"array property fragment toolkit"};
  app.require_subcommand(1);

  std::string file, modelSpec;
  long long maxI = 200, horizon = 64;
  int size = 7, jobs = 0;
  bool noDiff = false, quiet = false;

  auto* cf = app.add_subcommand("check-fragment",
                                "classify each assertion against the fragment");
  cf->add_option("file", file, "SMT-LIB script")->required();

  auto* ev = app.add_subcommand("eval", "evaluate each assertion in a model");
  ev->add_option("file", file, "SMT-LIB script")->required();
  ev->add_option("--model", modelSpec, "paper:I or a model JSON file")
      ->required();

  auto* vp = app.add_subcommand("verify-paper",
                                "parity sweep, diff axiom samples, clash");
  vp->add_option("--max-i", maxI, "largest model index");

  auto* st = app.add_subcommand("stabilize",
                                "stabilization report per assertion");
  st->add_option("file", file, "SMT-LIB script")->required();
  st->add_option("--horizon", horizon, "verification horizon");

  auto* rf = app.add_subcommand("refute",
                                "sweep a single candidate interpolant");
  rf->add_option("file", file, "SMT-LIB script with one assertion")->required();
  rf->add_option("--horizon", horizon, "sweep horizon");

  auto* en = app.add_subcommand("enumerate",
                                "refute every candidate within a size bound");
  en->add_option("--size", size, "AST node bound");
  en->add_option("--horizon", horizon, "sweep horizon");
  en->add_flag("--no-diff", noDiff, "exclude diff from the signature");
  en->add_option("--jobs", jobs, "worker threads (0 = default)");
  en->add_flag("--quiet", quiet, "suppress per-candidate verdicts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cf->parsed()) return cmdCheckFragment(file);
    if (ev->parsed()) return cmdEval(file, modelSpec);
    if (vp->parsed()) return cmdVerifyPaper(maxI);
    if (st->parsed()) return cmdStabilize(file, horizon);
    if (rf->parsed()) return cmdRefute(file, horizon);
    if (en->parsed()) return cmdEnumerate(size, horizon, noDiff, jobs, quiet);
  } catch (const apf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const apf::SortError& e) {
    std::cerr << "sort error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "apf/enumerate.hpp"
#include "apf/sweep.hpp"

// Compares the serial reference sweep against the OpenMP kernel on the
// same candidate set and checks that they agree verdict for verdict.

int main(int argc, char** argv) {
  CLI::App app{"candidate sweep benchmark: serial vs OpenMP"};
  int size = 7;
  long long horizon = 64;
  int jobs = 0;
  app.add_option("--size", size, "AST node bound");
  app.add_option("--horizon", horizon, "sweep horizon");
  app.add_option("--jobs", jobs, "OpenMP threads (0 = default)");
  CLI11_PARSE(app, argc, argv);

  apf::EnumOptions opt;
  opt.sizeBound = size;
  auto candidates = apf::enumerateCandidates(opt);
  apf::InterpolationProblem p = apf::exampleProblem();
  std::cout << "candidates: " << candidates.size() << ", horizon: " << horizon
            << "\n";

  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto serial = apf::sweepCandidatesSerial(p, candidates, horizon);
  auto t1 = clock::now();
  auto parallel = apf::sweepCandidatesParallel(p, candidates, horizon, jobs);
  auto t2 = clock::now();

  auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };
  std::cout << "serial:   " << ms(t0, t1) << " ms\n";
  std::cout << "parallel: " << ms(t1, t2) << " ms\n";

  bool agree = serial.verdicts.size() == parallel.verdicts.size();
  for (size_t i = 0; agree && i < serial.verdicts.size(); ++i)
    agree = apf::writeVerdict(serial.verdicts[i]) ==
            apf::writeVerdict(parallel.verdicts[i]);
  std::cout << "agreement: " << (agree ? "ok" : "MISMATCH") << "\n";
  std::cout << "refuted=" << serial.refuted + serial.rejected
            << " survivors=" << serial.survivors << "\n";
  return agree ? 0 : 1;
}

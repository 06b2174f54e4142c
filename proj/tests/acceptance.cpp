// One PASS/FAIL line per acceptance criterion. Optional arguments select
// criteria by number; --seed and --scale tune the randomized parts.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "parablat/checks.hpp"

using namespace parablat::checks;

int main(int argc, char** argv) {
  using Fn = CheckResult (*)(const SuiteOptions&);
  const Fn criteria[] = {acceptance_1_decomposition, acceptance_2_iota,     acceptance_3_membership,
                         acceptance_4_heisenberg,    acceptance_5_cocycle,  acceptance_6_splitting,
                         acceptance_7_spinor,        acceptance_8_boundary, acceptance_9_complement};
  SuiteOptions opt;
  std::vector<int> chosen;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
      opt.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (!std::strcmp(argv[i], "--scale") && i + 1 < argc)
      opt.scale = std::atof(argv[++i]);
    else
      chosen.push_back(std::atoi(argv[i]));
  }
  if (chosen.empty())
    for (int k = 1; k <= 9; ++k) chosen.push_back(k);

  int failures = 0;
  for (int k : chosen) {
    if (k < 1 || k > 9) {
      std::printf("FAIL %d: no such criterion\n", k);
      ++failures;
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult r = criteria[k - 1](opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d: %s (%.1fs) [%s]\n", r.pass ? "PASS" : "FAIL", k, r.name.c_str(), secs, r.detail.c_str());
    failures += !r.pass;
  }
  return failures ? 1 : 0;
}

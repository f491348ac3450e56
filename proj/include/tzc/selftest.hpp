#pragma once

#include "tzc/io.hpp"

namespace tzc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, counterexample on failure
};

// Brute-force oracle suite over a desk-scale parameter set (q at most
// `bound`):
// exhaustive trace zero enumeration and roundtrip, the summation-polynomial
// vanishing oracles, the solution-set propositions, the quadratic-twist
// characterization of T_2, and the torsion lemma. Every check is
// self-contained and independent of the code paths it validates.
std::vector<CheckResult> run_selftest(const ParamFile& pf, uint64_t seed,
                                      unsigned bound = 31);

}  // namespace tzc

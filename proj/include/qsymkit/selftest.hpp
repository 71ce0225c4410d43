#ifndef QSYMKIT_SELFTEST_HPP
#define QSYMKIT_SELFTEST_HPP

#include <string>

namespace qsk {

struct SelftestReport {
  std::string text;  // one line per suite, no timings
  bool passed = true;
};

// Exhaustive desk-scale consistency suites. max_size bounds the ground-set
// size of the enumerated double posets (1..4); composition and shape sizes
// scale with it.
SelftestReport run_selftest(int max_size);

}  // namespace qsk

#endif  // QSYMKIT_SELFTEST_HPP

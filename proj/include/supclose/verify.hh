#ifndef SUPCLOSE_VERIFY_HH
#define SUPCLOSE_VERIFY_HH

#include <cstdint>
#include <string>
#include <vector>

// Theorem-verification harness: every suite draws a deterministic
// randomized corpus (or an exhaustive family) and checks one of the
// identities realized by the kernel, dumping a counterexample for every
// violation.  Suites are pure and sequential, so results are
// reproducible bit-for-bit for a fixed seed.

namespace supclose {

struct SuiteResult {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;
    bool vacuous = false;   // ran with an empty corpus (count = 0)

    bool ok() const { return failures.empty(); }
};

// Known suite names, ascending.
const std::vector<std::string>& suite_names();

// Runs the named suites; "all" expands to every suite.  count < 0 keeps
// each suite's default corpus size, count = 0 is a vacuous pass (flagged
// on the result), anything else scales the corpus.  Unknown names raise
// lookup_error.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& filter,
                                    uint64_t seed, long count);

} // namespace supclose

#endif

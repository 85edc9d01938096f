#include <cstdio>

#include "rsdist/verify.hpp"

// Runs the eight acceptance checks and prints one verdict line per criterion.
// Exit status is nonzero unless every criterion holds.
int main() {
  const auto results = rsdist::run_all_checks();
  int rc = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const char* tag = r.verdict == rsdist::Trilean::holds   ? "PASS"
                      : r.verdict == rsdist::Trilean::fails ? "FAIL"
                                                            : "UNKNOWN";
    std::printf("criterion %zu [%s]: %s -- %s\n", i + 1, r.name.c_str(), tag,
                r.detail.c_str());
    std::fflush(stdout);
    if (r.verdict != rsdist::Trilean::holds) rc = 1;
  }
  return rc;
}

// Runs the full verification suite with the default seed and prints one
// line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "ghtk/acceptance.hpp"

int main(int argc, char** argv) {
    ghtk::accept::SuiteOptions opts;
    if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) opts.workers = static_cast<unsigned>(std::atoi(argv[2]));

    auto results = ghtk::accept::run_suite("all", opts);
    std::fputs(ghtk::accept::report_to_text(results).c_str(), stdout);

    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;
    return all_pass ? 0 : 1;
}

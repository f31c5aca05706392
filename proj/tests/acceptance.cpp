// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "invg/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    int failures = 0;
    const auto run = [&](int id) {
        const auto r = invg::run_criterion(id);
        std::printf("%s criterion %2d: %s (%.1fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failures += !r.pass;
    };
    if (ids.empty())
        for (int id = 1; id <= invg::kCriteriaCount; ++id) run(id);
    else
        for (int id : ids) run(id);
    std::printf("%d of %zu criteria failed\n", failures, ids.empty() ? std::size_t{invg::kCriteriaCount} : ids.size());
    return failures == 0 ? 0 : 1;
}

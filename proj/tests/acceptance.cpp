// One line per acceptance criterion. Exit status is non-zero if any fails.

#include <pcanon/verify.hpp>

#include <cstdio>

int main() {
    using namespace pcanon::verify;
    Options opt;
    opt.seed = kDefaultSeed;
    opt.random_cases = 10'000;
    const auto results = run_suite(Suite::All, opt);
    int failed = 0;
    int index = 0;
    for (const auto& r : results) {
        std::printf("[%d] %s\n", ++index, format_result(r).c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}

#pragma once

// Exhaustive and randomized self-checks. Each check compares a canonical-form
// algorithm or decider against the brute-force orbit oracle (or, where no
// finite model exists, against randomized group actions) and reports one
// line. Shared by the acceptance test and `pcanon verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcanon::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0;  // wall-clock allowance, part of `passed`
};

enum class Suite { All, Equiv, Congr, Parabolic, Census, Field };

/// "all", "equiv", "congr", "parabolic", "census", "field"; throws Parse.
[[nodiscard]] Suite parse_suite(std::string_view name);

inline constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;                 // oracle threads, 0 = OpenMP default
    std::size_t random_cases = 10'000;
};

[[nodiscard]] CheckResult check_equivalence_oracle(const Options& opt);
[[nodiscard]] CheckResult check_u_congruence_oracle(const Options& opt);
[[nodiscard]] CheckResult check_alternating_b_congruence(const Options& opt);
[[nodiscard]] CheckResult check_char2_congruence(const Options& opt);
[[nodiscard]] CheckResult check_tower_symmetric(const Options& opt);
[[nodiscard]] CheckResult check_parabolic_equivalence(const Options& opt);
[[nodiscard]] CheckResult check_parabolic_congruence(const Options& opt);
[[nodiscard]] CheckResult check_recurrences(const Options& opt);
[[nodiscard]] CheckResult check_fields(const Options& opt);

[[nodiscard]] std::vector<CheckResult> run_suite(Suite suite, const Options& opt);

/// "PASS  name  (1.23 s / 120 s)  detail"
[[nodiscard]] std::string format_result(const CheckResult& r);

}  // namespace pcanon::verify

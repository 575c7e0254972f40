#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "artin/chars/group_table.hpp"
#include "artin/curves/registry.hpp"
#include "artin/frobenius/s4_field.hpp"
#include "artin/harness/config.hpp"
#include "artin/harness/report.hpp"
#include "artin/satotate/moments.hpp"

namespace artin {

/// Loaded data shared by the checks of one run; fields L, L' and the moment samples are
/// computed on first use.
class Context {
public:
    /// Validates the config and loads everything; ConfigError on any data problem.
    explicit Context(RunConfig cfg);

    const RunConfig& config() const { return cfg_; }
    const GroupLibrary& lib() const { return lib_; }
    const Registry& registry() const { return reg_; }
    const S4Field& field();
    const S4Field& field2();
    const std::vector<PrimeSample>& moment_samples();

private:
    RunConfig cfg_;
    GroupLibrary lib_;
    Registry reg_;
    std::optional<S4Field> f_, f2_;
    std::optional<std::vector<PrimeSample>> samples_;
};

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0;
    std::string reproducer;
    std::vector<Record> records;  // per-item data written next to the summary
};

struct CheckDef {
    std::string id;  // AC1 .. AC13
    std::string title;
    double time_limit = 0;  // seconds, 0 = none
    std::function<void(Context&, CheckResult&)> run;
};

/// All acceptance checks in numeric order.
const std::vector<CheckDef>& acceptance_checks();
const CheckDef& acceptance_check(const std::string& id);

/// Runs one check, timing it and turning library errors into a failure.
CheckResult run_check(Context& ctx, const CheckDef& def);

/// Single command that reruns check `id` with this config.
std::string reproducer(const RunConfig& cfg, const std::string& id);

struct VerifyOutcome {
    std::vector<CheckResult> results;
    int exit_code = 0;  // 0 all pass, 1 some check failed
};

inline constexpr const char* kTwistGate = "AC2";

/// The twist gate first, then the remaining checks in order (restricted to `only` when
/// non-empty). A failed gate skips everything after it. Writes per-check JSON and a summary
/// under cfg.out_dir when set. ConfigError propagates.
VerifyOutcome verify_paper(const RunConfig& cfg, const std::vector<std::string>& only = {},
                           std::ostream* log = nullptr);

std::string summary_line(const CheckResult& r);

}  // namespace artin

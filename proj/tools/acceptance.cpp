// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <iostream>

#include "CLI11.hpp"

#include "artin/error.hpp"
#include "artin/harness/checks.hpp"

using namespace artin;

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    std::vector<std::string> only;
    unsigned workers = 0;
    app.add_option("--only", only, "criterion ids, e.g. AC7");
    app.add_option("--workers", workers, "worker threads, 0 = all cores");
    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = default_config();
        cfg.workers = workers;
        Context ctx(cfg);
        int failed = 0, ran = 0;
        for (const auto& def : acceptance_checks()) {
            if (!only.empty() && std::find(only.begin(), only.end(), def.id) == only.end()) continue;
            const auto r = run_check(ctx, def);
            std::cout << summary_line(r) << std::endl;
            ++ran;
            failed += !r.pass;
        }
        if (ran == 0) {
            std::cerr << "no criterion matched --only\n";
            return 2;
        }
        std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
        return failed ? 1 : 0;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
}

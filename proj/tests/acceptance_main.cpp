// Acceptance suite: runs each top-level criterion and prints one line per
// criterion. Exits nonzero when any criterion fails. The first argument is
// the path of the command-line tool (used by the determinism criterion).

#include <cstdio>
#include <string>

#include "ordcalc/checks.hpp"

int main(int argc, char** argv) {
    std::string tool = argc > 1 ? argv[1] : "";
    const char* criteria[] = {
        "finite-oracle", // 1: brute-force oracles over all posets on <= 5 points
        "hierarchy",     // 2: level bounds under inverses and finite restrictions
        "examples",      // 3: the L0..L3 / L attribute table
        "remark",        // 4: kappa beside a countable antichain
        "condense",      // 5: condensation vs scatteredness, rank vs iteration
        "densegen",      // 6: saturation, star property, back and forth
        "sampler",       // 7: sampler soundness across the catalog
        "determinism",   // 8: byte-identical reports
    };
    bool all_pass = true;
    int idx = 1;
    for (const char* name : criteria) {
        ordcalc::CheckResult r = ordcalc::run_check(name, tool);
        std::printf("[%s] criterion %d (%s), %.2fs\n", r.pass ? "PASS" : "FAIL", idx, name,
                    r.seconds);
        if (!r.pass) {
            std::size_t shown = 0;
            for (const auto& f : r.failures) {
                if (++shown > 5) {
                    std::printf("    ... %zu more\n", r.failures.size() - 5);
                    break;
                }
                std::printf("    %s\n", f.c_str());
            }
        }
        all_pass = all_pass && r.pass;
        ++idx;
    }
    return all_pass ? 0 : 1;
}

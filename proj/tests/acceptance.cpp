// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Optional arguments select criteria by id or number.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "syl/suites.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> wanted(argv + 1, argv + argc);
    auto selected = [&](const syl::suites::SuiteEntry& e) {
        if (wanted.empty()) return true;
        for (const auto& w : wanted)
            if (e.matches(w)) return true;
        return false;
    };

    int failures = 0, ran = 0;
    for (const auto& e : syl::suites::registry()) {
        if (!selected(e)) continue;
        ++ran;
        const auto r = syl::suites::run_timed(e, syl::suites::kDefaultSeed);
        std::printf("[%s] %2d %-14s %8.2fs  %s\n", r.passed ? "PASS" : "FAIL", e.criterion, e.id.c_str(), r.seconds,
                    r.title.c_str());
        for (const auto& m : r.metrics)
            std::printf("        %s %-45s %.6g  (%s)\n", m.ok ? " " : "!", m.name.c_str(), m.value, m.limit.c_str());
        if (!r.note.empty()) std::printf("          %s\n", r.note.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%d criteria passed\n", ran - failures, ran);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

#include "qck/suites.hpp"

#include <cstdio>
#include <exception>

int main()
{
    int failed = 0;
    for (int id = 1; id <= static_cast<int>(qck::suite_names().size()); ++id) {
        qck::SuiteResult r;
        try {
            r = qck::run_suite(id);
        } catch (const std::exception& e) {
            std::printf("criterion %d: FAIL %s (%s)\n", id, qck::suite_names()[id - 1].c_str(), e.what());
            ++failed;
            continue;
        }
        std::printf("criterion %d: %s %s (%zu cases, %zu failures, %.2fs of %.0fs)\n", id, r.pass() ? "PASS" : "FAIL",
                    r.name.c_str(), r.cases, r.failures, r.seconds, r.limit);
        for (const auto& n : r.notes)
            std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        failed += !r.pass();
    }
    return failed == 0 ? 0 : 1;
}

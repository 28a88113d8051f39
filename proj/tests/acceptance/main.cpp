// Prints one PASS/FAIL line per acceptance criterion. Exit status is nonzero
// only with --strict and at least one failure.
#include <cstdio>
#include <cstring>

#include "criteria.hpp"

int main(int argc, char** argv) {
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    int failed = 0;
    auto res = acceptance::run_all([&](const acceptance::Outcome& o) {
        std::printf("%s\n", acceptance::format_line(o).c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    });
    std::printf("%zu criteria, %d passed, %d failed\n", res.size(), int(res.size()) - failed, failed);
    return strict && failed ? 1 : 0;
}

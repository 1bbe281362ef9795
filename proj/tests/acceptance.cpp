// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure.  Usage: acceptance [--level quick|full]
#include <cstring>
#include <iostream>

#include "hopflab/suite.hpp"

int main(int argc, char** argv) {
    hopflab::SuiteLevel level = hopflab::SuiteLevel::full;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--level") == 0 && i + 1 < argc) {
            ++i;
            if (std::strcmp(argv[i], "quick") == 0) level = hopflab::SuiteLevel::quick;
        }
    }
    auto results = hopflab::run_suite(level, std::cout);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

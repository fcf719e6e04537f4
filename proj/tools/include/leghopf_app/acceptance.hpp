#pragma once

// The eight acceptance criteria, shared by `leghopf selfcheck` and the
// acceptance test binary.

#include <string>
#include <vector>

namespace leghopf::acceptance {

struct Result {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;   // counts, notes, or the first failures
    double seconds = 0;
};

Result criterion(int id);  // 1..8
std::vector<Result> run_all();

// "PASS  3  lutz diagrams ... (0.001 s) detail"
std::string line(const Result& r);

} // namespace leghopf::acceptance

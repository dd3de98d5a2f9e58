#ifndef KD_VERIFY_HPP
#define KD_VERIFY_HPP

#include <string>
#include <vector>

namespace kd {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs criterion `id` (1..10), or all of them when id == 0.
std::vector<CriterionResult> run_acceptance(int id = 0);

// Prints one PASS/FAIL line per criterion; returns true when all pass.
bool report_acceptance(const std::vector<CriterionResult>& results);

}  // namespace kd

#endif

#pragma once
#include <string>
#include <utility>
#include <vector>

#include "qkz/lemmas.hpp"

namespace qkz {

// Check groups runnable from the command line. Every suite keeps going after
// a failure and returns one CheckResult per verified statement.
const std::vector<std::string>& verify_suite_names();

// name must come from verify_suite_names(); anything else is an
// std::invalid_argument. max_n bounds the strip half-size; members with
// hard resource guards clamp themselves further. jobs parallelizes the
// heavy builds without affecting the results.
std::vector<CheckResult> run_suite(const std::string& name, int max_n, int jobs = 1);

struct VerifyReport {
    std::vector<std::pair<std::string, std::vector<CheckResult>>> suites;
    bool all_ok() const;
};

// Empty names means every suite, in canonical order. Duplicates collapse.
VerifyReport run_suites(std::vector<std::string> names, int max_n, int jobs = 1);

}

/**
 * @file checks.hpp
 * @brief Seeded property-check suites over a fixed catalog of group
 *        descriptors. Each suite samples reproducibly from a given seed and
 *        verifies structural invariants of the corresponding module; the
 *        CLI `check` command and the acceptance runner are thin wrappers.
 */
#pragma once

#include "ordval/classify.hpp"
#include "ordval/parse.hpp"

#include <cstdint>

namespace ordval {

struct CheckOptions {
    std::uint64_t seed = 0x5EED;
    long trials = 1000;
    long primeBound = 50;
};

struct CheckResult {
    std::string suite;
    long assertions = 0;   // individual verified facts
    bool passed = false;
    std::string detail;    // first failure description, or a summary
};

/// Named descriptors exercised by every catalog-exhaustive suite.
const std::vector<std::pair<std::string, GroupDescriptor>>& descriptorCatalog();

/// Suite names accepted by runSuite: examples, groups, prop39, thm45,
/// lemma415, series, classify, parse, all.
const std::vector<std::string>& suiteNames();

/// Runs one suite (or "all"). Unknown names throw std::invalid_argument.
CheckResult runSuite(const std::string& name, const CheckOptions& opts);

std::string checkResultLine(const CheckResult& r);

}  // namespace ordval

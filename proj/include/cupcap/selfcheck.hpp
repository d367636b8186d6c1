#pragma once

#include "cupcap/convexify.hpp"
#include "cupcap/geometry.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cupcap {

struct CheckOptions {
    std::uint64_t seed = 424242;
    std::size_t trials = 100;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> notes; // deterministic, sorted where order is not inherent
    bool ok() const { return failed == 0; }
};

// The six property suites behind `check`. Each derives per-trial
// sub-seeds from (seed, index), so summaries are byte-stable for a seed.
SuiteResult check_partition(const CheckOptions& opt);
SuiteResult check_extension(const CheckOptions& opt);
SuiteResult check_resolver(const CheckOptions& opt);
SuiteResult check_pipeline(const CheckOptions& opt);
SuiteResult check_oracles(const CheckOptions& opt);
SuiteResult check_bounds(const CheckOptions& opt);

std::vector<SuiteResult> run_all_checks(const CheckOptions& opt);
std::string summarize(const std::vector<SuiteResult>& results);

// Support surface reused by the resolver suite, the pipeline suite and
// the test binaries.
namespace testgen {

enum class CaseTarget { A1, A2, A3, B1, B2, C, D, Shortcut1, Shortcut2 };

const char* case_label(const Certificate& base_cert, CaseTarget target);

// External (B, (n-1)-cup) pair that drives `cert` into the given case of
// its bottom base analysis. Retries internally with shrinking offsets;
// throws InternalFailure if no attempt passes joint validation.
std::pair<PointSet, Chain> build_case(const Certificate& cert, int n, CaseTarget target);

// Random external pair meeting resolve's preconditions (any case).
std::pair<PointSet, Chain> build_random(const Certificate& cert, int n, std::uint64_t seed);

// 15-point hosts that force find_certificate(., 5, 5) into an upper or
// lower lift: a cup/cap-free main block plus a far cluster that pins
// every main-block point's minimum-angle partner.
PointSet lift_host(bool upper);

// Resolver-suite tally: label fragment -> count.
using Coverage = std::map<std::string, std::size_t>;

} // namespace testgen

} // namespace cupcap

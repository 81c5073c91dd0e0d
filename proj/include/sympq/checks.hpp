#ifndef SYMPQ_CHECKS_HPP
#define SYMPQ_CHECKS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympq/partitions.hpp"
#include "sympq/rational.hpp"

namespace sympq {

// Bounds for verify suites and sweeps. Unset fields (-1) take the suite's
// default.
struct SuiteOptions {
    int max_weight = -1;
    int n = -1;
    int r = -1;
    int max_mu = -1;
    int max_r = -1;
    int order = -1;
    int points = -1;
    int trials = -1;
    std::vector<int> ns;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<std::string> instance;  // run only the instance with this label
};

struct Failure {
    std::string instance;
    std::string detail;
    std::string replay;
};

struct Report {
    std::string kind;  // "verify" or "sweep"
    std::string name;
    std::vector<std::pair<std::string, std::vector<int>>> bounds;  // flag -> value(s)
    long instances = 0;
    long checks = 0;
    std::vector<Failure> failures;
    std::uint64_t seed = 0;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
    std::string status() const { return ok() ? "verified-to-bound" : "failed"; }
};

std::vector<std::string> verify_suites();
std::vector<std::string> sweep_ids();  // "1", "2", "3a", "3b", "4"

// Throws DomainError for unknown names or bounds beyond the desk-scale
// limits.
Report run_verify(const std::string& theorem, const SuiteOptions& opt);
Report run_sweep(const std::string& conjecture, const SuiteOptions& opt);

std::string format_expansion(const std::map<StrictPartition, Rational>& coeffs, const std::string& symbol);
std::string format_expansion(const std::map<Partition, Rational>& coeffs, const std::string& symbol);

}  // namespace sympq

#endif

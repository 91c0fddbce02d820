#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgen/rational.hpp"

namespace qgen {

enum class Suite { expansion, qderiv, qadd, convolution, rubin, gamma, zeta, limits };

const char* suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

// Classical Genocchi numbers G_1..G_12, the frozen reference for every
// q -> 1 limit check. G_0 = 0.
Rational classical_genocchi_number(unsigned n);

struct VerifyConfig {
    std::vector<Suite> suites;
    std::vector<Rational> q_list;
    unsigned max_n = 10;
    std::vector<unsigned> alpha_list;
    std::string output_path;  // empty: stdout only
    unsigned precision_bits = 128;
};

// status: "pass" | "fail" | "reported"; reported entries are non-asserted
// claims (the printed T_q bracket, Theorem-2.13 ratios at q != 1) and never
// affect the exit code.
struct CheckRecord {
    std::string suite;
    std::string params;
    std::string status;
    std::string lhs;
    std::string rhs;
    std::string notes;
};

struct VerifyReport {
    std::vector<CheckRecord> records;  // sorted by (suite, params)
    unsigned long passed = 0;
    unsigned long failed = 0;
    unsigned long reported = 0;
};

// Runs every configured (suite, q, n, alpha) tuple exactly once. Throws
// DomainError on an invalid configuration.
VerifyReport run_verify(const VerifyConfig& config);

std::string report_to_json(const VerifyReport& report);

}  // namespace qgen

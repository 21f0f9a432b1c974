#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "metaplus/scalars.hpp"

namespace metaplus {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteConfig {
    std::vector<int> primes{2, 3, 5, 7};
    std::map<int, int> precision;  // 0 or absent: default_precision(p)
    std::vector<cplx> s_grid;      // empty: default_s_grid()
    double tol_numeric = 1e-9;
    double tol_fine = 1e-12;
    int truncation = 200;
    int k = 6;
    int samples = 200;
    std::uint64_t seed = 0;
    bool timing = false;

    int precision_for(int p) const;
    std::vector<cplx> grid() const;
    void validate() const;  // throws ConfigError
};

struct CaseResult {
    std::string suite;
    std::string name;
    std::string anchor;
    std::string status;  // "pass", "fail" or "error"
    std::string lhs, rhs;
    double tol = 0;  // 0: exact
    std::string counterexample;
    double ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    std::size_t failures() const;
};

const std::vector<std::string>& suite_names();
// Empty selectors run every suite.  A suite that throws reports a single "error" case.
std::vector<SuiteReport> run(const std::vector<std::string>& selectors, const SuiteConfig& cfg);
bool all_passed(const std::vector<SuiteReport>& reports);

std::string emit_json(const std::vector<SuiteReport>& reports);
std::string emit_text(const std::vector<SuiteReport>& reports);

// JSON object with keys primes, precision, s_grid, tolerances, trunc, k, samples, seed.
SuiteConfig parse_config(const std::string& text, SuiteConfig base = {});
SuiteConfig load_config(const std::string& path, SuiteConfig base = {});
// "0.25+0.6i", "-0.3", "1i"
cplx parse_complex(const std::string& text);

}  // namespace metaplus

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qortho {

/// Bounds and numeric parameters for a verification run.
struct SuiteOptions {
    int upto = 10;                      // exact-identity index bound
    std::vector<mpq_class> q_values = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4)};
    double tol = 1e-6;
    int trunc = 60;
    int threads = 0;  // 0: decide from QORTHO_THREADS / hardware
};

struct CheckRecord {
    std::string id;      // suite-qualified check id, e.g. "askey_wilson/eq_6_21"
    std::string tag;     // equation tag(s) the check certifies
    bool pass = false;
    std::string detail;  // residual description or failure note
    double ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> records;
    bool pass = false;
    double total_ms = 0.0;
};

const std::vector<std::string>& suite_names();  // includes "all"
bool is_suite_name(const std::string& name);

/// Runs every check of the suite (checks are independent and may execute on
/// several threads; the report order is fixed by check id).
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qortho

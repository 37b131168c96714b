#ifndef DISTIDEAL_VERIFY_HPP
#define DISTIDEAL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace di {

enum class CheckStatus { Pass, Fail, Error };

struct CheckRecord {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::Pass;
    std::string details;
};

struct Report {
    std::string command;
    std::vector<CheckRecord> records;
    double wall_seconds = 0;

    int passes() const;
    int failures() const;
    int errors() const;
    bool ok() const { return failures() == 0 && errors() == 0; }

    void add(const std::string& name, const std::string& params, bool pass,
             const std::string& details = "");
    void add_error(const std::string& name, const std::string& params,
                   const std::string& details);
    /// Sorts records canonically so parallel runs emit identical reports.
    void finalize();

    std::string to_text() const;
    std::string to_json() const;
};

struct VerifyOptions {
    int n_max = 4;
    int threads = 1;
    uint64_t seed = 0;
    bool progress = false;  // progress notes on stderr
};

Report verify_theorem_equi(const VerifyOptions& opt);    // n_max 4 default, 5 opt-in
Report verify_eval_consistency(const VerifyOptions& opt);
Report verify_circuit_snf(const VerifyOptions& opt);     // n_max up to 12
Report verify_lambda_ideals(const VerifyOptions& opt);
Report verify_conjecture(const VerifyOptions& opt);      // n_max up to 8
Report verify_diameter_lemma(const VerifyOptions& opt);
Report verify_pattern_lemmas(const VerifyOptions& opt);

Report run_verify_suite(const std::string& suite, const VerifyOptions& opt);
std::vector<std::string> verify_suite_names();

}  // namespace di

#endif

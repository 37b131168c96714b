#include "distideal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "distideal/family.hpp"
#include "distideal/ideal.hpp"
#include "distideal/pattern.hpp"
#include "json.hpp"

namespace di {

int Report::passes() const {
    int c = 0;
    for (const auto& r : records) c += r.status == CheckStatus::Pass;
    return c;
}

int Report::failures() const {
    int c = 0;
    for (const auto& r : records) c += r.status == CheckStatus::Fail;
    return c;
}

int Report::errors() const {
    int c = 0;
    for (const auto& r : records) c += r.status == CheckStatus::Error;
    return c;
}

void Report::add(const std::string& name, const std::string& params, bool pass,
                 const std::string& details) {
    records.push_back({name, params, pass ? CheckStatus::Pass : CheckStatus::Fail, details});
}

void Report::add_error(const std::string& name, const std::string& params,
                       const std::string& details) {
    records.push_back({name, params, CheckStatus::Error, details});
}

void Report::finalize() {
    std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tie(a.name, a.params) < std::tie(b.name, b.params);
    });
}

namespace {

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        default: return "ERROR";
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << "# " << command << "\n";
    for (const auto& r : records) {
        os << status_str(r.status) << "  " << r.name;
        if (!r.params.empty()) os << " [" << r.params << "]";
        if (!r.details.empty()) os << "  -- " << r.details;
        os << "\n";
    }
    os << "summary: " << passes() << " passed, " << failures() << " failed, " << errors()
       << " errors (" << wall_seconds << " s)\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["wall_seconds"] = wall_seconds;
    j["summary"] = {{"pass", passes()}, {"fail", failures()}, {"error", errors()}};
    j["records"] = nlohmann::json::array();
    for (const auto& r : records)
        j["records"].push_back({{"name", r.name},
                                {"params", r.params},
                                {"status", status_str(r.status)},
                                {"details", r.details}});
    return j.dump(2);
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct EnumOutcome {
    uint64_t total = 0;
    uint64_t failures = 0;
    std::string first_failure;
};

/// Runs check over every labeled strong digraph on n vertices, splitting the
/// arc-bitmask space over threads. check returning false is a failure.
EnumOutcome enumerate_check(int n, int threads,
                            const std::function<bool(const Digraph&)>& check) {
    threads = std::max(1, threads);
    const uint64_t space = labeled_digraph_count(n);
    const uint64_t chunk = (space + threads - 1) / threads;
    EnumOutcome merged;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const uint64_t lo = std::min(space, uint64_t(t) * chunk);
        const uint64_t hi = std::min(space, lo + chunk);
        if (lo >= hi) continue;
        pool.emplace_back([&, lo, hi]() {
            EnumOutcome local;
            for_each_strong_in_range(n, lo, hi, [&](const Digraph& g) {
                ++local.total;
                if (!check(g)) {
                    ++local.failures;
                    if (local.first_failure.empty()) {
                        std::string desc = format_digraph(g);
                        std::replace(desc.begin(), desc.end(), '\n', ' ');
                        local.first_failure = desc;
                    }
                }
            });
            std::lock_guard<std::mutex> lock(mu);
            merged.total += local.total;
            merged.failures += local.failures;
            if (merged.first_failure.empty()) merged.first_failure = local.first_failure;
        });
    }
    for (auto& th : pool) th.join();
    return merged;
}

void add_enum_record(Report& report, const std::string& name, int n,
                     const EnumOutcome& out) {
    std::ostringstream details;
    details << out.total << " strong digraphs";
    if (out.failures)
        details << ", " << out.failures << " failing, first: " << out.first_failure;
    report.add(name, "n=" + std::to_string(n), out.failures == 0, details.str());
}

std::string snf_str(const SnfResult& r) {
    std::ostringstream os;
    for (size_t i = 0; i < r.diagonal.size(); ++i) {
        if (i) os << ",";
        os << r.diagonal[i];
    }
    return os.str();
}

Digraph digraph_from_mask(int n, uint64_t mask) {
    std::vector<Arc> arcs;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((mask >> bit) & 1ull) arcs.emplace_back(u, v);
            ++bit;
        }
    return from_arc_list(n, arcs);
}

void note_progress(const VerifyOptions& opt, const std::string& msg) {
    if (opt.progress) std::cerr << msg << std::endl;
}

}  // namespace

Report verify_theorem_equi(const VerifyOptions& opt) {
    Timer timer;
    Report report;
    report.command = "verify theorem-equi";
    const int n_max = std::min(opt.n_max, 5);
    for (int n = 2; n <= n_max; ++n) {
        note_progress(opt, "theorem-equi: n=" + std::to_string(n));
        EnumOutcome out = enumerate_check(n, opt.threads, [](const Digraph& g) {
            const bool pattern_free = is_forbidden_pattern_free(g);
            const bool one_trivial = !second_ideal_trivial(distance_table(g));
            const bool in_family = classify(g).tag != FamilyTag::NotMember;
            return pattern_free == one_trivial && one_trivial == in_family;
        });
        add_enum_record(report, "theorem-equi-three-way", n, out);
    }
    report.wall_seconds = timer.seconds();
    report.finalize();
    return report;
}

Report verify_eval_consistency(const VerifyOptions& opt) {
    Timer timer;
    Report report;
    report.command = "verify eval-consistency";

    auto check_digraph = [](const Digraph& g) -> bool {
        const int n = g.order();
        BigMatrix d = distance_matrix(g, MatrixKind::D);
        SnfResult snf = smith_normal_form(d);
        std::vector<mpz_class> zeros(n, 0);
        mpz_class invariant_product = 1;
        for (int i = 1; i <= n; ++i) {
            invariant_product *= snf.diagonal[i - 1];
            mpz_class delta = gcd_of_minors(d, i);
            mpz_class evaluated = evaluate_ideal(distance_ideal(g, i), zeros);
            if (evaluated != delta || delta != invariant_product) return false;
        }
        return true;
    };

    const int exhaustive_max = std::min(opt.n_max, 4);
    for (int n = 2; n <= exhaustive_max; ++n) {
        note_progress(opt, "eval-consistency: n=" + std::to_string(n));
        add_enum_record(report, "eval-consistency-exhaustive", n,
                        enumerate_check(n, opt.threads, check_digraph));
    }

    // Seeded random spot checks at n = 5 and 6.
    std::mt19937_64 rng(opt.seed);
    for (int n : {5, 6}) {
        note_progress(opt, "eval-consistency: random n=" + std::to_string(n));
        const int trials = 50;
        int failures = 0;
        std::string first;
        std::uniform_int_distribution<uint64_t> dist(0, labeled_digraph_count(n) - 1);
        for (int t = 0; t < trials; ++t) {
            Digraph g;
            do {
                g = digraph_from_mask(n, dist(rng));
            } while (!is_strong(g));
            if (!check_digraph(g)) {
                ++failures;
                if (first.empty()) {
                    first = format_digraph(g);
                    std::replace(first.begin(), first.end(), '\n', ' ');
                }
            }
        }
        std::ostringstream details;
        details << trials << " random strong digraphs, seed " << opt.seed;
        if (failures) details << ", " << failures << " failing, first: " << first;
        report.add("eval-consistency-random", "n=" + std::to_string(n), failures == 0,
                   details.str());
    }

    // Second invariant factor f_2 = 1 for every strong digraph with n >= 2.
    for (int n = 2; n <= std::min(opt.n_max + 1, 5); ++n) {
        note_progress(opt, "second-invariant-factor: n=" + std::to_string(n));
        EnumOutcome out = enumerate_check(n, opt.threads, [](const Digraph& g) {
            SnfResult snf = smith_normal_form(distance_matrix(g, MatrixKind::D));
            return snf.diagonal.size() >= 2 && snf.diagonal[1] == 1;
        });
        add_enum_record(report, "second-invariant-factor", n, out);
    }

    report.wall_seconds = timer.seconds();
    report.finalize();
    return report;
}

Report verify_circuit_snf(const VerifyOptions& opt) {
    Timer timer;
    Report report;
    report.command = "verify circuit-snf";
    const int n_max = std::max(opt.n_max, 12);
    for (int n = 3; n <= n_max; ++n) {
        SnfResult computed = smith_normal_form(distance_matrix(circuit(n), MatrixKind::D));
        SnfResult closed = snf_circuit(n);
        report.add("circuit-snf", "n=" + std::to_string(n), computed == closed,
                   "computed " + snf_str(computed) + " vs closed form " + snf_str(closed));
    }
    report.wall_seconds = timer.seconds();
    report.finalize();
    return report;
}

Report verify_lambda_ideals(const VerifyOptions& opt) {
    Timer timer;
    Report report;
    report.command = "verify lambda-ideals";

    // SNF theorems for Lambda(a,b,0,1) and Lambda(a,1,0,d).
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 4; ++b) {
            SnfResult computed =
                smith_normal_form(distance_matrix(lambda({a, b, 0, 1}), MatrixKind::D));
            SnfResult closed = snf_lambda_ab01(a, b);
            std::ostringstream params;
            params << "a=" << a << " b=" << b;
            report.add("lambda-ab01-snf", params.str(), computed == closed,
                       "computed " + snf_str(computed) + " vs " + snf_str(closed));
        }
    for (int a = 0; a <= 3; ++a)
        for (int d = 2; d <= 4; ++d) {
            SnfResult computed =
                smith_normal_form(distance_matrix(lambda({a, 1, 0, d}), MatrixKind::D));
            SnfResult closed = snf_lambda_a10d(a, d);
            std::ostringstream params;
            params << "a=" << a << " d=" << d;
            report.add("lambda-a10d-snf", params.str(), computed == closed,
                       "computed " + snf_str(computed) + " vs " + snf_str(closed));
        }

    auto compare = [&](const std::string& name, const std::string& params,
                       const ClosedFormIdeal& closed, const Ideal& from_minors, int n) {
        try {
            bool equal = ideals_equal(closed.in_digraph_context(n), from_minors);
            report.add(name, params, equal);
        } catch (const std::exception& e) {
            report.add_error(name, params, e.what());
        }
    };

    note_progress(opt, "lambda-ideals: complete graphs");
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            compare("complete-ideal", "n=" + std::to_string(n) + " k=" + std::to_string(k),
                    ideal_complete(n, k), distance_ideal(complete(n), k), n);

    note_progress(opt, "lambda-ideals: stars");
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= m + 1; ++k)
            compare("star-ideal", "m=" + std::to_string(m) + " k=" + std::to_string(k),
                    ideal_star(m, k), distance_ideal(complete_bipartite(m, 1), k), m + 1);

    note_progress(opt, "lambda-ideals: Lambda(a,b,0,1)");
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b)
            for (int k = 1; k <= a + b + 1; ++k) {
                std::ostringstream params;
                params << "a=" << a << " b=" << b << " k=" << k;
                compare("lambda-ab01-ideal", params.str(), ideal_lambda_ab01(a, b, k),
                        distance_ideal(lambda({a, b, 0, 1}), k), a + b + 1);
            }

    note_progress(opt, "lambda-ideals: Lambda(a,1,0,d)");
    for (int a = 0; a <= 3; ++a)
        for (int d = 1; a + d <= 4; ++d)
            for (int k = 1; k <= a + d + 1; ++k) {
                std::ostringstream params;
                params << "a=" << a << " d=" << d << " k=" << k;
                compare("lambda-a10d-ideal", params.str(), ideal_lambda_a10d(a, d, k),
                        distance_ideal(lambda({a, 1, 0, d}), k), a + d + 1);
            }

    note_progress(opt, "lambda-ideals: second ideal case table");
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; a + b + c <= 5; ++c)
                for (int d = 0; a + b + c + d <= 5; ++d) {
                    LambdaParams p{a, b, c, d};
                    if (p.order() < 2) continue;
                    Digraph g = lambda(p);
                    if (!is_strong(g)) continue;
                    std::ostringstream params;
                    params << "a=" << a << " b=" << b << " c=" << c << " d=" << d;
                    compare("lambda-second-ideal", params.str(), second_ideal_lambda(p),
                            distance_ideal(g, 2), p.order());
                }

    note_progress(opt, "lambda-ideals: circuit third ideal");
    for (int n : {5, 6, 7})
        compare("circuit-third-ideal", "n=" + std::to_string(n), third_ideal_circuit(n),
                distance_ideal(circuit(n), 3), n);

    report.wall_seconds = timer.seconds();
    report.finalize();
    return report;
}

Report verify_conjecture(const VerifyOptions& opt) {
    Timer timer;
    Report report;
    report.command = "verify conjecture";
    const int n_max = std::min(std::max(opt.n_max, 6), 8);
    for (int n = 6; n <= n_max; ++n)
        for (int k = 4; k <= n - 2; ++k) {
            std::ostringstream params;
            params << "n=" << n << " k=" << k;
            try {
                bool equal = ideals_equal(conjectured_univariate_circuit(n, k).as_ideal(),
                                          univariate_distance_ideal(circuit(n), k));
                report.add("conjectured-univariate-circuit", params.str(), equal,
                           "evidence only, not a theorem");
            } catch (const std::exception& e) {
                report.add_error("conjectured-univariate-circuit", params.str(), e.what());
            }
        }
    for (int n = 3; n <= 12; ++n) {
        CirculantCheckReport check = circulant_det_check(n);
        std::ostringstream details;
        details << "max relative deviation " << check.max_deviation;
        report.add("circulant-determinant-check", "n=" + std::to_string(n), check.pass,
                   details.str());
    }
    report.wall_seconds = timer.seconds();
    report.finalize();
    return report;
}

Report verify_diameter_lemma(const VerifyOptions& opt) {
    Timer timer;
    Report report;
    report.command = "verify diameter-lemma";
    const int n_max = std::min(opt.n_max + 1, 5);
    for (int n = 4; n <= n_max; ++n) {
        note_progress(opt, "diameter-lemma: n=" + std::to_string(n));
        EnumOutcome out = enumerate_check(n, opt.threads, [](const Digraph& g) {
            auto dist = distance_table(g);
            int diam = 0;
            for (const auto& row : dist)
                for (int v : row) diam = std::max(diam, v);
            if (diam < 3) return true;
            return second_ideal_trivial(dist) &&
                   contains_pattern(g, builtin_pattern(BuiltinPattern::F1)).has_value();
        });
        add_enum_record(report, "diameter-ge3-forces-f1-and-trivial-second-ideal", n, out);
    }
    report.wall_seconds = timer.seconds();
    report.finalize();
    return report;
}

Report verify_pattern_lemmas(const VerifyOptions& opt) {
    Timer timer;
    Report report;
    report.command = "verify pattern-lemmas";
    const int n_max = std::min(opt.n_max + 1, 5);
    const std::vector<std::pair<std::string, Pattern>> patterns = {
        {"F2", builtin_pattern(BuiltinPattern::F2)},
        {"F3", builtin_pattern(BuiltinPattern::F3)},
        {"F4", builtin_pattern(BuiltinPattern::F4)},
        {"F5", builtin_pattern(BuiltinPattern::F5)},
    };
    for (const auto& [name, pattern] : patterns)
        for (int n = 3; n <= n_max; ++n) {
            note_progress(opt, "pattern-lemmas: " + name + " n=" + std::to_string(n));
            EnumOutcome out = enumerate_check(n, opt.threads, [&](const Digraph& g) {
                auto dist = distance_table(g);
                int diam = 0;
                for (const auto& row : dist)
                    for (int v : row) diam = std::max(diam, v);
                if (diam > 2) return true;
                if (!contains_pattern(g, pattern)) return true;
                return second_ideal_trivial(dist);
            });
            add_enum_record(report, "diam-le2-" + name + "-forces-trivial-second-ideal", n,
                            out);
        }
    report.wall_seconds = timer.seconds();
    report.finalize();
    return report;
}

Report run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "theorem-equi") return verify_theorem_equi(opt);
    if (suite == "eval-consistency") return verify_eval_consistency(opt);
    if (suite == "circuit-snf") return verify_circuit_snf(opt);
    if (suite == "lambda-ideals") return verify_lambda_ideals(opt);
    if (suite == "conjecture") return verify_conjecture(opt);
    if (suite == "diameter-lemma") return verify_diameter_lemma(opt);
    if (suite == "pattern-lemmas") return verify_pattern_lemmas(opt);
    if (suite == "all") {
        Timer timer;
        Report merged;
        merged.command = "verify all";
        for (const auto& name : verify_suite_names()) {
            if (name == "all") continue;
            Report r = run_verify_suite(name, opt);
            merged.records.insert(merged.records.end(), r.records.begin(), r.records.end());
        }
        merged.wall_seconds = timer.seconds();
        merged.finalize();
        return merged;
    }
    throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<std::string> verify_suite_names() {
    return {"theorem-equi",  "eval-consistency", "circuit-snf", "lambda-ideals",
            "conjecture",    "diameter-lemma",   "pattern-lemmas", "all"};
}

}  // namespace di

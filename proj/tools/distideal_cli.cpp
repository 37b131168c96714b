#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "distideal.h"

namespace {

struct DigraphInput {
    std::string file;        // path to a digraph text file, "-" for stdin
    std::string circuit;     // n
    std::string complete;    // n
    std::string bipartite;   // m,n
    std::string lambda;      // a,b,c,d
};

void add_digraph_options(CLI::App* cmd, DigraphInput& in) {
    auto* file = cmd->add_option("--file,-f", in.file,
                                 "digraph text file ('-' for stdin)");
    auto* circ = cmd->add_option("--circuit", in.circuit, "circuit on n vertices");
    auto* comp = cmd->add_option("--complete", in.complete, "complete digraph on n vertices");
    auto* bip = cmd->add_option("--complete-bipartite", in.bipartite,
                                "complete bipartite digraph, m,n");
    auto* lam = cmd->add_option("--lambda", in.lambda,
                                "four-block family digraph, a,b,c,d");
    file->excludes(circ)->excludes(comp)->excludes(bip)->excludes(lam);
    circ->excludes(comp)->excludes(bip)->excludes(lam);
    comp->excludes(bip)->excludes(lam);
    bip->excludes(lam);
}

std::vector<int> parse_ints(const std::string& text, size_t expected) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
    if (values.size() != expected)
        throw CLI::ValidationError("expected " + std::to_string(expected) +
                                   " comma-separated integers, got: " + text);
    return values;
}

int die(di_status status) {
    std::cerr << "error: " << di_last_error() << " (status " << int(status) << ")\n";
    return 2;
}

di_digraph* build_digraph(const DigraphInput& in) {
    di_digraph* g = nullptr;
    di_status st = DI_OK;
    if (!in.circuit.empty()) {
        st = di_digraph_circuit(std::stoi(in.circuit), &g);
    } else if (!in.complete.empty()) {
        st = di_digraph_complete(std::stoi(in.complete), &g);
    } else if (!in.bipartite.empty()) {
        auto v = parse_ints(in.bipartite, 2);
        st = di_digraph_complete_bipartite(v[0], v[1], &g);
    } else if (!in.lambda.empty()) {
        auto v = parse_ints(in.lambda, 4);
        st = di_digraph_lambda(v[0], v[1], v[2], v[3], &g);
    } else if (!in.file.empty()) {
        std::ostringstream text;
        if (in.file == "-") {
            text << std::cin.rdbuf();
        } else {
            std::ifstream f(in.file);
            if (!f) throw CLI::ValidationError("cannot open file: " + in.file);
            text << f.rdbuf();
        }
        st = di_digraph_parse(text.str().c_str(), &g);
    } else {
        throw CLI::ValidationError(
            "a digraph is required: --file, --circuit, --complete, "
            "--complete-bipartite, or --lambda");
    }
    if (st != DI_OK) {
        std::cerr << "error: " << di_last_error() << "\n";
        std::exit(2);
    }
    return g;
}

int print_string_result(di_status st, char* out) {
    if (st != DI_OK) return die(st);
    std::cout << out;
    if (out[0] != '\0' && out[std::string(out).size() - 1] != '\n') std::cout << "\n";
    di_string_free(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distance ideals, Smith normal forms, and pattern "
                 "classification of strong digraphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // ideal
    DigraphInput ideal_in;
    int ideal_k = 1;
    bool univariate = false, groebner = false;
    std::string eval_point;
    auto* cmd_ideal = app.add_subcommand("ideal", "generators of the k-th distance ideal");
    add_digraph_options(cmd_ideal, ideal_in);
    cmd_ideal->add_option("--k,-k", ideal_k, "ideal index (1-based)")->required();
    cmd_ideal->add_flag("--univariate", univariate, "univariate ideal over t");
    cmd_ideal->add_flag("--groebner", groebner, "print a strong Groebner basis");
    cmd_ideal->add_option("--evaluate-at", eval_point,
                          "comma-separated integer point; prints the gcd of "
                          "generator evaluations");

    // snf
    DigraphInput snf_in;
    std::string matrix_name = "D";
    auto* cmd_snf = app.add_subcommand("snf", "Smith normal form diagonal");
    add_digraph_options(cmd_snf, snf_in);
    cmd_snf->add_option("--matrix", matrix_name, "D, DL, DQ, Ddeg, or DdegPlus")
        ->check(CLI::IsMember({"D", "DL", "DQ", "Ddeg", "DdegPlus"}));

    // matrix
    DigraphInput mat_in;
    std::string mat_name = "D";
    auto* cmd_matrix = app.add_subcommand("matrix", "distance-derived matrix as text");
    add_digraph_options(cmd_matrix, mat_in);
    cmd_matrix->add_option("--matrix", mat_name, "D, DL, DQ, Ddeg, or DdegPlus")
        ->check(CLI::IsMember({"D", "DL", "DQ", "Ddeg", "DdegPlus"}));

    // classify
    DigraphInput cls_in;
    auto* cmd_classify =
        app.add_subcommand("classify", "membership in the one-trivial-ideal family");
    add_digraph_options(cmd_classify, cls_in);

    // verify
    std::string suite;
    int n_max = 0, threads = 1;
    uint64_t seed = 0;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify
        ->add_option("suite", suite,
                     "theorem-equi, eval-consistency, circuit-snf, lambda-ideals, "
                     "conjecture, diameter-lemma, pattern-lemmas, or all")
        ->required();
    cmd_verify->add_option("--n-max", n_max, "largest digraph order for enumeration suites");
    cmd_verify->add_option("--parallel", threads, "worker thread count");
    cmd_verify->add_option("--seed", seed, "seed for randomized checks");

    // family
    std::string family;
    std::vector<int> family_params;
    auto* cmd_family =
        app.add_subcommand("family", "closed-form ideal or SNF for a solved family");
    cmd_family
        ->add_option("name", family,
                     "complete, star, lambda-ab01, lambda-a10d, second-ideal, "
                     "circuit-third, circuit-snf, lambda-snf, or conjecture")
        ->required();
    cmd_family->add_option("params", family_params, "family parameters")->expected(1, 4);

    // gen
    DigraphInput gen_in;
    auto* cmd_gen = app.add_subcommand("gen", "emit a named digraph in text format");
    add_digraph_options(cmd_gen, gen_in);

    CLI11_PARSE(app, argc, argv);

    auto kind_of = [](const std::string& name) {
        if (name == "DL") return DI_MATRIX_DL;
        if (name == "DQ") return DI_MATRIX_DQ;
        if (name == "Ddeg") return DI_MATRIX_DDEG;
        if (name == "DdegPlus") return DI_MATRIX_DDEG_PLUS;
        return DI_MATRIX_D;
    };

    if (cmd_ideal->parsed()) {
        di_digraph* g = build_digraph(ideal_in);
        char* out = nullptr;
        di_status st = di_ideal(g, ideal_k, univariate, groebner,
                                eval_point.empty() ? nullptr : eval_point.c_str(), &out);
        int rc = print_string_result(st, out);
        di_digraph_free(g);
        return rc;
    }
    if (cmd_snf->parsed()) {
        di_digraph* g = build_digraph(snf_in);
        char* out = nullptr;
        di_status st = di_snf(g, kind_of(matrix_name), &out);
        int rc = print_string_result(st, out);
        di_digraph_free(g);
        return rc;
    }
    if (cmd_matrix->parsed()) {
        di_digraph* g = build_digraph(mat_in);
        char* out = nullptr;
        di_status st = di_distance_matrix(g, kind_of(mat_name), &out);
        int rc = print_string_result(st, out);
        di_digraph_free(g);
        return rc;
    }
    if (cmd_classify->parsed()) {
        di_digraph* g = build_digraph(cls_in);
        char* out = nullptr;
        di_status st = di_classify(g, as_json ? 1 : 0, &out);
        int rc = print_string_result(st, out);
        di_digraph_free(g);
        return rc;
    }
    if (cmd_verify->parsed()) {
        char* out = nullptr;
        int failures = 0;
        di_status st = di_verify(suite.c_str(), n_max, threads, seed, as_json ? 1 : 0,
                                 &out, &failures);
        if (st != DI_OK) return die(st);
        std::cout << out;
        di_string_free(out);
        return failures == 0 ? 0 : 1;
    }
    if (cmd_family->parsed()) {
        int p[4] = {0, 0, 0, 0};
        for (size_t i = 0; i < family_params.size() && i < 4; ++i) p[i] = family_params[i];
        char* out = nullptr;
        di_status st = di_family(family.c_str(), p[0], p[1], p[2], p[3], &out);
        return print_string_result(st, out);
    }
    if (cmd_gen->parsed()) {
        di_digraph* g = build_digraph(gen_in);
        char* out = nullptr;
        di_status st = di_digraph_format(g, &out);
        int rc = print_string_result(st, out);
        di_digraph_free(g);
        return rc;
    }
    return 0;
}

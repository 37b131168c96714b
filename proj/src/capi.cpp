#include "distideal.h"

#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "distideal/family.hpp"
#include "distideal/ideal.hpp"
#include "distideal/pattern.hpp"
#include "distideal/verify.hpp"
#include "json.hpp"

using namespace di;

struct di_digraph {
    Digraph g;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

di_status fail(di_status code, const std::string& message) {
    last_error = message;
    return code;
}

di_status classify_exception(const std::exception& e) {
    const std::string what = e.what();
    last_error = what;
    if (what.find("strong") != std::string::npos) return DI_ERR_NOT_STRONG;
    if (what.find("parse") != std::string::npos) return DI_ERR_PARSE;
    if (what.find("cap") != std::string::npos) return DI_ERR_CAP;
    return DI_ERR_ARGUMENT;
}

template <typename F>
di_status guarded(F&& fn) {
    try {
        fn();
        return DI_OK;
    } catch (const std::invalid_argument& e) {
        return classify_exception(e);
    } catch (const std::runtime_error& e) {
        return classify_exception(e);
    } catch (const std::exception& e) {
        last_error = e.what();
        return DI_ERR_INTERNAL;
    }
}

di_status make_digraph(Digraph g, di_digraph** out) {
    if (!out) return fail(DI_ERR_ARGUMENT, "null output pointer");
    *out = new di_digraph{std::move(g)};
    return DI_OK;
}

MatrixKind to_kind(di_matrix_kind kind) {
    switch (kind) {
        case DI_MATRIX_D: return MatrixKind::D;
        case DI_MATRIX_DL: return MatrixKind::DL;
        case DI_MATRIX_DQ: return MatrixKind::DQ;
        case DI_MATRIX_DDEG: return MatrixKind::Ddeg;
        case DI_MATRIX_DDEG_PLUS: return MatrixKind::DdegPlus;
    }
    throw std::invalid_argument("unknown matrix kind");
}

std::vector<mpz_class> parse_point(const char* text, size_t arity) {
    std::vector<mpz_class> point;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("parse error: empty coordinate");
        point.emplace_back(item.substr(a, b - a + 1));
    }
    if (point.size() != arity)
        throw std::invalid_argument("evaluation point arity mismatch: expected " +
                                    std::to_string(arity) + " coordinates");
    return point;
}

}  // namespace

extern "C" {

const char* di_last_error(void) { return last_error.c_str(); }

void di_string_free(char* s) { delete[] s; }

di_status di_digraph_parse(const char* text, di_digraph** out) {
    if (!text) return fail(DI_ERR_ARGUMENT, "null input text");
    Digraph g;
    di_status st = guarded([&] { g = parse_digraph(text); });
    return st == DI_OK ? make_digraph(std::move(g), out)
                       : (st == DI_ERR_ARGUMENT ? DI_ERR_PARSE : st);
}

di_status di_digraph_from_arcs(int n, const int32_t* arcs, size_t arc_count,
                               di_digraph** out) {
    if (arc_count > 0 && !arcs) return fail(DI_ERR_ARGUMENT, "null arc array");
    Digraph g;
    di_status st = guarded([&] {
        std::vector<Arc> list;
        list.reserve(arc_count);
        for (size_t i = 0; i < arc_count; ++i)
            list.emplace_back(arcs[2 * i], arcs[2 * i + 1]);
        g = from_arc_list(n, list);
    });
    return st == DI_OK ? make_digraph(std::move(g), out) : st;
}

di_status di_digraph_circuit(int n, di_digraph** out) {
    Digraph g;
    di_status st = guarded([&] { g = circuit(n); });
    return st == DI_OK ? make_digraph(std::move(g), out) : st;
}

di_status di_digraph_complete(int n, di_digraph** out) {
    Digraph g;
    di_status st = guarded([&] { g = complete(n); });
    return st == DI_OK ? make_digraph(std::move(g), out) : st;
}

di_status di_digraph_complete_bipartite(int m, int n, di_digraph** out) {
    Digraph g;
    di_status st = guarded([&] { g = complete_bipartite(m, n); });
    return st == DI_OK ? make_digraph(std::move(g), out) : st;
}

di_status di_digraph_lambda(int a, int b, int c, int d, di_digraph** out) {
    Digraph g;
    di_status st = guarded([&] { g = lambda({a, b, c, d}); });
    return st == DI_OK ? make_digraph(std::move(g), out) : st;
}

void di_digraph_free(di_digraph* g) { delete g; }

int di_digraph_order(const di_digraph* g) { return g ? g->g.order() : 0; }

int di_digraph_is_strong(const di_digraph* g) { return g && is_strong(g->g) ? 1 : 0; }

di_status di_digraph_diameter(const di_digraph* g, int* out) {
    if (!g || !out) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = diameter(g->g); });
}

di_status di_digraph_format(const di_digraph* g, char** out) {
    if (!g || !out) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = dup_string(format_digraph(g->g)); });
}

di_status di_distance_matrix(const di_digraph* g, di_matrix_kind kind, char** out) {
    if (!g || !out) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = dup_string(format_matrix(distance_matrix(g->g, to_kind(kind)))); });
}

di_status di_snf(const di_digraph* g, di_matrix_kind kind, char** out) {
    if (!g || !out) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        SnfResult snf = smith_normal_form(distance_matrix(g->g, to_kind(kind)));
        std::ostringstream os;
        for (size_t i = 0; i < snf.diagonal.size(); ++i) {
            if (i) os << ",";
            os << snf.diagonal[i];
        }
        *out = dup_string(os.str());
    });
}

di_status di_ideal(const di_digraph* g, int k, int univariate, int groebner,
                   const char* eval_point, char** out) {
    if (!g || !out) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        Ideal ideal = univariate ? univariate_distance_ideal(g->g, k)
                                 : distance_ideal(g->g, k);
        if (eval_point) {
            mpz_class value =
                evaluate_ideal(ideal, parse_point(eval_point, ideal.context()->arity()));
            *out = dup_string(value.get_str());
            return;
        }
        const std::vector<MultiPoly>& polys = groebner ? ideal.basis() : ideal.generators();
        std::ostringstream os;
        for (const auto& p : polys) os << p.str() << "\n";
        *out = dup_string(os.str());
    });
}

di_status di_classify(const di_digraph* g, int as_json, char** out) {
    if (!g || !out) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        ClassificationResult r = classify(g->g);
        TrivialityProfile profile = phi(g->g);
        std::ostringstream embedding;
        for (size_t i = 0; i < r.witness_embedding.size(); ++i) {
            if (i) embedding << ",";
            embedding << r.witness_embedding[i];
        }
        if (as_json) {
            nlohmann::json j;
            j["phi"] = profile.phi_value;
            switch (r.tag) {
                case FamilyTag::Circuit3: j["tag"] = "Circuit3"; break;
                case FamilyTag::Lambda:
                    j["tag"] = "Lambda";
                    j["params"] = {r.params.a, r.params.b, r.params.c, r.params.d};
                    j["block_of"] = r.block_of;
                    break;
                case FamilyTag::NotMember:
                    j["tag"] = "NotMember";
                    j["witness_pattern"] = r.witness_pattern;
                    j["witness_embedding"] = r.witness_embedding;
                    break;
            }
            *out = dup_string(j.dump(2));
            return;
        }
        std::ostringstream os;
        switch (r.tag) {
            case FamilyTag::Circuit3:
                os << "tag: Circuit3\n";
                break;
            case FamilyTag::Lambda: {
                os << "tag: Lambda(" << r.params.a << "," << r.params.b << "," << r.params.c
                   << "," << r.params.d << ")\n";
                os << "blocks:";
                for (int blk : r.block_of) os << " " << blk;
                os << "\n";
                break;
            }
            case FamilyTag::NotMember:
                os << "tag: NotMember\n";
                if (!r.witness_pattern.empty())
                    os << "witness: " << r.witness_pattern << " at " << embedding.str()
                       << "\n";
                break;
        }
        os << "phi: " << profile.phi_value << "\n";
        *out = dup_string(os.str());
    });
}

di_status di_verify(const char* suite, int n_max, int threads, uint64_t seed,
                    int as_json, char** report, int* failures) {
    if (!suite || !report) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        VerifyOptions opt;
        if (n_max > 0) opt.n_max = n_max;
        if (threads > 0) opt.threads = threads;
        opt.seed = seed;
        Report r = run_verify_suite(suite, opt);
        *report = dup_string(as_json ? r.to_json() : r.to_text());
        if (failures) *failures = r.failures() + r.errors();
    });
}

di_status di_family(const char* family, int p1, int p2, int p3, int p4, char** out) {
    if (!family || !out) return fail(DI_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string name = family;
        std::ostringstream os;
        auto print_ideal = [&](const ClosedFormIdeal& ideal) {
            for (const auto& g : ideal.generators) os << g.str() << "\n";
        };
        auto print_snf = [&](const SnfResult& snf) {
            for (size_t i = 0; i < snf.diagonal.size(); ++i) {
                if (i) os << ",";
                os << snf.diagonal[i];
            }
            os << "\n";
        };
        if (name == "complete") {
            print_ideal(ideal_complete(p1, p2));
        } else if (name == "star") {
            print_ideal(ideal_star(p1, p2));
        } else if (name == "lambda-ab01") {
            print_ideal(ideal_lambda_ab01(p1, p2, p3));
        } else if (name == "lambda-a10d") {
            print_ideal(ideal_lambda_a10d(p1, p2, p3));
        } else if (name == "second-ideal") {
            print_ideal(second_ideal_lambda({p1, p2, p3, p4}));
        } else if (name == "circuit-third") {
            print_ideal(third_ideal_circuit(p1));
        } else if (name == "circuit-snf") {
            print_snf(snf_circuit(p1));
        } else if (name == "lambda-snf") {
            print_snf(p4 > 1 ? snf_lambda_a10d(p1, p4) : snf_lambda_ab01(p1, p2));
        } else if (name == "conjecture") {
            print_ideal(conjectured_univariate_circuit(p1, p2));
        } else {
            throw std::invalid_argument("unknown family: " + name);
        }
        *out = dup_string(os.str());
    });
}

}  // extern "C"

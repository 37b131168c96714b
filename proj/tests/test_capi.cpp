#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "distideal.h"
#include "json.hpp"

namespace {

struct Guard {
    di_digraph* g = nullptr;
    ~Guard() { di_digraph_free(g); }
};

struct Str {
    char* s = nullptr;
    ~Str() { di_string_free(s); }
    std::string get() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("construction and accessors") {
    Guard c4;
    REQUIRE(di_digraph_circuit(4, &c4.g) == DI_OK);
    CHECK(di_digraph_order(c4.g) == 4);
    CHECK(di_digraph_is_strong(c4.g) == 1);
    int diam = 0;
    CHECK(di_digraph_diameter(c4.g, &diam) == DI_OK);
    CHECK(diam == 3);

    Str text;
    REQUIRE(di_digraph_format(c4.g, &text.s) == DI_OK);
    Guard reparsed;
    REQUIRE(di_digraph_parse(text.s, &reparsed.g) == DI_OK);
    Str text2;
    REQUIRE(di_digraph_format(reparsed.g, &text2.s) == DI_OK);
    CHECK(text.get() == text2.get());

    int32_t arcs[] = {0, 1, 1, 0};
    Guard k2;
    REQUIRE(di_digraph_from_arcs(2, arcs, 2, &k2.g) == DI_OK);
    CHECK(di_digraph_is_strong(k2.g) == 1);

    Guard lam;
    REQUIRE(di_digraph_lambda(1, 1, 0, 1, &lam.g) == DI_OK);
    CHECK(di_digraph_order(lam.g) == 3);
}

TEST_CASE("error reporting") {
    di_digraph* out = nullptr;
    CHECK(di_digraph_circuit(4, nullptr) == DI_ERR_ARGUMENT);
    CHECK(di_digraph_parse(nullptr, &out) == DI_ERR_ARGUMENT);
    CHECK(di_digraph_parse("n=2\n0->0\n", &out) == DI_ERR_PARSE);
    CHECK(std::string(di_last_error()).size() > 0);
    CHECK(di_digraph_circuit(-1, &out) == DI_ERR_ARGUMENT);

    // Classification demands strong connectivity.
    Guard path;
    int32_t arcs[] = {0, 1, 1, 2};
    REQUIRE(di_digraph_from_arcs(3, arcs, 2, &path.g) == DI_OK);
    Str s;
    CHECK(di_classify(path.g, 0, &s.s) == DI_ERR_NOT_STRONG);
    CHECK(di_ideal(path.g, 2, 0, 0, nullptr, &s.s) == DI_ERR_NOT_STRONG);

    Guard c3;
    REQUIRE(di_digraph_circuit(3, &c3.g) == DI_OK);
    CHECK(di_ideal(c3.g, 0, 0, 0, nullptr, &s.s) == DI_ERR_ARGUMENT);
    CHECK(di_ideal(c3.g, 4, 0, 0, nullptr, &s.s) == DI_ERR_ARGUMENT);
    CHECK(di_snf(nullptr, DI_MATRIX_D, &s.s) == DI_ERR_ARGUMENT);
}

TEST_CASE("invariant factors through the C boundary") {
    Guard c4;
    REQUIRE(di_digraph_circuit(4, &c4.g) == DI_OK);
    Str snf;
    REQUIRE(di_snf(c4.g, DI_MATRIX_D, &snf.s) == DI_OK);
    CHECK(snf.get() == "1,1,4,24");
    Str mat;
    REQUIRE(di_distance_matrix(c4.g, DI_MATRIX_D, &mat.s) == DI_OK);
    CHECK(mat.get().rfind("4 4", 0) == 0);
}

TEST_CASE("ideal queries through the C boundary") {
    Guard c3;
    REQUIRE(di_digraph_circuit(3, &c3.g) == DI_OK);

    Str uni;
    REQUIRE(di_ideal(c3.g, 2, 1, 1, nullptr, &uni.s) == DI_OK);
    CHECK(uni.get().find("t + 3") != std::string::npos);
    CHECK(uni.get().find("7") != std::string::npos);

    Str gb;
    REQUIRE(di_ideal(c3.g, 2, 0, 1, nullptr, &gb.s) == DI_OK);
    CHECK(gb.get().find("7") != std::string::npos);

    Str ev;
    REQUIRE(di_ideal(c3.g, 2, 0, 0, "4,4,4", &ev.s) == DI_OK);
    CHECK(ev.get() == "7");
    CHECK(di_ideal(c3.g, 2, 0, 0, "1,2", &ev.s) == DI_ERR_ARGUMENT);
    CHECK(di_ideal(c3.g, 2, 0, 0, "a,b,c", &ev.s) != DI_OK);
}

TEST_CASE("classification JSON") {
    Guard kb;
    REQUIRE(di_digraph_complete_bipartite(2, 2, &kb.g) == DI_OK);
    Str out;
    REQUIRE(di_classify(kb.g, 1, &out.s) == DI_OK);
    auto j = nlohmann::json::parse(out.get());
    CHECK(j["tag"] == "Lambda");
    CHECK(j["params"] == nlohmann::json({0, 2, 0, 2}));
    CHECK(j["block_of"].size() == 4);
    CHECK(j["phi"] == 1);

    Guard c4;
    REQUIRE(di_digraph_circuit(4, &c4.g) == DI_OK);
    Str out2;
    REQUIRE(di_classify(c4.g, 1, &out2.s) == DI_OK);
    auto j2 = nlohmann::json::parse(out2.get());
    CHECK(j2["tag"] == "NotMember");
    CHECK(j2["phi"] == 2);
    CHECK(!j2["witness_pattern"].get<std::string>().empty());
}

TEST_CASE("verification suites through the C boundary") {
    Str report;
    int failures = -1;
    REQUIRE(di_verify("circuit-snf", 8, 1, 1, 0, &report.s, &failures) == DI_OK);
    CHECK(failures == 0);
    CHECK(report.get().find("PASS") != std::string::npos);

    Str json_report;
    REQUIRE(di_verify("circuit-snf", 8, 1, 1, 1, &json_report.s, &failures) == DI_OK);
    auto j = nlohmann::json::parse(json_report.get());
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["error"] == 0);

    CHECK(di_verify("no-such-suite", 4, 1, 1, 0, &report.s, &failures) ==
          DI_ERR_ARGUMENT);
}

TEST_CASE("closed-form family output") {
    Str out;
    REQUIRE(di_family("complete", 3, 2, 0, 0, &out.s) == DI_OK);
    CHECK(out.get().find("x0 - 1") != std::string::npos);

    Str snf;
    REQUIRE(di_family("circuit-snf", 4, 0, 0, 0, &snf.s) == DI_OK);
    CHECK(snf.get() == "1,1,4,24\n");

    Str lam;
    REQUIRE(di_family("lambda-snf", 1, 2, 0, 1, &lam.s) == DI_OK);
    CHECK(lam.get() == "1,1,1,12\n");

    Str conj;
    REQUIRE(di_family("conjecture", 6, 4, 0, 0, &conj.s) == DI_OK);
    CHECK(conj.get().find("t^2") != std::string::npos);

    CHECK(di_family("unknown", 1, 1, 1, 1, &out.s) == DI_ERR_ARGUMENT);
    CHECK(di_family("complete", 3, 9, 0, 0, &out.s) == DI_ERR_ARGUMENT);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "distideal/family.hpp"

using namespace di;

namespace {

Ideal parse_ideal(const VarContextPtr& ctx, const std::vector<std::string>& gens) {
    std::vector<MultiPoly> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(ctx, g));
    return Ideal(ctx, std::move(ps));
}

// Closed form vs the generic minor pipeline, compared as ideals over the
// digraph's own variables.
bool matches_minors(const ClosedFormIdeal& cf, const Digraph& g, int k) {
    return ideals_equal(cf.in_digraph_context(g.order()), distance_ideal(g, k));
}

}  // namespace

TEST_CASE("complete digraph closed forms") {
    auto c1 = ideal_complete(3, 1);
    CHECK(int(c1.generators.size()) == 1);
    CHECK(c1.generators[0].is_constant());
    CHECK(c1.generators[0].constant_value() == 1);

    auto c2 = ideal_complete(3, 2);
    CHECK(ideals_equal(c2.as_ideal(),
                       parse_ideal(c2.ctx, {"x0 - 1", "x1 - 1", "x2 - 1"})));

    auto c3 = ideal_complete(3, 3);
    REQUIRE(int(c3.generators.size()) == 1);
    CHECK(c3.generators[0].str() == "x0*x1*x2 - x0 - x1 - x2 + 2");

    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(matches_minors(ideal_complete(n, k), complete(n), k));
}

TEST_CASE("star closed forms") {
    auto s2 = ideal_star(2, 2);
    CHECK(ideals_equal(s2.as_ideal(),
                       parse_ideal(s2.ctx, {"2*y - 1", "x1 - 2", "x2 - 2"})));
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= m + 1; ++k)
            CHECK(matches_minors(ideal_star(m, k), complete_bipartite(m, 1), k));
}

TEST_CASE("four-block closed forms carry coefficient generators") {
    // Frozen value: I_2(Lambda(1,1,0,1)) over (x, y1, z1).
    auto cf = ideal_lambda_ab01(1, 1, 2);
    CHECK(ideals_equal(cf.as_ideal(),
                       parse_ideal(cf.ctx, {"3", "x - 2", "y1 - 2", "z1 - 1"})));
    // The two linear factors alone generate a strictly larger set of
    // constraints being dropped: not the same ideal.
    CHECK_FALSE(ideals_equal(cf.as_ideal(),
                             parse_ideal(cf.ctx, {"z1 - 1", "y1 - 2"})));

    for (int a = 0; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b) {
            if (b < 1) continue;
            Digraph g = lambda({a, b, 0, 1});
            for (int k = 1; k <= g.order(); ++k)
                CHECK(matches_minors(ideal_lambda_ab01(a, b, k), g, k));
        }
    for (int a = 0; a <= 3; ++a)
        for (int d = 1; a + d <= 4; ++d) {
            Digraph g = lambda({a, 1, 0, d});
            for (int k = 1; k <= g.order(); ++k)
                CHECK(matches_minors(ideal_lambda_a10d(a, d, k), g, k));
        }
}

TEST_CASE("second-ideal case table covers all strong four-block digraphs") {
    auto t2 = second_ideal_lambda({2, 0, 0, 0});
    CHECK(ideals_equal(t2.as_ideal(), parse_ideal(t2.ctx, {"x1*x2 - 1"})));
    auto t3 = second_ideal_lambda({0, 1, 0, 1});
    CHECK(ideals_equal(t3.as_ideal(), parse_ideal(t3.ctx, {"y1*y2 - 1"})));
    auto t4 = second_ideal_lambda({3, 0, 0, 0});
    CHECK(ideals_equal(t4.as_ideal(),
                       parse_ideal(t4.ctx, {"x1 - 1", "x2 - 1", "x3 - 1"})));
    auto t5 = second_ideal_lambda({1, 1, 0, 1});
    CHECK(ideals_equal(t5.as_ideal(),
                       parse_ideal(t5.ctx, {"3", "x1 - 1", "y1 - 2", "y2 - 2"})));

    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; a + b + c <= 5; ++c)
                for (int d = 0; a + b + c + d <= 5; ++d) {
                    LambdaParams p{a, b, c, d};
                    if (p.order() < 2) continue;
                    Digraph g = lambda(p);
                    if (!is_strong(g)) continue;
                    CHECK(matches_minors(second_ideal_lambda(p), g, 2));
                }
    CHECK_THROWS(second_ideal_lambda({1, 0, 0, 0}));
    CHECK_THROWS(second_ideal_lambda({0, 3, 0, 0}));  // T_b alone is not strong
}

TEST_CASE("circuit third ideal") {
    auto cf = third_ideal_circuit(5);
    CHECK(ideals_equal(cf.as_ideal(),
                       parse_ideal(cf.ctx, {"x0", "x1", "x2", "x3", "x4", "5"})));
    for (int n = 5; n <= 7; ++n)
        CHECK(matches_minors(third_ideal_circuit(n), circuit(n), 3));
    CHECK_THROWS(third_ideal_circuit(4));
}

TEST_CASE("closed-form invariant factors match elimination") {
    for (int n = 3; n <= 12; ++n) {
        SnfResult expected = snf_circuit(n);
        CHECK(expected ==
              smith_normal_form(distance_matrix(circuit(n), MatrixKind::D)));
        CHECK(expected.diagonal.back() == n * n * (n - 1) / 2);
    }
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 4; ++b)
            CHECK(snf_lambda_ab01(a, b) ==
                  smith_normal_form(distance_matrix(lambda({a, b, 0, 1}), MatrixKind::D)));
    for (int a = 0; a <= 3; ++a)
        for (int d = 1; d <= 4; ++d)
            CHECK(snf_lambda_a10d(a, d) ==
                  smith_normal_form(distance_matrix(lambda({a, 1, 0, d}), MatrixKind::D)));
    CHECK_THROWS(snf_circuit(2));
}

TEST_CASE("conjectured univariate generators") {
    auto cf = conjectured_univariate_circuit(6, 4);
    CHECK(ideals_equal(cf.as_ideal(), parse_ideal(cf.ctx, {"t^2", "6*t", "36"})));
    // The conjectured generators at least lie in the computed ideal.
    for (int n = 6; n <= 7; ++n)
        for (int k = 4; k <= n - 2; ++k) {
            Ideal computed = univariate_distance_ideal(circuit(n), k);
            Ideal claimed = conjectured_univariate_circuit(n, k).as_ideal();
            CHECK(ideals_equal(computed, claimed));
        }
    CHECK_THROWS(conjectured_univariate_circuit(6, 3));
    CHECK_THROWS(conjectured_univariate_circuit(6, 5));
}

TEST_CASE("circulant determinant cross-check") {
    for (int n = 3; n <= 12; ++n) {
        auto rep = circulant_det_check(n);
        CHECK(rep.pass);
        CHECK(rep.max_deviation < rep.tolerance);
        CHECK(int(rep.deviations.size()) == n + 1);
    }
    CHECK_THROWS(circulant_det_check(2));
    CHECK_THROWS(circulant_det_check(17));
}

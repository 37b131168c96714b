#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "distideal/poly.hpp"

using namespace di;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, const VarContextPtr& ctx) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> exp(0, 3);
    std::vector<Term> terms;
    int n_terms = 1 + int(rng() % 4);
    for (int i = 0; i < n_terms; ++i) {
        Term t;
        t.coef = coef(rng);
        t.exp.resize(ctx->arity());
        for (auto& e : t.exp) e = exp(rng);
        terms.push_back(std::move(t));
    }
    return MultiPoly::from_terms(ctx, std::move(terms));
}

std::vector<mpz_class> random_point(std::mt19937_64& rng, size_t arity) {
    std::uniform_int_distribution<int> v(-4, 4);
    std::vector<mpz_class> p(arity);
    for (auto& e : p) e = v(rng);
    return p;
}

}  // namespace

TEST_CASE("context construction") {
    auto ctx = x_context(3);
    CHECK(ctx->arity() == 3);
    CHECK(ctx->name(0) == "x0");
    CHECK(ctx->index_of("x2") == 2);
    CHECK(ctx->index_of("y") == -1);
    CHECK(t_context()->name(0) == "t");
    CHECK_THROWS(make_context({"a", "a"}));
}

TEST_CASE("monomial orders") {
    // degrevlex: higher total degree wins; ties broken by *smaller* exponent
    // in the last differing position.
    CHECK(compare_monomials({2, 0}, {1, 0}, MonomialOrder::Degrevlex) > 0);
    CHECK(compare_monomials({1, 1}, {0, 2}, MonomialOrder::Degrevlex) > 0);
    CHECK(compare_monomials({1, 0}, {0, 1}, MonomialOrder::Degrevlex) > 0);
    CHECK(compare_monomials({1, 2}, {1, 2}, MonomialOrder::Degrevlex) == 0);
    // lex: first position dominates regardless of total degree.
    CHECK(compare_monomials({1, 0}, {0, 5}, MonomialOrder::Lex) > 0);
    CHECK(compare_monomials({0, 3}, {0, 2}, MonomialOrder::Lex) > 0);
}

TEST_CASE("parse and print round trip") {
    auto ctx = x_context(2);
    CHECK(parse_poly(ctx, "x0*x1 + 3*x0").str() == "x0*x1 + 3*x0");
    CHECK(parse_poly(ctx, "x1^2 - x0 - 1").str() == "x1^2 - x0 - 1");
    CHECK(parse_poly(ctx, "-2*x0^3").str() == "-2*x0^3");
    CHECK(parse_poly(ctx, "0").is_zero());
    CHECK(parse_poly(ctx, "0").str() == "0");
    CHECK(parse_poly(ctx, "5").constant_value() == 5);
    // Unsorted / duplicated input normalizes.
    CHECK(parse_poly(ctx, "1 + x0 + 2*x0") == parse_poly(ctx, "3*x0 + 1"));
    CHECK(parse_poly(ctx, "x0 - x0").is_zero());
    CHECK_THROWS(parse_poly(ctx, "y + 1"));

    std::mt19937_64 rng(777);
    for (int i = 0; i < 30; ++i) {
        MultiPoly p = random_poly(rng, ctx);
        CHECK(parse_poly(ctx, p.str()) == p);
        CHECK(parse_poly(ctx, p.str(MonomialOrder::Lex)) == p);
    }
}

TEST_CASE("ring axioms and evaluation homomorphism") {
    auto ctx = x_context(3);
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = random_poly(rng, ctx);
        MultiPoly b = random_poly(rng, ctx);
        MultiPoly c = random_poly(rng, ctx);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == MultiPoly(ctx));
        CHECK(a + (-a) == MultiPoly(ctx));

        auto point = random_point(rng, 3);
        CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
        CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    }
}

TEST_CASE("add_scaled multiplies by a scaled monomial") {
    auto ctx = x_context(2);
    MultiPoly p = parse_poly(ctx, "x0 + 1");
    MultiPoly q = parse_poly(ctx, "x1 - 2");
    p.add_scaled(q, 3, {1, 0});  // p += 3*x0*(x1 - 2)
    CHECK(p == parse_poly(ctx, "3*x0*x1 - 5*x0 + 1"));
}

TEST_CASE("symbolic determinant of variable-diagonal distance matrices") {
    CHECK(sym_det(dx_matrix(circuit(3))).str() ==
          "x0*x1*x2 - 2*x0 - 2*x1 - 2*x2 + 9");
    CHECK(sym_det(dx_matrix(complete(3))).str() ==
          "x0*x1*x2 - x0 - x1 - x2 + 2");
    // Collapsing every variable to t agrees with building t*I + D directly.
    for (const Digraph& g : {circuit(4), complete(4), complete_bipartite(2, 2)}) {
        CHECK(sym_det(dt_matrix(g)) == sym_det(dx_matrix(g)).collapse_to_t());
    }
    CHECK(sym_det(dt_matrix(circuit(3))).str() == "t^3 - 6*t + 9");
    CHECK(sym_det(dt_matrix(complete(3))).str() == "t^3 - 3*t + 2");
}

TEST_CASE("minors enumeration") {
    Digraph g = circuit(4);
    SymMatrix m = dx_matrix(g);
    for (int k = 1; k <= 4; ++k) {
        auto mm = minors(m, k);
        // C(4,k)^2 subset pairs.
        int c = (k == 1 || k == 3) ? 4 : (k == 2 ? 6 : 1);
        CHECK(int(mm.size()) == c * c);
    }
    CHECK(minors(m, 4)[0] == sym_det(m));
    CHECK(minors(m, 1)[1] == parse_poly(m.context(), "1"));  // D entry (0,1)

    // Minor computation commutes with integer evaluation.
    std::mt19937_64 rng(1357);
    auto point = random_point(rng, 4);
    BigMatrix num = m.evaluate(point);
    auto sym2 = minors(m, 2);
    // Spot-check: the first 2x2 minor (rows {0,1}, cols {0,1}).
    mpz_class direct = num.at(0, 0) * num.at(1, 1) - num.at(0, 1) * num.at(1, 0);
    CHECK(sym2[0].evaluate(point) == direct);
    CHECK(determinant(num) == sym_det(m).evaluate(point));
}

TEST_CASE("remap into a larger context") {
    auto src = make_context({"a", "b"});
    auto dst = make_context({"x", "b", "a"});
    MultiPoly p = parse_poly(src, "a*b - 2*a + 7");
    MultiPoly q = p.remap(dst, {2, 1});
    CHECK(q == parse_poly(dst, "a*b - 2*a + 7"));
    CHECK(q.context() == dst);
}

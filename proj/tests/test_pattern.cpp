#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "distideal/ideal.hpp"
#include "distideal/pattern.hpp"

using namespace di;

namespace {

// Undirected helper: add both arc directions.
Digraph sym_graph(int n, const std::vector<Arc>& edges) {
    std::vector<Arc> arcs;
    for (auto [u, v] : edges) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return Digraph(n, arcs);
}

// Independent F6-freeness oracle for undirected graphs: no induced path on 4
// vertices, no induced paw, no induced diamond.
bool has_induced(const Digraph& g, const Digraph& sub) {
    int n = g.order(), k = sub.order();
    std::vector<int> map(k, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int p = 0; p < pos && ok; ++p)
                if (g.has_arc(v, map[p]) != sub.has_arc(pos, p)) ok = false;
            if (!ok) continue;
            used[v] = true;
            map[pos] = v;
            if (rec(pos + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(0);
}

bool f6_free_oracle(const Digraph& g) {
    Digraph path4 = sym_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Digraph paw = sym_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    Digraph diamond = sym_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}});
    return !has_induced(g, path4) && !has_induced(g, paw) && !has_induced(g, diamond);
}

void for_each_connected_graph(int n, const std::function<void(const Digraph&)>& fn) {
    int pairs = n * (n - 1) / 2;
    for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Arc> edges;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) edges.push_back({u, v});
        Digraph g = sym_graph(n, edges);
        if (is_strong(g)) fn(g);  // symmetric + strong == connected
    }
}

bool embeds(const Digraph& g, const std::string& name) {
    return contains_pattern(g, builtin_pattern(name)).has_value();
}

}  // namespace

TEST_CASE("builtin patterns have the pinned arc counts") {
    struct Row {
        const char* name;
        int k, nb, nc;
    };
    for (Row r : std::initializer_list<Row>{{"P4", 4, 3, 3},
                                            {"F1", 4, 2, 3},
                                            {"F2", 3, 5, 1},
                                            {"F3", 4, 3, 1},
                                            {"F4", 3, 3, 3},
                                            {"F5", 3, 3, 3},
                                            {"F6", 4, 6, 2}}) {
        Pattern p = builtin_pattern(r.name);
        CHECK(p.k == r.k);
        CHECK(int(p.required.size()) == r.nb);
        CHECK(int(p.forbidden.size()) == r.nc);
    }
    CHECK_THROWS(builtin_pattern("F9"));
}

TEST_CASE("pattern embeddings respect required and forbidden arcs") {
    // Circuit on 5 vertices has diameter 4, so F1 (a distance-3 witness) embeds.
    Digraph c5 = circuit(5);
    auto emb = contains_pattern(c5, builtin_pattern("F1"));
    REQUIRE(emb.has_value());
    Pattern f1 = builtin_pattern("F1");
    for (auto [u, v] : f1.required) CHECK(c5.has_arc((*emb)[u], (*emb)[v]));
    for (auto [u, v] : f1.forbidden) CHECK_FALSE(c5.has_arc((*emb)[u], (*emb)[v]));
    // Injectivity.
    std::set<int> distinct(emb->begin(), emb->end());
    CHECK(int(distinct.size()) == f1.k);

    CHECK_FALSE(embeds(circuit(3), "F1"));
    CHECK(embeds(circuit(4), "P4"));
}

TEST_CASE("pattern freeness of the known members") {
    CHECK(is_forbidden_pattern_free(circuit(3)));
    CHECK(is_forbidden_pattern_free(lambda({1, 1, 0, 1})));
    CHECK(is_forbidden_pattern_free(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}, {3, 1}})));
    CHECK_FALSE(is_forbidden_pattern_free(circuit(4)));
    CHECK_FALSE(is_forbidden_pattern_free(circuit(5)));
}

TEST_CASE("classification of small digraphs") {
    CHECK(classify(circuit(3)).tag == FamilyTag::Circuit3);

    auto r4 = classify(circuit(4));
    CHECK(r4.tag == FamilyTag::NotMember);
    CHECK_FALSE(r4.witness_pattern.empty());
    Pattern w = builtin_pattern(r4.witness_pattern);
    REQUIRE(int(r4.witness_embedding.size()) == w.k);
    Digraph c4 = circuit(4);
    for (auto [u, v] : w.required)
        CHECK(c4.has_arc(r4.witness_embedding[u], r4.witness_embedding[v]));
    for (auto [u, v] : w.forbidden)
        CHECK_FALSE(c4.has_arc(r4.witness_embedding[u], r4.witness_embedding[v]));

    auto rb = classify(complete_bipartite(2, 2));
    CHECK(rb.tag == FamilyTag::Lambda);
    CHECK(rb.params.a == 0);
    CHECK(rb.params.b == 2);
    CHECK(rb.params.c == 0);
    CHECK(rb.params.d == 2);

    CHECK_THROWS(classify(Digraph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("classification recovers defining parameters") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d) {
                    LambdaParams p{a, b, c, d};
                    int n = a + b + c + d;
                    if (n < 2 || n > 7) continue;
                    Digraph g = lambda(p);
                    if (!is_strong(g)) continue;
                    auto r = classify(g);
                    REQUIRE(r.tag == FamilyTag::Lambda);
                    // Recovered parameters rebuild an isomorphic digraph.
                    CHECK(are_isomorphic(g, lambda(r.params)));
                    // The block partition has the right sizes.
                    std::vector<int> sizes(4, 0);
                    REQUIRE(int(r.block_of.size()) == n);
                    for (int blk : r.block_of) {
                        REQUIRE(blk >= 0);
                        REQUIRE(blk < 4);
                        ++sizes[blk];
                    }
                    CHECK(sizes == std::vector<int>{r.params.a, r.params.b,
                                                    r.params.c, r.params.d});
                }
}

TEST_CASE("classification matches ideal-based membership on all strong n<=4") {
    for (int n = 2; n <= 4; ++n)
        for_each_strong(n, [&](const Digraph& g) {
            bool member = classify(g).tag != FamilyTag::NotMember;
            CHECK(member == !second_ideal_trivial(distance_table(g)));
            CHECK(member == is_forbidden_pattern_free(g));
        });
}

TEST_CASE("symmetric-graph pattern matches the induced-subgraph oracle") {
    CHECK_FALSE(is_f6_free_graph(sym_graph(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK(is_f6_free_graph(complete_bipartite(2, 3)));
    CHECK_FALSE(is_f6_free_graph(sym_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})));
    CHECK_THROWS(is_f6_free_graph(circuit(3)));  // asymmetric input rejected

    for (int n = 4; n <= 6; ++n)
        for_each_connected_graph(n, [&](const Digraph& g) {
            CHECK(is_f6_free_graph(g) == f6_free_oracle(g));
        });
}

TEST_CASE("pattern text round trip") {
    Pattern p = builtin_pattern("F3");
    Pattern q = parse_pattern(format_pattern(p));
    CHECK(q.k == p.k);
    CHECK(q.required == p.required);
    CHECK(q.forbidden == p.forbidden);
    Pattern r = parse_pattern("k=3; B: 0->1,1->2; C: 2->0");
    CHECK(r.k == 3);
    CHECK(r.required == std::vector<Arc>{{0, 1}, {1, 2}});
    CHECK(r.forbidden == std::vector<Arc>{{2, 0}});
    CHECK_THROWS(parse_pattern("k=2; B: 0->5; C:"));
    CHECK_THROWS(parse_pattern("nonsense"));
}

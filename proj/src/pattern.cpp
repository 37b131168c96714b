#include "distideal/pattern.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace di {

namespace {

Pattern make_pattern(int k, std::vector<Arc> required, std::vector<Arc> forbidden) {
    Pattern p{k, std::move(required), std::move(forbidden)};
    for (const auto& set : {p.required, p.forbidden})
        for (const auto& [u, v] : set)
            if (u < 0 || v < 0 || u >= k || v >= k || u == v)
                throw std::invalid_argument("pattern arc out of range");
    for (const auto& a : p.required)
        if (std::find(p.forbidden.begin(), p.forbidden.end(), a) != p.forbidden.end())
            throw std::invalid_argument("pattern arc both required and forbidden");
    return p;
}

}  // namespace

Pattern builtin_pattern(BuiltinPattern name) {
    switch (name) {
        // Vertex numbering: u=0, w=1, z=2, v=3 for the 4-vertex patterns,
        // u=0, v=1, w=2 (and z=3 in F1) otherwise.
        case BuiltinPattern::P4:
            return make_pattern(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 2}, {0, 3}, {1, 3}});
        case BuiltinPattern::F1:  // u=0, v=1, w=2, z=3
            return make_pattern(4, {{0, 1}, {1, 2}}, {{0, 2}, {0, 3}, {1, 3}});
        case BuiltinPattern::F2:  // u=0, v=1, w=2
            return make_pattern(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 1}}, {{1, 0}});
        case BuiltinPattern::F3:  // u=0, w=1, z=2, v=3
            return make_pattern(4, {{0, 2}, {0, 3}, {1, 3}}, {{1, 2}});
        case BuiltinPattern::F4:  // u=0, v=1, w=2
            return make_pattern(3, {{0, 1}, {1, 0}, {1, 2}}, {{2, 1}, {0, 2}, {2, 0}});
        case BuiltinPattern::F5:  // u=0, v=1, w=2
            return make_pattern(3, {{0, 1}, {1, 0}, {2, 1}}, {{1, 2}, {0, 2}, {2, 0}});
        case BuiltinPattern::F6:  // undirected: u=0, w=1, z=2, v=3
            return make_pattern(4,
                                {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}},
                                {{0, 3}, {3, 0}});
    }
    throw std::invalid_argument("unknown builtin pattern");
}

Pattern builtin_pattern(const std::string& name) {
    if (name == "P4") return builtin_pattern(BuiltinPattern::P4);
    if (name == "F1") return builtin_pattern(BuiltinPattern::F1);
    if (name == "F2") return builtin_pattern(BuiltinPattern::F2);
    if (name == "F3") return builtin_pattern(BuiltinPattern::F3);
    if (name == "F4") return builtin_pattern(BuiltinPattern::F4);
    if (name == "F5") return builtin_pattern(BuiltinPattern::F5);
    if (name == "F6") return builtin_pattern(BuiltinPattern::F6);
    throw std::invalid_argument("unknown pattern name: " + name);
}

namespace {

bool embed_search(const Digraph& g, const Pattern& p, std::vector<int>& image,
                  std::vector<bool>& used, size_t depth) {
    if (depth == size_t(p.k)) return true;
    for (int cand = 0; cand < g.order(); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (const auto& [u, v] : p.required) {
            if (size_t(u) == depth && size_t(v) < depth && !g.has_arc(cand, image[v])) ok = false;
            if (size_t(v) == depth && size_t(u) < depth && !g.has_arc(image[u], cand)) ok = false;
            if (!ok) break;
        }
        for (const auto& [u, v] : p.forbidden) {
            if (!ok) break;
            if (size_t(u) == depth && size_t(v) < depth && g.has_arc(cand, image[v])) ok = false;
            if (size_t(v) == depth && size_t(u) < depth && g.has_arc(image[u], cand)) ok = false;
        }
        if (!ok) continue;
        image[depth] = cand;
        used[cand] = true;
        if (embed_search(g, p, image, used, depth + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_pattern(const Digraph& g, const Pattern& p) {
    if (p.k > g.order()) return std::nullopt;
    std::vector<int> image(p.k, -1);
    std::vector<bool> used(g.order(), false);
    if (embed_search(g, p, image, used, 0)) return image;
    return std::nullopt;
}

bool is_forbidden_pattern_free(const Digraph& g) {
    for (BuiltinPattern b : {BuiltinPattern::F1, BuiltinPattern::F2, BuiltinPattern::F3,
                             BuiltinPattern::F4, BuiltinPattern::F5})
        if (contains_pattern(g, builtin_pattern(b))) return false;
    return true;
}

namespace {

/// Vertex permutation p with g.has_arc(p[i], p[j]) == h.has_arc(i, j), if any.
std::optional<std::vector<int>> find_isomorphism(const Digraph& h, const Digraph& g) {
    const int n = g.order();
    if (h.order() != n) return std::nullopt;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            if (g.out_degree(cand) != h.out_degree(i) || g.in_degree(cand) != h.in_degree(i))
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (g.has_arc(cand, perm[j]) != h.has_arc(i, j)) ok = false;
                if (g.has_arc(perm[j], cand) != h.has_arc(j, i)) ok = false;
            }
            if (!ok) continue;
            perm[i] = cand;
            used[cand] = true;
            if (rec(i + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    if (rec(0)) return perm;
    return std::nullopt;
}

}  // namespace

ClassificationResult classify(const Digraph& g) {
    if (!is_strong(g)) throw std::invalid_argument("classify requires a strong digraph");
    ClassificationResult result;
    const int n = g.order();

    if (n == 3 && are_isomorphic(g, circuit(3))) {
        result.tag = FamilyTag::Circuit3;
        return result;
    }

    // Lexicographically first matching composition; this also selects the
    // smaller side of the (a,b,c,d) <-> (c,d,a,b) symmetry.
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (int c = 0; a + b + c <= n; ++c) {
                const int d = n - a - b - c;
                LambdaParams params{a, b, c, d};
                Digraph lam = lambda(params);
                auto perm = find_isomorphism(lam, g);
                if (!perm) continue;
                result.tag = FamilyTag::Lambda;
                result.params = params;
                result.block_of.assign(n, -1);
                for (int i = 0; i < n; ++i) {
                    int block = i < a ? 0 : i < a + b ? 1 : i < a + b + c ? 2 : 3;
                    result.block_of[(*perm)[i]] = block;
                }
                return result;
            }

    for (BuiltinPattern b : {BuiltinPattern::F1, BuiltinPattern::F2, BuiltinPattern::F3,
                             BuiltinPattern::F4, BuiltinPattern::F5}) {
        Pattern p = builtin_pattern(b);
        if (auto image = contains_pattern(g, p)) {
            result.witness_pattern = std::array<const char*, 5>{
                "F1", "F2", "F3", "F4", "F5"}[int(b) - int(BuiltinPattern::F1)];
            result.witness_embedding = *image;
            break;
        }
    }
    result.tag = FamilyTag::NotMember;
    return result;
}

bool is_f6_free_graph(const Digraph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.has_arc(u, v) != g.has_arc(v, u))
                throw std::invalid_argument("F6-freeness requires a symmetric arc relation");
    return !contains_pattern(g, builtin_pattern(BuiltinPattern::F6));
}

Pattern parse_pattern(const std::string& text) {
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("pattern parse error: " + what);
    };
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r\n");
        size_t b = s.find_last_not_of(" \t\r\n");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    auto parse_arcs = [&](const std::string& body) {
        std::vector<Arc> arcs;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            size_t arrow = item.find("->");
            if (arrow == std::string::npos) fail("expected u->v in " + item);
            arcs.emplace_back(std::stoi(trim(item.substr(0, arrow))),
                              std::stoi(trim(item.substr(arrow + 2))));
        }
        return arcs;
    };

    int k = -1;
    std::vector<Arc> required, forbidden;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        part = trim(part);
        if (part.empty()) continue;
        if (part.rfind("k=", 0) == 0) {
            k = std::stoi(part.substr(2));
        } else if (part.rfind("B:", 0) == 0) {
            required = parse_arcs(part.substr(2));
        } else if (part.rfind("C:", 0) == 0) {
            forbidden = parse_arcs(part.substr(2));
        } else {
            fail("unrecognized section: " + part);
        }
    }
    if (k < 1) fail("missing or invalid k");
    return make_pattern(k, std::move(required), std::move(forbidden));
}

std::string format_pattern(const Pattern& p) {
    auto arcs_str = [](std::vector<Arc> arcs) {
        std::sort(arcs.begin(), arcs.end());
        std::ostringstream os;
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (i) os << ",";
            os << arcs[i].first << "->" << arcs[i].second;
        }
        return os.str();
    };
    std::ostringstream os;
    os << "k=" << p.k << "; B: " << arcs_str(p.required) << "; C: " << arcs_str(p.forbidden);
    return os.str();
}

}  // namespace di

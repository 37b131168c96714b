#include "distideal/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace di {

namespace {

void check_vertex_count(int n) {
    if (n < 1) throw std::invalid_argument("digraph must have at least one vertex");
    if (n > 31) throw std::invalid_argument("digraph order cap is 31");
}

}  // namespace

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : n_(n), out_(n, 0) {
    check_vertex_count(n);
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("loop arcs are not allowed");
        out_[u] |= uint32_t(1) << v;
    }
}

int Digraph::arc_count() const {
    int c = 0;
    for (uint32_t m : out_) c += std::popcount(m);
    return c;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v)) result.emplace_back(u, v);
    return result;
}

int Digraph::out_degree(int u) const { return std::popcount(out_[u]); }

int Digraph::in_degree(int u) const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (has_arc(v, u)) ++c;
    return c;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("loop arcs are not allowed");
    out_[u] |= uint32_t(1) << v;
}

Digraph from_arc_list(int n, const std::vector<Arc>& arcs) { return Digraph(n, arcs); }

namespace {

uint32_t reachable_set(const Digraph& g, int start) {
    uint32_t seen = uint32_t(1) << start;
    uint32_t frontier = seen;
    while (frontier) {
        uint32_t next = 0;
        for (int u = 0; u < g.order(); ++u)
            if ((frontier >> u) & 1u) next |= g.out_mask(u);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

bool is_strong(const Digraph& g) {
    const uint32_t all = (g.order() == 31) ? ~uint32_t(0) >> 1
                                           : (uint32_t(1) << g.order()) - 1;
    if (reachable_set(g, 0) != all) return false;
    // Reverse reachability from 0 completes the check.
    Digraph rev(g.order(), {});
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.has_arc(u, v)) rev.add_arc(v, u);
    return reachable_set(rev, 0) == all;
}

std::vector<std::vector<int>> distance_table(const Digraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        dist[s][s] = 0;
        uint32_t seen = uint32_t(1) << s;
        uint32_t frontier = seen;
        int level = 0;
        while (frontier) {
            uint32_t next = 0;
            for (int u = 0; u < n; ++u)
                if ((frontier >> u) & 1u) next |= g.out_mask(u);
            next &= ~seen;
            ++level;
            for (int v = 0; v < n; ++v)
                if ((next >> v) & 1u) dist[s][v] = level;
            seen |= next;
            frontier = next;
        }
        for (int v = 0; v < n; ++v)
            if (dist[s][v] < 0)
                throw std::invalid_argument("distance table requires a strong digraph");
    }
    return dist;
}

int diameter(const Digraph& g) {
    auto dist = distance_table(g);
    int d = 0;
    for (const auto& row : dist)
        for (int x : row) d = std::max(d, x);
    return d;
}

MatrixKind matrix_kind_from_name(const std::string& name) {
    if (name == "D") return MatrixKind::D;
    if (name == "DL") return MatrixKind::DL;
    if (name == "DQ") return MatrixKind::DQ;
    if (name == "Ddeg") return MatrixKind::Ddeg;
    if (name == "DdegPlus") return MatrixKind::DdegPlus;
    throw std::invalid_argument("unknown matrix kind: " + name);
}

std::string matrix_kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::D: return "D";
        case MatrixKind::DL: return "DL";
        case MatrixKind::DQ: return "DQ";
        case MatrixKind::Ddeg: return "Ddeg";
        case MatrixKind::DdegPlus: return "DdegPlus";
    }
    return "?";
}

Digraph circuit(int n) {
    check_vertex_count(n);
    Digraph g(n, {});
    if (n >= 2)
        for (int u = 0; u < n; ++u) g.add_arc(u, (u + 1) % n);
    return g;
}

Digraph complete(int n) {
    check_vertex_count(n);
    Digraph g(n, {});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.add_arc(u, v);
    return g;
}

Digraph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("bipartite parts must be non-empty");
    Digraph g(m + n, {});
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) {
            g.add_arc(u, m + v);
            g.add_arc(m + v, u);
        }
    return g;
}

Digraph lambda(const LambdaParams& p) {
    if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0)
        throw std::invalid_argument("lambda parameters must be non-negative");
    const int n = p.order();
    if (n < 1) throw std::invalid_argument("lambda digraph must have at least one vertex");
    check_vertex_count(n);
    const int a0 = 0, b0 = p.a, c0 = p.a + p.b, d0 = p.a + p.b + p.c;
    Digraph g(n, {});
    auto join = [&](int from0, int fromN, int to0, int toN) {
        for (int u = from0; u < fromN; ++u)
            for (int v = to0; v < toN; ++v)
                if (u != v) g.add_arc(u, v);
    };
    join(a0, b0, a0, b0);  // K_a complete
    join(c0, d0, c0, d0);  // K_c complete
    join(a0, b0, b0, c0);  // K_a -> T_b
    join(b0, c0, c0, d0);  // T_b -> K_c
    join(c0, d0, d0, n);   // K_c -> T_d
    join(b0, c0, d0, n);   // T_b -> T_d
    join(d0, n, b0, c0);   // T_d -> T_b
    join(d0, n, a0, b0);   // T_d -> K_a
    return g;
}

uint64_t labeled_digraph_count(int n) {
    check_vertex_count(n);
    return uint64_t(1) << (uint64_t(n) * (n - 1));
}

namespace {

std::vector<Arc> arc_slots(int n) {
    std::vector<Arc> slots;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) slots.emplace_back(u, v);
    return slots;
}

Digraph digraph_from_mask(int n, const std::vector<Arc>& slots, uint64_t mask) {
    Digraph g(n, {});
    for (size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1u) g.add_arc(slots[i].first, slots[i].second);
    return g;
}

}  // namespace

void for_each_strong_in_range(int n, uint64_t lo, uint64_t hi,
                              const std::function<void(const Digraph&)>& fn) {
    check_vertex_count(n);
    if (n > 5) throw std::invalid_argument("strong enumeration is capped at n <= 5");
    const auto slots = arc_slots(n);
    for (uint64_t mask = lo; mask < hi; ++mask) {
        Digraph g = digraph_from_mask(n, slots, mask);
        if (is_strong(g)) fn(g);
    }
}

void for_each_strong(int n, const std::function<void(const Digraph&)>& fn) {
    for_each_strong_in_range(n, 0, labeled_digraph_count(n), fn);
}

namespace {

bool iso_search(const Digraph& g, const Digraph& h, std::vector<int>& map,
                std::vector<bool>& used, int u) {
    const int n = g.order();
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (g.out_degree(u) != h.out_degree(v) || g.in_degree(u) != h.in_degree(v))
            continue;
        bool ok = true;
        for (int w = 0; w < u && ok; ++w) {
            if (g.has_arc(u, w) != h.has_arc(v, map[w])) ok = false;
            if (g.has_arc(w, u) != h.has_arc(map[w], v)) ok = false;
        }
        if (!ok) continue;
        map[u] = v;
        used[v] = true;
        if (iso_search(g, h, map, used, u + 1)) return true;
        used[v] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Digraph& g, const Digraph& h) {
    if (g.order() != h.order()) return false;
    if (g.order() > 10) throw std::invalid_argument("isomorphism search is capped at n <= 10");
    if (g.arc_count() != h.arc_count()) return false;
    auto degree_profile = [](const Digraph& d) {
        std::vector<std::pair<int, int>> p;
        for (int u = 0; u < d.order(); ++u) p.emplace_back(d.out_degree(u), d.in_degree(u));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (degree_profile(g) != degree_profile(h)) return false;
    std::vector<int> map(g.order(), -1);
    std::vector<bool> used(g.order(), false);
    return iso_search(g, h, map, used, 0);
}

uint64_t canonical_arc_mask(const Digraph& g) {
    const int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical mask is capped at n <= 8");
    const auto slots = arc_slots(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t mask = 0;
        for (size_t i = 0; i < slots.size(); ++i)
            if (g.has_arc(perm[slots[i].first], perm[slots[i].second]))
                mask |= uint64_t(1) << i;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string format_digraph(const Digraph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << "\n";
    bool first = true;
    for (const auto& [u, v] : g.arcs()) {
        if (!first) os << ",";
        os << u << "->" << v;
        first = false;
    }
    os << "\n";
    return os.str();
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

Digraph parse_digraph(const std::string& text) {
    auto lines = split_lines(text);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw std::invalid_argument("empty digraph text");

    if (lines[0].rfind("n=", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(lines[0].substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed vertex count: " + lines[0]);
        }
        std::vector<Arc> arcs;
        if (lines.size() > 1 && !lines[1].empty()) {
            std::istringstream is(lines[1]);
            std::string item;
            while (std::getline(is, item, ',')) {
                auto pos = item.find("->");
                if (pos == std::string::npos)
                    throw std::invalid_argument("malformed arc: " + item);
                arcs.emplace_back(std::stoi(item.substr(0, pos)),
                                  std::stoi(item.substr(pos + 2)));
            }
        }
        return Digraph(n, arcs);
    }

    // 0/1 adjacency block, one row per line, optional whitespace.
    std::vector<std::vector<int>> rows;
    for (const auto& line : lines) {
        if (line.empty()) continue;
        std::vector<int> row;
        for (char ch : line) {
            if (ch == '0' || ch == '1') row.push_back(ch - '0');
            else if (ch != ' ' && ch != '\t')
                throw std::invalid_argument("adjacency rows must contain only 0/1");
        }
        rows.push_back(row);
    }
    const int n = int(rows.size());
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
        if (int(rows[u].size()) != n)
            throw std::invalid_argument("adjacency block must be square");
        for (int v = 0; v < n; ++v)
            if (rows[u][v]) arcs.emplace_back(u, v);
    }
    return Digraph(n, arcs);
}

}  // namespace di

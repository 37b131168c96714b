#ifndef DISTIDEAL_DIGRAPH_HPP
#define DISTIDEAL_DIGRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace di {

using Arc = std::pair<int, int>;

/// Simple digraph: no loops, no multiple arcs. Vertices are 0..n-1.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, const std::vector<Arc>& arcs);

    int order() const { return n_; }
    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1u; }
    int arc_count() const;
    std::vector<Arc> arcs() const;  // sorted by (u, v)
    uint32_t out_mask(int u) const { return out_[u]; }
    int out_degree(int u) const;
    int in_degree(int u) const;

    void add_arc(int u, int v);

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_ = 0;
    std::vector<uint32_t> out_;  // adjacency bitmasks, order <= 31
};

Digraph from_arc_list(int n, const std::vector<Arc>& arcs);

bool is_strong(const Digraph& g);

/// All-pairs BFS distance table. Throws if g is not strong.
std::vector<std::vector<int>> distance_table(const Digraph& g);

int diameter(const Digraph& g);

enum class MatrixKind { D, DL, DQ, Ddeg, DdegPlus };

MatrixKind matrix_kind_from_name(const std::string& name);
std::string matrix_kind_name(MatrixKind kind);

// Named families.
Digraph circuit(int n);
Digraph complete(int n);
Digraph complete_bipartite(int m, int n);

struct LambdaParams {
    int a = 0, b = 0, c = 0, d = 0;
    int order() const { return a + b + c + d; }
};

/// Four-block digraph with vertex blocks in order K_a, T_b, K_c, T_d.
Digraph lambda(const LambdaParams& p);

/// Calls fn for every labeled strong digraph on n vertices, in arc-bitmask
/// order. Arc index i corresponds to the i-th pair (u,v), u != v, ordered by
/// (u, v). Practical cap n <= 5.
void for_each_strong(int n, const std::function<void(const Digraph&)>& fn);

/// Same enumeration restricted to a sub-range of arc bitmasks [lo, hi).
void for_each_strong_in_range(int n, uint64_t lo, uint64_t hi,
                              const std::function<void(const Digraph&)>& fn);

uint64_t labeled_digraph_count(int n);  // 2^(n(n-1))

bool are_isomorphic(const Digraph& g, const Digraph& h);

/// Minimal arc bitmask over all vertex relabelings; usable as an isomorphism
/// class key for small n.
uint64_t canonical_arc_mask(const Digraph& g);

// Text format: "n=<count>\n" then comma-separated arcs "u->v" sorted by
// (u,v). The parser also accepts an n-line 0/1 adjacency block.
std::string format_digraph(const Digraph& g);
Digraph parse_digraph(const std::string& text);

}  // namespace di

#endif

#ifndef DISTIDEAL_PATTERN_HPP
#define DISTIDEAL_PATTERN_HPP

#include <optional>
#include <string>
#include <vector>

#include "distideal/digraph.hpp"

namespace di {

/// (U, B, C): k pattern vertices, required arcs B, forbidden arcs C.
/// Vertex pairs not listed in B or C are unconstrained.
struct Pattern {
    int k = 0;
    std::vector<Arc> required;
    std::vector<Arc> forbidden;
};

enum class BuiltinPattern { P4, F1, F2, F3, F4, F5, F6 };

Pattern builtin_pattern(BuiltinPattern name);
Pattern builtin_pattern(const std::string& name);

/// Injective map from pattern vertices to g's vertices realizing every
/// required arc and avoiding every forbidden arc; first hit in lexicographic
/// tuple order, or nullopt.
std::optional<std::vector<int>> contains_pattern(const Digraph& g, const Pattern& p);

/// True iff none of F1..F5 embeds into g. Requires g strong.
bool is_forbidden_pattern_free(const Digraph& g);

enum class FamilyTag { Circuit3, Lambda, NotMember };

struct ClassificationResult {
    FamilyTag tag = FamilyTag::NotMember;
    LambdaParams params;                       // valid when tag == Lambda
    std::vector<int> block_of;                 // per-vertex block 0..3 when tag == Lambda
    std::string witness_pattern;               // pattern name when tag == NotMember
    std::vector<int> witness_embedding;        // embedding of that pattern
};

/// Decides membership in the one-trivial-ideal family: C3, Lambda(a,b,c,d)
/// with a recovered block partition, or a forbidden-pattern witness.
ClassificationResult classify(const Digraph& g);

/// F6-freeness of an undirected graph given as a symmetric digraph.
bool is_f6_free_graph(const Digraph& g);

// Text format: "k=<count>; B: u->v,...; C: u->v,..."
Pattern parse_pattern(const std::string& text);
std::string format_pattern(const Pattern& p);

}  // namespace di

#endif

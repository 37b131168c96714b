#ifndef DISTIDEAL_IDEAL_HPP
#define DISTIDEAL_IDEAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "distideal/poly.hpp"

namespace di {

/// Strong Groebner basis over Z: closed under reduction of S-polynomials and
/// GCD-polynomials of all pairs. Iteration-capped; throws on cap.
std::vector<MultiPoly> strong_groebner(const std::vector<MultiPoly>& gens,
                                       MonomialOrder order = MonomialOrder::Degrevlex);

/// Remainder of p with no term divisible — monomial-wise and Euclidean on the
/// leading coefficient — by any basis leading term. For a strong basis,
/// normal_form(p) == 0 iff p lies in the ideal.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder order = MonomialOrder::Degrevlex);

/// Polynomial ideal with a lazily cached strong Groebner basis.
class Ideal {
public:
    Ideal() = default;
    Ideal(VarContextPtr ctx, std::vector<MultiPoly> gens);

    const VarContextPtr& context() const { return ctx_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }

    const std::vector<MultiPoly>& basis(MonomialOrder order = MonomialOrder::Degrevlex) const;
    bool has_cached_basis() const { return !bases_.empty(); }

private:
    VarContextPtr ctx_;
    std::vector<MultiPoly> gens_;
    mutable std::map<MonomialOrder, std::vector<MultiPoly>> bases_;
};

Ideal distance_ideal(const Digraph& g, int i);
Ideal univariate_distance_ideal(const Digraph& g, int i);

/// True iff 1 lies in the ideal. Fast constant/linear screens run before any
/// Groebner computation.
bool is_trivial(const Ideal& ideal);

bool ideals_equal(const Ideal& a, const Ideal& b);

struct TrivialityProfile {
    std::vector<bool> trivial;  // index i-1 holds "I_i trivial"
    int phi_value = 0;
};

TrivialityProfile phi(const Digraph& g);

/// Non-negative generator of the evaluated integer ideal: gcd of generator
/// evaluations at the point.
mpz_class evaluate_ideal(const Ideal& ideal, const std::vector<mpz_class>& point);

/// Fast exact decision of whether the second distance ideal of a strong
/// digraph with the given distance table is trivial. Uses constant/linear
/// screens on the structured 2-minors and falls back to a Groebner run.
bool second_ideal_trivial(const std::vector<std::vector<int>>& dist);

// ----- basis audit hooks (post-hoc closure + random-combination checks) ----

struct GroebnerAuditStats {
    long bases_checked = 0;
    long closure_failures = 0;
    long combo_trials = 0;
    long combo_failures = 0;
};

/// When enabled, every basis emitted by strong_groebner is re-checked post
/// hoc: all S- and GCD-polynomials of basis pairs must reduce to 0, and
/// seeded random integer-polynomial combinations of the input generators
/// must have normal form 0.
void set_groebner_audit(bool enabled, uint64_t seed = 0, int combo_trials_per_basis = 2);
GroebnerAuditStats groebner_audit_stats();
void reset_groebner_audit_stats();

/// Independent closure check usable on any claimed strong basis.
bool basis_closure_holds(const std::vector<MultiPoly>& basis, MonomialOrder order);

}  // namespace di

#endif

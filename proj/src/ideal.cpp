#include "distideal/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <stdexcept>

namespace di {

namespace {

bool monomial_divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
    Exponents q(b.size());
    for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
    Exponents l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

/// Quotient q and remainder r with c == q*b + r and 0 <= r < |b|.
void euclid_div(const mpz_class& c, const mpz_class& b, mpz_class& q, mpz_class& r) {
    mpz_class bb = abs(b);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), bb.get_mpz_t());
    if (b < 0) q = -q;
}

/// lcm-of-leading-terms S-polynomial of f and g.
MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Exponents gamma = monomial_lcm(lf.exp, lg.exp);
    mpz_class cl = lcm(lf.coef, lg.coef);
    MultiPoly s(f.context());
    s.add_scaled(f, cl / lf.coef, monomial_quotient(gamma, lf.exp));
    s.add_scaled(g, -cl / lg.coef, monomial_quotient(gamma, lg.exp));
    return s;
}

/// Bezout combination whose leading term is gcd(LC f, LC g) * lcm(LM f, LM g).
MultiPoly gcd_poly(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Exponents gamma = monomial_lcm(lf.exp, lg.exp);
    mpz_class d, u, v;
    mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), lf.coef.get_mpz_t(),
               lg.coef.get_mpz_t());
    MultiPoly p(f.context());
    p.add_scaled(f, u, monomial_quotient(gamma, lf.exp));
    p.add_scaled(g, v, monomial_quotient(gamma, lg.exp));
    return p;
}

// --------------------------- audit machinery -------------------------------

struct AuditState {
    std::atomic<bool> enabled{false};
    std::mutex mu;
    uint64_t seed = 0;
    int combo_trials = 2;
    uint64_t call_counter = 0;
    GroebnerAuditStats stats;
};

AuditState& audit() {
    static AuditState s;
    return s;
}

void audit_basis(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& basis,
                 MonomialOrder order);

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      MonomialOrder order) {
    MultiPoly work = p;
    MultiPoly remainder(p.context());
    while (!work.is_zero()) {
        const Term lead = work.leading_term(order);
        bool progressed = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Term& lg = g.leading_term(order);
            if (!monomial_divides(lg.exp, lead.exp)) continue;
            mpz_class q, r;
            euclid_div(lead.coef, lg.coef, q, r);
            if (q == 0) continue;
            work.add_scaled(g, -q, monomial_quotient(lead.exp, lg.exp));
            progressed = true;
            break;
        }
        if (!progressed) {
            // Move the irreducible leading term to the remainder.
            MultiPoly t = MultiPoly::from_terms(p.context(), {lead});
            remainder = remainder + t;
            work = work - t;
        }
    }
    return remainder;
}

std::vector<MultiPoly> strong_groebner(const std::vector<MultiPoly>& gens,
                                       MonomialOrder order) {
    std::vector<MultiPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);

    // Inter-reduce the inputs; this typically shrinks minor-generated sets a
    // lot. Each element is pulled out, reduced against the rest in place, and
    // re-inserted (or dropped) without copying the whole working set.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            MultiPoly p = std::move(basis[i]);
            std::swap(basis[i], basis.back());
            basis.pop_back();
            MultiPoly r = normal_form(p, basis, order);
            if (r != p) changed = true;
            if (!r.is_zero()) basis.push_back(std::move(r));
        }
    }

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    long iterations = 0;
    const long cap = 1000000;
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (++iterations > cap)
            throw std::runtime_error("strong basis computation exceeded iteration cap");
        for (int which = 0; which < 2; ++which) {
            MultiPoly combo = which == 0 ? s_poly(basis[i], basis[j], order)
                                         : gcd_poly(basis[i], basis[j], order);
            MultiPoly r = normal_form(combo, basis, order);
            if (r.is_zero()) continue;
            // Keep leading coefficients positive for a canonical-leaning basis.
            if (r.leading_term(order).coef < 0) r = -r;
            for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
            basis.push_back(std::move(r));
        }
    }

    // Prune: drop g when another element's leading term divides g's (monomial
    // and coefficient) and g still reduces to zero against the rest.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            const Term& li = basis[i].leading_term(order);
            bool dominated = false;
            for (size_t j = 0; j < basis.size() && !dominated; ++j) {
                if (j == i) continue;
                const Term& lj = basis[j].leading_term(order);
                if (monomial_divides(lj.exp, li.exp) && li.coef % lj.coef == 0)
                    dominated = true;
            }
            if (!dominated) continue;
            std::vector<MultiPoly> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            if (normal_form(basis[i], others, order).is_zero()) {
                basis.erase(basis.begin() + long(i));
                --i;
                changed = true;
            }
        }
    }

    for (auto& g : basis)
        if (g.leading_term(order).coef < 0) g = -g;

    if (audit().enabled.load(std::memory_order_relaxed)) audit_basis(gens, basis, order);
    return basis;
}

bool basis_closure_holds(const std::vector<MultiPoly>& basis, MonomialOrder order) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (!normal_form(s_poly(basis[i], basis[j], order), basis, order).is_zero())
                return false;
            if (!normal_form(gcd_poly(basis[i], basis[j], order), basis, order).is_zero())
                return false;
        }
    return true;
}

namespace {

void audit_basis(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& basis,
                 MonomialOrder order) {
    uint64_t seed;
    int trials;
    {
        std::lock_guard<std::mutex> lock(audit().mu);
        seed = audit().seed + 0x9e3779b97f4a7c15ULL * ++audit().call_counter;
        trials = audit().combo_trials;
    }
    bool closure = basis_closure_holds(basis, order);

    std::mt19937_64 rng(seed);
    long failures = 0;
    long done = 0;
    if (!gens.empty()) {
        const size_t arity = gens.front().context() ? gens.front().context()->arity() : 0;
        std::uniform_int_distribution<int> coef_dist(-3, 3);
        std::uniform_int_distribution<int> exp_dist(0, 2);
        for (int t = 0; t < trials; ++t) {
            MultiPoly combo(gens.front().context());
            for (const auto& g : gens) {
                mpz_class c = coef_dist(rng);
                Exponents e(arity, 0);
                for (auto& ei : e) ei = exp_dist(rng);
                combo.add_scaled(g, c, e);
            }
            ++done;
            if (!normal_form(combo, basis, order).is_zero()) ++failures;
        }
    }

    std::lock_guard<std::mutex> lock(audit().mu);
    ++audit().stats.bases_checked;
    if (!closure) ++audit().stats.closure_failures;
    audit().stats.combo_trials += done;
    audit().stats.combo_failures += failures;
}

}  // namespace

void set_groebner_audit(bool enabled, uint64_t seed, int combo_trials_per_basis) {
    std::lock_guard<std::mutex> lock(audit().mu);
    audit().seed = seed;
    audit().combo_trials = combo_trials_per_basis;
    audit().enabled.store(enabled, std::memory_order_relaxed);
}

GroebnerAuditStats groebner_audit_stats() {
    std::lock_guard<std::mutex> lock(audit().mu);
    return audit().stats;
}

void reset_groebner_audit_stats() {
    std::lock_guard<std::mutex> lock(audit().mu);
    audit().stats = GroebnerAuditStats{};
    audit().call_counter = 0;
}

// ------------------------------ Ideal --------------------------------------

Ideal::Ideal(VarContextPtr ctx, std::vector<MultiPoly> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

const std::vector<MultiPoly>& Ideal::basis(MonomialOrder order) const {
    auto it = bases_.find(order);
    if (it == bases_.end()) it = bases_.emplace(order, strong_groebner(gens_, order)).first;
    return it->second;
}

Ideal distance_ideal(const Digraph& g, int i) {
    if (i < 1 || i > g.order()) throw std::invalid_argument("ideal index out of range");
    SymMatrix m = dx_matrix(g);
    return Ideal(m.context(), minors(m, i));
}

Ideal univariate_distance_ideal(const Digraph& g, int i) {
    if (i < 1 || i > g.order()) throw std::invalid_argument("ideal index out of range");
    SymMatrix m = dt_matrix(g);
    return Ideal(m.context(), minors(m, i));
}

namespace {

struct LinearShape {
    int var;
    mpz_class a;  // coefficient of the variable
    mpz_class c;  // constant term
};

/// Classifies p as constant, a one-variable linear polynomial, or neither.
bool as_linear(const MultiPoly& p, LinearShape& out) {
    int var = -1;
    mpz_class a = 0, c = 0;
    for (const auto& t : p.terms()) {
        const int d = total_degree(t.exp);
        if (d == 0) {
            c = t.coef;
        } else if (d == 1) {
            int v = -1;
            for (size_t i = 0; i < t.exp.size(); ++i)
                if (t.exp[i] == 1) v = int(i);
            if (var != -1 && var != v) return false;
            var = v;
            a = t.coef;
        } else {
            return false;
        }
    }
    if (var < 0) return false;
    out = LinearShape{var, a, c};
    return true;
}

/// gcd-based screen: returns 1 if the screen certifies triviality, 0 if it
/// certifies non-triviality, -1 if undecided.
int triviality_screen(const std::vector<MultiPoly>& gens, size_t arity) {
    mpz_class g = 0;
    std::vector<LinearShape> linears;
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        if (p.is_constant()) {
            g = gcd(g, p.constant_value());
        } else {
            LinearShape ls;
            if (as_linear(p, ls)) linears.push_back(std::move(ls));
        }
    }
    if (g == 1) return 1;
    // Eliminate a shared variable between two linear generators:
    // a1*x + c1 and a2*x + c2 combine to the constant a1*c2 - a2*c1.
    for (size_t i = 0; i < linears.size() && g != 1; ++i)
        for (size_t j = i + 1; j < linears.size() && g != 1; ++j)
            if (linears[i].var == linears[j].var)
                g = gcd(g, linears[i].a * linears[j].c - linears[j].a * linears[i].c);
    if (g == 1) return 1;

    // If the evaluation at any integer point generates a proper ideal of Z,
    // the polynomial ideal cannot contain 1.
    const std::vector<mpz_class> fills = {0, 1, 2, -1, 3};
    for (const auto& f : fills) {
        std::vector<mpz_class> point(arity, f);
        mpz_class e = 0;
        for (const auto& p : gens) e = gcd(e, p.evaluate(point));
        if (e != 1) return 0;
    }
    return -1;
}

}  // namespace

bool is_trivial(const Ideal& ideal) {
    const auto& gens = ideal.generators();
    if (!ideal.has_cached_basis()) {
        int screen = triviality_screen(gens, ideal.context()->arity());
        if (screen >= 0) return screen == 1;
    }
    MultiPoly one = MultiPoly::constant(ideal.context(), 1);
    return normal_form(one, ideal.basis()).is_zero();
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
    if (!a.context() || !b.context() || !(*a.context() == *b.context()))
        throw std::invalid_argument("ideal comparison requires matching variable contexts");
    const auto& ba = a.basis();
    const auto& bb = b.basis();
    for (const auto& g : a.generators())
        if (!normal_form(g, bb).is_zero()) return false;
    for (const auto& g : b.generators())
        if (!normal_form(g, ba).is_zero()) return false;
    return true;
}

TrivialityProfile phi(const Digraph& g) {
    const int n = g.order();
    TrivialityProfile profile;
    profile.trivial.assign(n, false);
    bool still_trivial = true;
    for (int i = 1; i <= n; ++i) {
        // The ideals form a descending chain, so triviality is monotone.
        if (still_trivial) still_trivial = is_trivial(distance_ideal(g, i));
        profile.trivial[i - 1] = still_trivial;
        if (still_trivial) ++profile.phi_value;
    }
    return profile;
}

mpz_class evaluate_ideal(const Ideal& ideal, const std::vector<mpz_class>& point) {
    mpz_class g = 0;
    for (const auto& p : ideal.generators()) g = gcd(g, p.evaluate(point));
    return g;
}

bool second_ideal_trivial(const std::vector<std::vector<int>>& dist) {
    const int n = int(dist.size());
    if (n < 2) return false;

    // 2x2 minors of diag(x) + D come in three shapes, split by the overlap of
    // the row pair {i,j} and column pair {k,l}.
    mpz_class g = 0;                                       // gcd of constant minors
    std::vector<std::vector<std::pair<mpz_class, mpz_class>>> lin(n);  // (a, c) per var

    for (int i = 0; i < n && g != 1; ++i)
        for (int j = i + 1; j < n && g != 1; ++j)
            for (int k = 0; k < n && g != 1; ++k)
                for (int l = k + 1; l < n && g != 1; ++l) {
                    const bool ri = (k == i || l == i), rj = (k == j || l == j);
                    if (ri && rj) continue;  // bilinear x_i*x_j - d_ij*d_ji
                    auto e = [&](int r, int c) {
                        return mpz_class(r == c ? 0 : dist[r][c]);
                    };
                    if (!ri && !rj) {
                        g = gcd(g, e(i, k) * e(j, l) - e(i, l) * e(j, k));
                    } else {
                        // One diagonal cell: det = x_v * d + constant.
                        const int v = ri ? i : j;
                        const int o = ri ? j : i;       // other row
                        const int c2 = (k == v) ? l : k;  // off-diagonal column
                        const bool diag_first = (k == v);
                        // rows (v, o), cols (v, c2) up to column order/sign.
                        mpz_class a = e(o, c2);
                        mpz_class c = -e(v, c2) * e(o, v);
                        if (!diag_first) { /* column swap flips sign; gcd math below is sign-blind */ }
                        lin[v].emplace_back(a, c);
                    }
                }
    if (g == 1) return true;
    for (int v = 0; v < n && g != 1; ++v)
        for (size_t i = 0; i < lin[v].size() && g != 1; ++i)
            for (size_t j = i + 1; j < lin[v].size() && g != 1; ++j)
                g = gcd(g, lin[v][i].first * lin[v][j].second -
                               lin[v][j].first * lin[v][i].second);
    if (g == 1) return true;

    // Non-triviality screen: a trivial ideal evaluates to <1> everywhere.
    auto ctx = x_context(n);
    SymMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = (i == j) ? MultiPoly::variable(ctx, i)
                                  : MultiPoly::constant(ctx, dist[i][j]);
    for (const mpz_class& f : {mpz_class(0), mpz_class(1), mpz_class(2), mpz_class(-1)}) {
        std::vector<mpz_class> point(n, f);
        BigMatrix eval = m.evaluate(point);
        if (gcd_of_minors(eval, 2) != 1) return false;
    }

    Ideal ideal(ctx, minors(m, 2));
    MultiPoly one = MultiPoly::constant(ctx, 1);
    return normal_form(one, ideal.basis()).is_zero();
}

}  // namespace di

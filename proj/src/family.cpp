#include "distideal/family.hpp"

#include <complex>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace di {

Ideal ClosedFormIdeal::in_digraph_context(int n) const {
    auto target = x_context(n);
    std::vector<MultiPoly> remapped;
    remapped.reserve(generators.size());
    for (const auto& g : generators) remapped.push_back(g.remap(target, var_map));
    return Ideal(target, remapped);
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
    const int k = int(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Calls fn(subset) for every size-k subset of {0..n-1}.
template <typename F>
void for_each_subset(int n, int k, F fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
        fn(idx);
    } while (next_combination(idx, n));
}

MultiPoly product_over(const std::vector<MultiPoly>& factors, const std::vector<int>& idx,
                       const VarContextPtr& ctx, int omit = -1) {
    MultiPoly p = MultiPoly::constant(ctx, 1);
    for (int i : idx)
        if (i != omit) p = p * factors[i];
    return p;
}

}  // namespace

ClosedFormIdeal ideal_complete(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("ideal_complete: bad parameters");
    auto ctx = x_context(n);
    // D_X(K_n) = diag(x_1-1..x_n-1) + J, so the subset products run over the
    // factors x_i - 1 and det = prod_i(x_i-1) + sum_j prod_{i != j}(x_i-1).
    std::vector<MultiPoly> factors;
    for (int i = 0; i < n; ++i)
        factors.push_back(MultiPoly::variable(ctx, i) - MultiPoly::constant(ctx, 1));
    ClosedFormIdeal out;
    out.family = "complete";
    out.ctx = ctx;
    for (int i = 0; i < n; ++i) out.var_map.push_back(i);
    if (k < n) {
        for_each_subset(n, k - 1, [&](const std::vector<int>& idx) {
            out.generators.push_back(product_over(factors, idx, ctx));
        });
    } else {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        MultiPoly det = product_over(factors, all, ctx);
        for (int j = 0; j < n; ++j) det = det + product_over(factors, all, ctx, j);
        out.generators.push_back(det);
    }
    return out;
}

ClosedFormIdeal ideal_star(int m, int k) {
    if (m < 1 || k < 1 || k > m + 1) throw std::invalid_argument("ideal_star: bad parameters");
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("y");
    auto ctx = make_context(names);
    std::vector<MultiPoly> factors;  // x_i - 2
    for (int i = 0; i < m; ++i)
        factors.push_back(MultiPoly::variable(ctx, i) - MultiPoly::constant(ctx, 2));
    MultiPoly y = MultiPoly::variable(ctx, m);
    MultiPoly two_y_minus_1 = y * mpz_class(2) - MultiPoly::constant(ctx, 1);

    ClosedFormIdeal out;
    out.family = "star";
    out.ctx = ctx;
    for (int i = 0; i < m; ++i) out.var_map.push_back(i);  // leaves are vertices 0..m-1
    out.var_map.push_back(m);                              // hub is vertex m
    if (k <= m) {
        for_each_subset(m, k - 2, [&](const std::vector<int>& idx) {
            out.generators.push_back(two_y_minus_1 * product_over(factors, idx, ctx));
        });
        for_each_subset(m, k - 1, [&](const std::vector<int>& idx) {
            out.generators.push_back(product_over(factors, idx, ctx));
        });
    } else {  // determinant, k == m + 1
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        MultiPoly det = y * product_over(factors, all, ctx);
        for (int i = 0; i < m; ++i)
            det = det + two_y_minus_1 * product_over(factors, all, ctx, i);
        out.generators.push_back(det);
    }
    return out;
}

namespace {

/// Shared construction for the two solved Lambda families. The equivalent
/// matrix has a distinguished first row/column carrying two coefficient
/// polynomials (coef0 against the first group, coef1 against the second) and
/// a diagonal of simple linear factors; its k-th determinantal ideal is
/// generated by the (k-1)-subset diagonal products together with each
/// coefficient times the (k-2)-subset products avoiding that group.
ClosedFormIdeal lambda_closed_form(const std::string& family, const VarContextPtr& ctx,
                                   const MultiPoly& pivot_var, const MultiPoly& coef0,
                                   const MultiPoly& coef1,
                                   const std::vector<MultiPoly>& factors, int n0, int k,
                                   std::vector<int> var_map) {
    const int n = int(factors.size());  // group 0 = indices [0, n0), group 1 = rest
    ClosedFormIdeal out;
    out.family = family;
    out.ctx = ctx;
    out.var_map = std::move(var_map);
    if (k < 1 || k > n + 1) throw std::invalid_argument(family + ": index out of range");
    if (k <= n) {
        for_each_subset(n, k - 1, [&](const std::vector<int>& idx) {
            out.generators.push_back(product_over(factors, idx, ctx));
        });
        for_each_subset(n, k - 2, [&](const std::vector<int>& idx) {
            int in0 = 0;
            for (int i : idx)
                if (i < n0) ++in0;
            if (in0 < n0)
                out.generators.push_back(coef0 * product_over(factors, idx, ctx));
            if (int(idx.size()) - in0 < n - n0)
                out.generators.push_back(coef1 * product_over(factors, idx, ctx));
        });
    } else {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        MultiPoly det = pivot_var * product_over(factors, all, ctx);
        for (int i = 0; i < n; ++i) {
            const MultiPoly& c = i < n0 ? coef0 : coef1;
            det = det - c * product_over(factors, all, ctx, i);
        }
        out.generators.push_back(det);
    }
    return out;
}

}  // namespace

ClosedFormIdeal ideal_lambda_ab01(int a, int b, int k) {
    if (a < 0 || b < 1) throw std::invalid_argument("ideal_lambda_ab01: bad parameters");
    std::vector<std::string> names = {"x"};
    for (int i = 1; i <= b; ++i) names.push_back("y" + std::to_string(i));
    for (int j = 1; j <= a; ++j) names.push_back("z" + std::to_string(j));
    auto ctx = make_context(names);
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly one = MultiPoly::constant(ctx, 1);
    MultiPoly two = MultiPoly::constant(ctx, 2);
    std::vector<MultiPoly> factors;
    for (int i = 0; i < b; ++i) factors.push_back(MultiPoly::variable(ctx, 1 + i) - two);
    for (int j = 0; j < a; ++j)
        factors.push_back(MultiPoly::variable(ctx, 1 + b + j) - one);
    // Vertex blocks of lambda(a,b,0,1): K_a = 0..a-1, T_b = a..a+b-1, hub = a+b.
    std::vector<int> var_map = {a + b};
    for (int i = 0; i < b; ++i) var_map.push_back(a + i);
    for (int j = 0; j < a; ++j) var_map.push_back(j);
    return lambda_closed_form("lambda_ab01", ctx, x, one - x * 2, two - x, factors, b, k,
                              std::move(var_map));
}

ClosedFormIdeal ideal_lambda_a10d(int a, int d, int k) {
    if (a < 0 || d < 1) throw std::invalid_argument("ideal_lambda_a10d: bad parameters");
    std::vector<std::string> names = {"y"};
    for (int j = 1; j <= a; ++j) names.push_back("z" + std::to_string(j));
    for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    auto ctx = make_context(names);
    MultiPoly y = MultiPoly::variable(ctx, 0);
    MultiPoly one = MultiPoly::constant(ctx, 1);
    MultiPoly two = MultiPoly::constant(ctx, 2);
    std::vector<MultiPoly> factors;
    for (int j = 0; j < a; ++j) factors.push_back(MultiPoly::variable(ctx, 1 + j) - one);
    for (int i = 0; i < d; ++i)
        factors.push_back(MultiPoly::variable(ctx, 1 + a + i) - two);
    // Vertex blocks of lambda(a,1,0,d): K_a = 0..a-1, hub = a, T_d = a+1..a+d.
    std::vector<int> var_map = {a};
    for (int j = 0; j < a; ++j) var_map.push_back(j);
    for (int i = 0; i < d; ++i) var_map.push_back(a + 1 + i);
    return lambda_closed_form("lambda_a10d", ctx, y, two - y, one - y * 2, factors, a, k,
                              std::move(var_map));
}

ClosedFormIdeal second_ideal_lambda(const LambdaParams& p) {
    const int n = p.order();
    if (n < 2 || !is_strong(lambda(p)))
        throw std::invalid_argument("second_ideal_lambda requires a strong digraph, n >= 2");
    const int a = p.a, b = p.b, c = p.c, d = p.d;
    std::vector<std::string> names;
    for (int i = 1; i <= a + c; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= b + d; ++j) names.push_back("y" + std::to_string(j));
    auto ctx = make_context(names);
    auto x = [&](int i) { return MultiPoly::variable(ctx, i - 1); };          // 1-based
    auto y = [&](int j) { return MultiPoly::variable(ctx, a + c + j - 1); };  // 1-based
    auto konst = [&](long v) { return MultiPoly::constant(ctx, v); };

    ClosedFormIdeal out;
    out.family = "second_ideal_lambda";
    out.ctx = ctx;
    // x variables follow the clique vertices (K_a then K_c), y variables the
    // independent vertices (T_b then T_d).
    for (int i = 0; i < a; ++i) out.var_map.push_back(i);
    for (int i = 0; i < c; ++i) out.var_map.push_back(a + b + i);
    for (int j = 0; j < b; ++j) out.var_map.push_back(a + j);
    for (int j = 0; j < d; ++j) out.var_map.push_back(a + b + c + j);

    auto& gens = out.generators;
    if (a == 2 && b == 0 && c == 0 && d == 0) {
        gens.push_back(x(1) * x(2) - konst(1));
    } else if (c == 2 && a == 0 && b == 0 && d == 0) {
        gens.push_back(x(1) * x(2) - konst(1));
    } else if (a >= 3 && b == 0 && c == 0 && d == 0) {
        for (int i = 1; i <= a; ++i) gens.push_back(x(i) - konst(1));
    } else if (c >= 3 && a == 0 && b == 0 && d == 0) {
        for (int i = 1; i <= c; ++i) gens.push_back(x(i) - konst(1));
    } else if (a == 0 && c == 0 && b == 1 && d == 1) {
        gens.push_back(y(1) * y(2) - konst(1));
    } else if (a == 0 && c == 0 && d == 1 && b >= 2) {
        for (int j = 1; j <= b; ++j) gens.push_back(y(j) - konst(2));
        gens.push_back(y(b + 1) * 2 - konst(1));
    } else if (a == 0 && c == 0 && b == 1 && d >= 2) {
        gens.push_back(y(1) * 2 - konst(1));
        for (int j = 2; j <= d + 1; ++j) gens.push_back(y(j) - konst(2));
    } else {
        gens.push_back(konst(3));
        for (int i = 1; i <= a + c; ++i) gens.push_back(x(i) - konst(1));
        for (int j = 1; j <= b + d; ++j) gens.push_back(y(j) - konst(2));
    }
    return out;
}

ClosedFormIdeal third_ideal_circuit(int n) {
    if (n < 5) throw std::invalid_argument("third_ideal_circuit requires n >= 5");
    auto ctx = x_context(n);
    ClosedFormIdeal out;
    out.family = "third_ideal_circuit";
    out.ctx = ctx;
    for (int i = 0; i < n; ++i) {
        out.generators.push_back(MultiPoly::variable(ctx, i));
        out.var_map.push_back(i);
    }
    out.generators.push_back(MultiPoly::constant(ctx, n));
    return out;
}

SnfResult snf_circuit(int n) {
    if (n < 3) throw std::invalid_argument("snf_circuit requires n >= 3");
    SnfResult r;
    r.diagonal.assign(n, 1);
    for (int i = 2; i < n - 1; ++i) r.diagonal[i] = n;
    r.diagonal[n - 1] = mpz_class(n) * n * (n - 1) / 2;
    r.rank = n;
    return r;
}

SnfResult snf_lambda_ab01(int a, int b) {
    if (a < 0 || b < 1) throw std::invalid_argument("snf_lambda_ab01: bad parameters");
    SnfResult r;
    if (b == 1) {
        r.diagonal.assign(a + 2, 1);
        r.diagonal[a + 1] = 4 * a + 1;
    } else {
        r.diagonal.assign(a + b + 1, 1);
        for (int i = a + 2; i < a + b; ++i) r.diagonal[i] = 2;
        r.diagonal[a + b] = 8 * a + 2 * b;
    }
    r.rank = int(r.diagonal.size());
    return r;
}

SnfResult snf_lambda_a10d(int a, int d) {
    if (a < 0 || d < 1) throw std::invalid_argument("snf_lambda_a10d: bad parameters");
    if (d == 1) return snf_lambda_ab01(a, 1);
    SnfResult r;
    r.diagonal.assign(a + d + 1, 1);
    for (int i = a + 2; i < a + d; ++i) r.diagonal[i] = 2;
    r.diagonal[a + d] = 8 * a + 2 * d;
    r.rank = int(r.diagonal.size());
    return r;
}

ClosedFormIdeal conjectured_univariate_circuit(int n, int k) {
    if (k < 4 || k > n - 2)
        throw std::invalid_argument("conjectured_univariate_circuit requires 4 <= k <= n-2");
    auto ctx = t_context();
    ClosedFormIdeal out;
    out.family = "conjectured_univariate_circuit";
    out.ctx = ctx;
    out.var_map = {0};
    mpz_class npow = 1;
    for (int i = 0; i <= k - 2; ++i) {
        // t^{k-2-i} * n^i
        out.generators.push_back(
            MultiPoly::from_terms(ctx, {Term{Exponents{k - 2 - i}, npow}}));
        npow *= n;
    }
    return out;
}

CirculantCheckReport circulant_det_check(int n, double tolerance) {
    if (n < 3 || n > 16)
        throw std::invalid_argument("circulant_det_check requires 3 <= n <= 16");
    CirculantCheckReport report;
    report.n = n;
    report.tolerance = tolerance;

    // Exact coefficients of det(t*I + D(C_n)) by interpolation: the degree is
    // n, so n+1 integer evaluations determine it over Q, and the result is
    // integral.
    Digraph g = circuit(n);
    BigMatrix d = distance_matrix(g, MatrixKind::D);
    std::vector<mpq_class> values(n + 1);
    for (int t = 0; t <= n; ++t) {
        BigMatrix m = d;
        for (int i = 0; i < n; ++i) m.at(i, i) += t;
        values[t] = determinant(m);
    }
    // Newton forward divided differences on nodes 0..n, then expansion.
    std::vector<mpq_class> dd = values;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(level);
    std::vector<mpq_class> exact(n + 1, 0);  // coefficient of t^deg
    std::vector<mpq_class> basis = {1};      // product (t-0)(t-1)...
    for (int level = 0; level <= n; ++level) {
        for (size_t deg = 0; deg < basis.size(); ++deg) exact[deg] += dd[level] * basis[deg];
        if (level < n) {
            basis.push_back(0);
            for (size_t deg = basis.size() - 1; deg > 0; --deg)
                basis[deg] = basis[deg - 1] - mpq_class(level) * basis[deg];
            basis[0] = -mpq_class(level) * basis[0];
        }
    }

    // Numerical coefficients from the circulant eigenvalue product
    // prod_j (t + sum_m m*omega^{mj}), omega = e^{2*pi*i*j/n}.
    using cd = std::complex<double>;
    std::vector<cd> coefs = {1.0};
    const double tau = 8.0 * std::atan(1.0);
    for (int j = 0; j < n; ++j) {
        cd lambda = 0;
        for (int m = 1; m < n; ++m) {
            double ang = tau * double(m) * double(j) / double(n);
            lambda += double(m) * cd(std::cos(ang), std::sin(ang));
        }
        std::vector<cd> next(coefs.size() + 1, 0.0);
        for (size_t deg = 0; deg < coefs.size(); ++deg) {
            next[deg + 1] += coefs[deg];      // times t
            next[deg] += coefs[deg] * lambda;  // times lambda_j
        }
        coefs = std::move(next);
    }

    report.deviations.resize(n + 1);
    report.max_deviation = 0;
    for (int deg = 0; deg <= n; ++deg) {
        double ex = exact[deg].get_d();
        double dev = std::abs(coefs[deg] - cd(ex, 0.0)) / std::max(1.0, std::abs(ex));
        report.deviations[deg] = dev;
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    report.pass = report.max_deviation <= tolerance;
    return report;
}

}  // namespace di

#ifndef DISTIDEAL_FAMILY_HPP
#define DISTIDEAL_FAMILY_HPP

#include <string>
#include <vector>

#include "distideal/bigmatrix.hpp"
#include "distideal/ideal.hpp"
#include "distideal/poly.hpp"

namespace di {

/// Closed-form generator set for one solved family, in the family's
/// canonical variable context.
struct ClosedFormIdeal {
    std::string family;
    VarContextPtr ctx;
    std::vector<MultiPoly> generators;
    /// var_map[i] = digraph vertex whose diagonal variable corresponds to
    /// context variable i, for comparison against minor-generated ideals.
    std::vector<int> var_map;

    Ideal as_ideal() const { return Ideal(ctx, generators); }
    /// The same ideal re-expressed over x0..x_{n-1} in digraph vertex order.
    Ideal in_digraph_context(int n) const;
};

/// I_k(K_n): products over (k-1)-subsets of (x_i - 1); determinant for k = n.
ClosedFormIdeal ideal_complete(int n, int k);

/// I_k(K_{m,1}) over (x_1..x_m, y).
ClosedFormIdeal ideal_star(int m, int k);

/// I_k(Lambda(a,b,0,1)) over (x, y_1..y_b, z_1..z_a); the quotient notation
/// is expanded before any division occurs.
ClosedFormIdeal ideal_lambda_ab01(int a, int b, int k);

/// I_k(Lambda(a,1,0,d)) over (y, z_1..z_a, x_1..x_d).
ClosedFormIdeal ideal_lambda_a10d(int a, int d, int k);

/// Case table for I_2(Lambda(a,b,c,d)) over x_1..x_{a+c}, y_1..y_{b+d}.
/// Requires lambda(a,b,c,d) strong with at least 2 vertices.
ClosedFormIdeal second_ideal_lambda(const LambdaParams& p);

/// I_3(C_n) = <x_1,...,x_n, n> for n >= 5.
ClosedFormIdeal third_ideal_circuit(int n);

/// diag(1, 1, n, ..., n, n^2(n-1)/2) with n-3 middle entries; n >= 3.
SnfResult snf_circuit(int n);

/// SNF of D(Lambda(a,b,0,1)): I_{a+2} + 2I_{b-2} + [8a+2b] for b >= 2,
/// I_{a+1} + [4a+1] for b == 1.
SnfResult snf_lambda_ab01(int a, int b);

/// SNF of D(Lambda(a,1,0,d)): I_{a+2} + 2I_{d-2} + [8a+2d] for d >= 2.
SnfResult snf_lambda_a10d(int a, int d);

/// Conjectured U_k(C_n) generators {t^{k-2}, t^{k-3} n, ..., n^{k-2}} for
/// 4 <= k <= n-2.
ClosedFormIdeal conjectured_univariate_circuit(int n, int k);

struct CirculantCheckReport {
    int n = 0;
    double tolerance = 0;
    double max_deviation = 0;
    bool pass = false;
    std::vector<double> deviations;  // per coefficient, degree 0..n
};

/// Compares exact coefficients of det(D_t(C_n)) against the numerically
/// expanded product over complex roots of unity; 3 <= n <= 16.
CirculantCheckReport circulant_det_check(int n, double tolerance = 1e-6);

}  // namespace di

#endif

#ifndef DISTIDEAL_POLY_HPP
#define DISTIDEAL_POLY_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "distideal/bigmatrix.hpp"
#include "distideal/digraph.hpp"

namespace di {

/// Ordered list of distinct variable names, fixed for its lifetime.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names);

    size_t arity() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 if absent

    bool operator==(const VarContext& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using VarContextPtr = std::shared_ptr<const VarContext>;

VarContextPtr make_context(std::vector<std::string> names);
VarContextPtr x_context(int n);      // x0..x_{n-1}
VarContextPtr t_context();           // single variable t

enum class MonomialOrder { Degrevlex, Lex };

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
/// Returns >0 if a > b, 0 if equal, <0 if a < b under the given order.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);

struct Term {
    Exponents exp;
    mpz_class coef;

    bool operator==(const Term& o) const { return exp == o.exp && coef == o.coef; }
};

/// Sparse multivariate polynomial over Z. Terms are kept sorted in
/// decreasing degrevlex order with no zero coefficients.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(VarContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly constant(VarContextPtr ctx, const mpz_class& c);
    static MultiPoly variable(VarContextPtr ctx, int index);
    static MultiPoly from_terms(VarContextPtr ctx, std::vector<Term> terms);

    const VarContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (0 if absent).
    mpz_class constant_value() const;
    int degree() const;

    const Term& leading_term(MonomialOrder order) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const mpz_class& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Multiplies by c * x^exp and adds into *this.
    void add_scaled(const MultiPoly& o, const mpz_class& c, const Exponents& exp);

    mpz_class evaluate(const std::vector<mpz_class>& point) const;

    /// Maps every variable to the single variable t.
    MultiPoly collapse_to_t() const;

    /// Re-expresses the polynomial in another context; var_map[i] is the
    /// index in `target` of this context's variable i.
    MultiPoly remap(VarContextPtr target, const std::vector<int>& var_map) const;

    std::string str(MonomialOrder order = MonomialOrder::Degrevlex) const;

private:
    void normalize();

    VarContextPtr ctx_;
    std::vector<Term> terms_;
};

MultiPoly parse_poly(const VarContextPtr& ctx, const std::string& text);

/// Matrix of polynomials sharing one context.
class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(VarContextPtr ctx, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarContextPtr& context() const { return ctx_; }
    MultiPoly& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const MultiPoly& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    BigMatrix evaluate(const std::vector<mpz_class>& point) const;

private:
    VarContextPtr ctx_;
    int rows_ = 0, cols_ = 0;
    std::vector<MultiPoly> data_;
};

/// diag(x_0..x_{n-1}) + D(g) over the context x0..x_{n-1}.
SymMatrix dx_matrix(const Digraph& g);
/// t*I + D(g) over the context {t}.
SymMatrix dt_matrix(const Digraph& g);

/// Exact determinant by column-subset memoized Laplace expansion; rows <= 12.
MultiPoly sym_det(const SymMatrix& m);

/// All k x k minors, ordered lexicographically by (row subset, col subset).
/// Caps at 10^6 subset pairs.
std::vector<MultiPoly> minors(const SymMatrix& m, int k);

}  // namespace di

#endif

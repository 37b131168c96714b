#ifndef DISTIDEAL_BIGMATRIX_HPP
#define DISTIDEAL_BIGMATRIX_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "distideal/digraph.hpp"

namespace di {

/// Dense matrix of arbitrary-precision integers, row-major.
class BigMatrix {
public:
    BigMatrix() = default;
    BigMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    static BigMatrix identity(int n);
    static BigMatrix zero(int rows, int cols) { return BigMatrix(rows, cols); }

    bool operator==(const BigMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SnfResult {
    std::vector<mpz_class> diagonal;  // f_1..f_r followed by zeros
    int rank = 0;

    bool operator==(const SnfResult& o) const {
        return diagonal == o.diagonal && rank == o.rank;
    }
};

/// Smith normal form by pivot-to-gcd elimination. Diagonal entries are
/// non-negative and satisfy f_i | f_{i+1}.
SnfResult smith_normal_form(const BigMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Throws on
/// non-square input.
mpz_class determinant(const BigMatrix& m);

/// Delta_i(m): gcd of all i x i minors, 0 when they all vanish. Computed by
/// exhaustive minor enumeration; caps at 10^7 subset pairs.
mpz_class gcd_of_minors(const BigMatrix& m, int i);

BigMatrix distance_matrix(const Digraph& g, MatrixKind kind);

// Text format: "rows cols" header, then whitespace-separated integer rows.
std::string format_matrix(const BigMatrix& m);
BigMatrix parse_matrix(const std::string& text);

}  // namespace di

#endif

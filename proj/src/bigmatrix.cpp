#include "distideal/bigmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace di {

BigMatrix BigMatrix::identity(int n) {
    BigMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Position of a minimal-absolute-value nonzero entry in m[t.., t..].
bool find_pivot(const BigMatrix& m, int t, int& pi, int& pj) {
    bool found = false;
    mpz_class best;
    for (int i = t; i < m.rows(); ++i)
        for (int j = t; j < m.cols(); ++j) {
            const mpz_class& v = m.at(i, j);
            if (v == 0) continue;
            mpz_class a = abs(v);
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

void swap_rows(BigMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(BigMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

SnfResult smith_normal_form(const BigMatrix& input) {
    BigMatrix m = input;
    const int r = m.rows(), c = m.cols();
    const int dim = std::min(r, c);
    std::vector<mpz_class> diag(dim, 0);
    int rank = 0;

    for (int t = 0; t < dim; ++t) {
        int pi, pj;
        if (!find_pivot(m, t, pi, pj)) break;
        swap_rows(m, t, pi);
        swap_cols(m, t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            // Reduce the pivot column.
            for (int i = t + 1; i < r; ++i) {
                if (m.at(i, t) == 0) continue;
                mpz_class q = m.at(i, t) / m.at(t, t);  // truncated division
                if (q != 0)
                    for (int j = t; j < c; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    // Remainder is strictly smaller; promote it to pivot.
                    swap_rows(m, t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Reduce the pivot row.
            for (int j = t + 1; j < c; ++j) {
                if (m.at(t, j) == 0) continue;
                mpz_class q = m.at(t, j) / m.at(t, t);
                if (q != 0)
                    for (int i = t; i < r; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    swap_cols(m, t, j);
                    clean = false;
                }
            }
        }
        diag[t] = abs(m.at(t, t));
        ++rank;
    }

    // Enforce the divisibility chain: diag(a, b) ~ diag(gcd, lcm).
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < rank; ++i) {
            if (diag[i + 1] % diag[i] == 0) continue;
            mpz_class g = gcd(diag[i], diag[i + 1]);
            diag[i + 1] = diag[i] / g * diag[i + 1];
            diag[i] = g;
            changed = true;
        }
    }

    return SnfResult{std::move(diag), rank};
}

mpz_class determinant(const BigMatrix& input) {
    if (input.rows() != input.cols())
        throw std::invalid_argument("determinant requires a square matrix");
    const int n = input.rows();
    if (n == 0) return 1;
    BigMatrix m = input;
    mpz_class prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (m.at(t, t) == 0) {
            int swap = -1;
            for (int i = t + 1; i < n; ++i)
                if (m.at(i, t) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            swap_rows(m, t, swap);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) {
                mpz_class v = m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(t, t);
    }
    return sign * m.at(n - 1, n - 1);
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

double binomial_approx(int n, int k) {
    double v = 1;
    for (int i = 0; i < k; ++i) v *= double(n - i) / (i + 1);
    return v;
}

}  // namespace

mpz_class gcd_of_minors(const BigMatrix& m, int order) {
    if (order < 1 || order > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minor order out of range");
    if (binomial_approx(m.rows(), order) * binomial_approx(m.cols(), order) > 1e7)
        throw std::invalid_argument("minor enumeration cap exceeded");

    mpz_class g = 0;
    std::vector<int> rows(order), cols(order);
    for (int i = 0; i < order; ++i) rows[i] = i;
    do {
        for (int i = 0; i < order; ++i) cols[i] = i;
        do {
            BigMatrix sub(order, order);
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
            g = gcd(g, determinant(sub));
            if (g == 1) return g;
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return abs(g);
}

BigMatrix distance_matrix(const Digraph& g, MatrixKind kind) {
    const int n = g.order();
    const auto dist = distance_table(g);  // throws on non-strong input
    BigMatrix d(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = dist[i][j];
    if (kind == MatrixKind::D) return d;

    BigMatrix result(n, n);
    const bool plus = kind == MatrixKind::DQ || kind == MatrixKind::DdegPlus;
    for (int i = 0; i < n; ++i) {
        mpz_class diag;
        if (kind == MatrixKind::DL || kind == MatrixKind::DQ) {
            for (int j = 0; j < n; ++j) diag += dist[i][j];  // transmission
        } else {
            diag = g.out_degree(i);
        }
        for (int j = 0; j < n; ++j)
            result.at(i, j) = plus ? d.at(i, j) : -d.at(i, j);
        result.at(i, i) += diag;
    }
    return result;
}

std::string format_matrix(const BigMatrix& m) {
    std::ostringstream os;
    os << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m.at(i, j).get_str();
        }
        os << "\n";
    }
    return os.str();
}

BigMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    int rows, cols;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("malformed matrix header");
    BigMatrix m(rows, cols);
    std::string tok;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!(is >> tok)) throw std::invalid_argument("matrix entries missing");
            m.at(i, j) = mpz_class(tok);
        }
    if (is >> tok) throw std::invalid_argument("trailing data after matrix entries");
    return m;
}

}  // namespace di

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "distideal/bigmatrix.hpp"

using namespace di;

namespace {

BigMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> entry(-9, 9);
    BigMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

// Cofactor-expansion determinant, independent of the Bareiss implementation.
mpz_class cofactor_det(const BigMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    mpz_class det = 0;
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        BigMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) sub.at(r - 1, cc++) = m.at(r, c);
        }
        det += sign * m.at(0, j) * cofactor_det(sub);
        sign = -sign;
    }
    return det;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng() % 5);
        BigMatrix m = random_matrix(rng, n, n);
        CHECK(determinant(m) == cofactor_det(m));
    }
    CHECK_THROWS(determinant(BigMatrix(2, 3)));
}

TEST_CASE("smith normal form of known matrices") {
    BigMatrix id = BigMatrix::identity(3);
    SnfResult r = smith_normal_form(id);
    CHECK(r.rank == 3);
    CHECK(r.diagonal == std::vector<mpz_class>{1, 1, 1});

    SnfResult zero = smith_normal_form(BigMatrix(2, 2));
    CHECK(zero.rank == 0);
    CHECK(zero.diagonal == std::vector<mpz_class>{0, 0});

    // diag(4, 6) ~ diag(2, 12)
    BigMatrix d(2, 2);
    d.at(0, 0) = 4;
    d.at(1, 1) = 6;
    CHECK(smith_normal_form(d).diagonal == std::vector<mpz_class>{2, 12});
}

TEST_CASE("smith normal form of circuit distance matrices") {
    CHECK(smith_normal_form(distance_matrix(circuit(4), MatrixKind::D)).diagonal ==
          std::vector<mpz_class>{1, 1, 4, 24});
    CHECK(smith_normal_form(distance_matrix(complete(3), MatrixKind::D)).diagonal ==
          std::vector<mpz_class>{1, 1, 2});
    CHECK(smith_normal_form(distance_matrix(lambda({1, 1, 0, 1}), MatrixKind::D)).diagonal ==
          std::vector<mpz_class>{1, 1, 5});
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(98765);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 1 + int(rng() % 5);
        int cols = 1 + int(rng() % 5);
        BigMatrix m = random_matrix(rng, rows, cols);
        SnfResult snf = smith_normal_form(m);

        REQUIRE(int(snf.diagonal.size()) == std::min(rows, cols));
        // Non-negative, divisibility chain, zeros trailing.
        for (int i = 0; i < int(snf.diagonal.size()); ++i) {
            CHECK(snf.diagonal[i] >= 0);
            CHECK((i < snf.rank) == (snf.diagonal[i] != 0));
            if (i + 1 < snf.rank) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
        }

        // Delta_i oracle: product of the first i invariant factors equals the
        // gcd of all i x i minors, enumerated independently.
        mpz_class prod = 1;
        for (int i = 1; i <= snf.rank; ++i) {
            prod *= snf.diagonal[i - 1];
            CHECK(prod == gcd_of_minors(m, i));
        }
        if (snf.rank < std::min(rows, cols))
            CHECK(gcd_of_minors(m, snf.rank + 1) == 0);

        // Invariance under row/column permutation and global sign flip.
        BigMatrix shuffled(rows, cols);
        std::vector<int> rperm(rows), cperm(cols);
        for (int i = 0; i < rows; ++i) rperm[i] = i;
        for (int j = 0; j < cols; ++j) cperm[j] = j;
        std::shuffle(rperm.begin(), rperm.end(), rng);
        std::shuffle(cperm.begin(), cperm.end(), rng);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) shuffled.at(i, j) = -m.at(rperm[i], cperm[j]);
        CHECK(smith_normal_form(shuffled) == snf);
    }
}

TEST_CASE("distance-derived matrices") {
    Digraph c3 = circuit(3);
    BigMatrix d = distance_matrix(c3, MatrixKind::D);
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(0, 2) == 2);
    CHECK(d.at(0, 0) == 0);

    // DL = trs(G) - D: rows sum to zero.
    BigMatrix dl = distance_matrix(c3, MatrixKind::DL);
    for (int i = 0; i < 3; ++i) {
        mpz_class sum = 0;
        for (int j = 0; j < 3; ++j) sum += dl.at(i, j);
        CHECK(sum == 0);
        CHECK(dl.at(i, i) == 3);  // transmission of each vertex in C3
    }

    // DQ = trs(G) + D.
    BigMatrix dq = distance_matrix(c3, MatrixKind::DQ);
    CHECK(dq.at(0, 0) == 3);
    CHECK(dq.at(0, 1) == 1);

    // Ddeg = deg(G) - D with out-degrees on the diagonal.
    BigMatrix dd = distance_matrix(c3, MatrixKind::Ddeg);
    CHECK(dd.at(0, 0) == 1);
    CHECK(dd.at(0, 1) == -1);
    BigMatrix ddp = distance_matrix(c3, MatrixKind::DdegPlus);
    CHECK(ddp.at(0, 0) == 1);
    CHECK(ddp.at(0, 2) == 2);
}

TEST_CASE("matrix text round trip") {
    BigMatrix m(2, 3);
    m.at(0, 0) = -5;
    m.at(1, 2) = 1000000;
    std::string text = format_matrix(m);
    CHECK(parse_matrix(text) == m);
    CHECK_THROWS(parse_matrix("2 2\n1 2 3 4 5"));
    CHECK_THROWS(parse_matrix(""));
}

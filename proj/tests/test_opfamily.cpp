#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schatten/opfamily.hpp"
#include "schatten/rng.hpp"

using namespace schatten;

namespace {

WeightedFamily random_family(Rng& rng, int d, int len) {
    std::vector<CMatrix> members;
    for (int n = 0; n < len; ++n) members.push_back(rng.gaussian_matrix(d, d));
    return WeightedFamily(std::move(members), rng.log_uniform_weights(len, 1e-2, 1e2));
}

// naive loop oracle, independent of the gram implementation path
CMatrix gram_oracle(const WeightedFamily& f, bool left, double e) {
    CMatrix acc(f.dim(), f.dim());
    for (int n = 0; n < f.length(); ++n) {
        const CMatrix& a = f.member(n);
        const CMatrix term = left ? a * a.adjoint() : a.adjoint() * a;
        const double w = std::pow(f.primary(n), e);
        for (int i = 0; i < f.dim(); ++i)
            for (int j = 0; j < f.dim(); ++j) acc(i, j) += w * term(i, j);
    }
    return acc;
}

// the 1 x N block row [A_1 ... A_N] as a dense d x (N d) matrix
CMatrix block_row(const WeightedFamily& f) {
    const int d = f.dim();
    CMatrix out(d, d * f.length());
    for (int n = 0; n < f.length(); ++n)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out(i, n * d + j) = f.member(n)(i, j);
    return out;
}

CMatrix block_column(const WeightedFamily& f) {
    const int d = f.dim();
    CMatrix out(d * f.length(), d);
    for (int n = 0; n < f.length(); ++n)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out(n * d + i, j) = f.member(n)(i, j);
    return out;
}

}  // namespace

TEST_CASE("family construction rejects bad weights and shapes") {
    Rng rng(201);
    std::vector<CMatrix> ms{rng.gaussian_matrix(3, 3), rng.gaussian_matrix(3, 3)};
    CHECK_THROWS_AS(WeightedFamily(ms, {1.0, 0.0}), DimensionMismatch);
    CHECK_THROWS_AS(WeightedFamily(ms, {1.0}), DimensionMismatch);
    std::vector<CMatrix> bad{rng.gaussian_matrix(3, 3), rng.gaussian_matrix(2, 2)};
    CHECK_THROWS_AS(WeightedFamily(bad, {1.0, 1.0}), DimensionMismatch);
}

TEST_CASE("gram operators: unit examples") {
    // single member A = I with weight 2 and exponent 1
    WeightedFamily f({CMatrix::identity(3)}, {2.0});
    CHECK((gram_right(f, 1.0) - CMatrix::identity(3) * 2.0).max_abs_entry() <= 1e-15);

    // a unitary member with unit weight has both grams equal to I
    Rng rng(202);
    WeightedFamily u({rng.haar_unitary(4)}, {1.0});
    CHECK((gram_left(u, 1.0) - CMatrix::identity(4)).max_abs_entry() <= 1e-12);
}

TEST_CASE("gram operators match the naive summation oracle") {
    Rng rng(203);
    for (int trial = 0; trial < 15; ++trial) {
        const WeightedFamily f =
            random_family(rng, rng.uniform_int(2, 6), rng.uniform_int(1, 8));
        for (double e : {0.0, 0.5, 1.0}) {
            const CMatrix gr = gram_right(f, e);
            const CMatrix gl = gram_left(f, e);
            const double scale = 1.0 + gr.max_abs_entry();
            CHECK((gr - gram_oracle(f, false, e)).max_abs_entry() <= 1e-12 * scale);
            CHECK((gl - gram_oracle(f, true, e)).max_abs_entry() <=
                  1e-12 * (1.0 + gl.max_abs_entry()));
        }
    }
}

TEST_CASE("rank-one basis family identities") {
    // standard basis, full count: the right gram telescopes to the identity
    {
        const CMatrix id = CMatrix::identity(4);
        auto [fam_e, fam_f] = rank_one_family(id, id, 4);
        CHECK((gram_right(fam_e, 0.0) - id).max_abs_entry() == 0.0);
        (void)fam_f;

        // count = 1: a single rank-one projector member
        auto [one_e, one_f] = rank_one_family(id, id, 1);
        CHECK(one_e.length() == 1);
        CHECK((one_e.member(0) - rank_one(column(id, 0), column(id, 0)))
                  .max_abs_entry() == 0.0);
        (void)one_f;
    }

    Rng rng(204);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = rng.uniform_int(2, 6);
        const CMatrix e = rng.haar_unitary(d);
        const CMatrix f = rng.haar_unitary(d);
        auto [fam_e, fam_f] = rank_one_family(e, f, d);

        // sum (e_n (x) e_1)* (e_n (x) e_1) = I
        CHECK((gram_right(fam_e, 0.0) - CMatrix::identity(d)).max_abs_entry() <= 1e-12);

        // sum lam_n (e_n (x) e_1)(e_n (x) e_1)* = (sum lam) e_1 (x) e_1
        const std::vector<double> lam = rng.log_uniform_weights(d, 1e-2, 1e2);
        double lam_sum = 0.0;
        for (double v : lam) lam_sum += v;
        const WeightedFamily weighted = fam_e.reweighted(lam);
        const CMatrix want = lam_sum * rank_one(column(e, 0), column(e, 0));
        CHECK((gram_left(weighted, 1.0) - want).max_abs_entry() <=
              1e-12 * (1.0 + lam_sum));

        CHECK(column_norm(fam_f) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(rank_one_family(CMatrix::identity(3), CMatrix::identity(3), 4),
                    CountTooLarge);
}

TEST_CASE("row/column norms equal their block-matrix oracles") {
    Rng rng(205);
    // F = (I, I): row norm sqrt(2)
    WeightedFamily ii({CMatrix::identity(2), CMatrix::identity(2)}, {1.0, 1.0});
    CHECK(row_norm(ii) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

    for (int trial = 0; trial < 15; ++trial) {
        const WeightedFamily f =
            random_family(rng, rng.uniform_int(2, 6), rng.uniform_int(1, 8));
        const double row_oracle = operator_norm(block_row(f));
        const double col_oracle = operator_norm(block_column(f));
        CHECK(std::abs(row_norm(f) - row_oracle) <= 1e-9 * (1.0 + row_oracle));
        CHECK(std::abs(column_norm(f) - col_oracle) <= 1e-9 * (1.0 + col_oracle));
    }
}

TEST_CASE("module max norm: examples and the two-sided oracle") {
    // single member I with lam = 4, rho = 1 -> max(2, 1) = 2
    WeightedFamily f({CMatrix::identity(3)}, {1.0});
    CHECK(module_max_norm(f, {4.0}, {1.0}) == doctest::Approx(2.0).epsilon(1e-13));

    // rank-one family with lam = rho = 2^-n: the left side has norm sum(2^-n)
    Rng rng(206);
    const int d = 5;
    const CMatrix e = rng.haar_unitary(d);
    auto [fam_e, fam_f] = rank_one_family(e, e, d);
    std::vector<double> geo(d);
    double geo_sum = 0.0;
    for (int n = 0; n < d; ++n) {
        geo[std::size_t(n)] = std::pow(2.0, -(n + 1));
        geo_sum += geo[std::size_t(n)];
    }
    // column side: ||sum 2^-n e_n><e_n|| = max weight; left side: sqrt(sum)
    const double want = std::max(std::sqrt(geo[0]), std::sqrt(geo_sum));
    CHECK(module_max_norm(fam_e, geo, geo) == doctest::Approx(want).epsilon(1e-12));

    for (int trial = 0; trial < 10; ++trial) {
        const WeightedFamily g =
            random_family(rng, rng.uniform_int(2, 5), rng.uniform_int(1, 6));
        const std::vector<double> lam = rng.log_uniform_weights(g.length(), 1e-2, 1e2);
        const std::vector<double> rho = rng.log_uniform_weights(g.length(), 1e-2, 1e2);
        const double right = std::sqrt(operator_norm(gram_right(g.reweighted(lam), 1.0)));
        const double left = std::sqrt(operator_norm(gram_left(g.reweighted(rho), 1.0)));
        CHECK(module_max_norm(g, lam, rho) ==
              doctest::Approx(std::max(right, left)).epsilon(1e-12));

        // the half-power reading uses sqrt weights inside the Gram sums
        const double right_h =
            std::sqrt(operator_norm(gram_right(g.reweighted(lam), 0.5)));
        const double left_h =
            std::sqrt(operator_norm(gram_left(g.reweighted(rho), 0.5)));
        CHECK(module_max_norm(g, lam, rho, WeightPower::sqrt) ==
              doctest::Approx(std::max(right_h, left_h)).epsilon(1e-12));
    }
}

TEST_CASE("tail_norm: trivial and geometric closed forms") {
    Rng rng(207);
    const int len = 6;
    // geometric family A_n = 2^(-n/2) I: right gram tail = sum_{k>=from} 2^-k
    std::vector<CMatrix> geo;
    for (int n = 1; n <= len; ++n)
        geo.push_back(CMatrix::identity(3) * std::pow(2.0, -0.5 * n));
    WeightedFamily f(std::move(geo), std::vector<double>(len, 1.0));

    CHECK(tail_norm(f, len + 1, GramSide::right, 0.0) == 0.0);
    CHECK(tail_norm(f, 1, GramSide::right, 0.0) ==
          doctest::Approx(operator_norm(gram_right(f, 0.0))).epsilon(1e-13));
    for (int from = 1; from <= len; ++from) {
        // closed form: 2^-from (1 - 2^-(len-from+1)) / (1 - 1/2)
        const double want =
            std::pow(2.0, -from) * (1.0 - std::pow(2.0, -(len - from + 1))) / 0.5;
        CHECK(tail_norm(f, from, GramSide::right, 0.0) ==
              doctest::Approx(want).epsilon(1e-12));
    }
    CHECK_THROWS_AS(tail_norm(f, 0, GramSide::right, 0.0), IndexOutOfRange);
    CHECK_THROWS_AS(tail_norm(f, len + 2, GramSide::right, 0.0), IndexOutOfRange);

    // monotone in `from`
    const WeightedFamily g = random_family(rng, 4, 7);
    double prev = tail_norm(g, 1, GramSide::left, 1.0);
    for (int from = 2; from <= g.length() + 1; ++from) {
        const double cur = tail_norm(g, from, GramSide::left, 1.0);
        CHECK(cur <= prev * (1.0 + 1e-12) + 1e-12);
        prev = cur;
    }
}

TEST_CASE("l1 imbedding: sum lam <= 1 forces the left gram under the right") {
    Rng rng(208);
    for (int trial = 0; trial < 15; ++trial) {
        const int len = rng.uniform_int(1, 8);
        WeightedFamily f = random_family(rng, rng.uniform_int(2, 6), len);
        std::vector<double> lam = rng.log_uniform_weights(len, 1e-3, 1.0);
        double total = 0.0;
        for (double v : lam) total += v;
        for (double& v : lam) v /= (total * 1.000001);  // sum < 1
        f = f.reweighted(lam);
        const double lhs = operator_norm(gram_left(f, 1.0));
        const double rhs = operator_norm(gram_right(f, 0.0));
        CHECK(lhs <= rhs * (1.0 + 1e-8) + 1e-10);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conebranch/branching.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace conebranch;

namespace {

// monic Gegenbauer C_p^mu via the three-term recursion
// C_{k+1} = x C_k - b_k C_{k-1},  b_k = k(k + 2mu - 1) / (4(k+mu)(k+mu-1)),
// then rescaled to the variable v = sqrt(2) x.
MultiPoly gegenbauer_in_v(int p, const Rational& mu)
{
    std::vector<std::vector<Rational>> C(p + 1); // coefficients in x
    C[0] = {Rational(1)};
    if (p >= 1) C[1] = {Rational(0), Rational(1)};
    for (int k = 1; k + 1 <= p; ++k) {
        Rational bk = Rational(k) * (Rational(k) + 2 * mu - 1)
                    / (4 * (Rational(k) + mu) * (Rational(k) + mu - 1));
        std::vector<Rational> next(k + 2, Rational(0));
        for (int i = 0; i <= k; ++i) next[i + 1] += C[k][i];
        for (int i = 0; i < k; ++i) next[i] -= bk * C[k - 1][i];
        C[k + 1] = next;
    }
    // x = v / sqrt(2); make monic in v by multiplying by sqrt(2)^p
    MultiPoly out(1, 1);
    for (int i = 0; i <= p; ++i) {
        if (C[p][i] == 0) continue;
        // sqrt(2)^p * C[p][i] * (v/sqrt2)^i = C[p][i] * sqrt(2)^{p-i} v^i
        Surd c = (((p - i) % 2) == 0)
                     ? Surd(C[p][i] * Rational(Int(1) << ((p - i) / 2)))
                     : Surd(2, C[p][i] * Rational(Int(1) << ((p - i - 1) / 2)));
        out.set_coeff({i}, (SurdVec(1) << c).finished());
    }
    return out;
}

} // namespace

TEST_CASE("lift: fixed points and the Spin(2) quadratic") {
    auto A3 = build_algebra(Family::Spin, 3);
    auto rep3 = make_scalar_rep(A3, Rational(3));
    for (int i = 0; i < A3.n - 1; ++i) {
        MultiPoly::Key k(A3.n - 1, 0);
        k[i] = 1;
        auto v = mp_monomial(A3.n - 1, k, Surd(1));
        CHECK(lift(A3, rep3, v) == v);
    }

    auto A = build_algebra(Family::Spin, 2);
    auto rep = make_scalar_rep(A, Rational(3)); // alpha = 6
    auto P = lift(A, rep, mp_monomial(1, {2}, Surd(1)));
    auto expect = mp_monomial(1, {2}, Surd(1)) - mp_const(1, Surd(Rational(2, 7)));
    CHECK(P == expect); // v^2 - 2/(alpha+1)
}

TEST_CASE("Spin(2) lifts are monic Gegenbauer polynomials, exactly") {
    for (int lam : {3, 4}) {
        auto A = build_algebra(Family::Spin, 2);
        auto rep = make_scalar_rep(A, Rational(lam));
        Rational mu = (rep.alpha - 1) / 2;
        for (int p = 0; p <= 6; ++p) {
            auto P = lift(A, rep, mp_monomial(1, {p}, Surd(1)));
            CHECK(P == gegenbauer_in_v(p, mu));
        }
    }
}

TEST_CASE("W_p dimensions and the exact eigen-equation") {
    for (auto [fam, param, lam] : {std::tuple{Family::Spin, 3, 3},
                                   std::tuple{Family::Sym, 2, 4},
                                   std::tuple{Family::Spin, 4, 3}}) {
        auto A = build_algebra(fam, param);
        auto rep = make_scalar_rep(A, Rational(lam));
        auto D = build_dpi(A, rep);
        for (int p = 0; p <= 3; ++p) {
            auto W = build_Wp(A, rep, p);
            CHECK((long long)W.polys.size() == binomial(A.n + p - 2, A.n - 2));
            CHECK(W.eigenvalue == -Rational(p) * (Rational(p) + rep.alpha - 1));
            for (const auto& P : W.polys) {
                Surd ev(W.eigenvalue);
                CHECK(apply(D, P) == ev * P);
            }
        }
    }
}

TEST_CASE("Gram-Schmidt basis spans W_p numerically") {
    auto A = build_algebra(Family::Spin, 3);
    auto rep = make_scalar_rep(A, Rational(3));
    auto s = sample_X(A, 42, 150000);

    for (int p = 1; p <= 2; ++p) {
        auto gs = gram_schmidt_Wp(A, rep, p, s);
        auto rec = build_Wp(A, rep, p);
        REQUIRE(gs.polys.size() == rec.polys.size());
        CHECK(gs.provenance == BasisProvenance::GramSchmidt);

        // orthogonal to every lower-degree monomial, relative to the norms
        for (const auto& Q : gs.polys) {
            auto [nq, eq] = l2x_inner(A, rep, Q, Q, s);
            for (int q = 0; q < p; ++q)
                for (const auto& k : monomial_exponents(A.n - 1, q)) {
                    auto m = mp_monomial(A.n - 1, k, Surd(1));
                    auto [nm, em] = l2x_inner(A, rep, m, m, s);
                    auto [ip, ie] = l2x_inner(A, rep, Q, m, s);
                    CHECK(std::abs(ip) / std::sqrt(nq * nm) < 5e-2);
                }
        }
    }
}

TEST_CASE("harmonic dimensions, bases, and the iterated decomposition") {
    CHECK(harmonic_dim(2, 0) == 1);
    CHECK(harmonic_dim(2, 3) == 2);
    CHECK(harmonic_dim(3, 2) == 5);
    CHECK(harmonic_dim(4, 3) == 16);

    auto L = laplacian(3);
    for (int k = 0; k <= 4; ++k) {
        auto H = harmonic_basis(3, k);
        CHECK((long long)H.size() == harmonic_dim(3, k));
        for (const auto& h : H) CHECK(apply(L, h).is_zero());
    }

    // v1^2 in two variables: (v1^2 - v2^2)/2 + |v|^2 * 1/2
    auto P = mp_monomial(2, {2, 0}, Surd(1));
    auto parts = harmonic_decompose(P);
    REQUIRE(parts.size() == 2);
    auto L2 = laplacian(2);
    auto r2 = mp_monomial(2, {2, 0}, Surd(1)) + mp_monomial(2, {0, 2}, Surd(1));
    MultiPoly recomb = mp_zero(2, 1);
    for (const auto& [j, h] : parts) {
        CHECK(apply(L2, h).is_zero());
        MultiPoly term = h;
        for (int i = 0; i < j; ++i) term = r2 * term;
        recomb = recomb + term;
    }
    CHECK(recomb == P);
}

TEST_CASE("rank-2 reproducing kernel, Spin(3) p = 1") {
    auto A = build_algebra(Family::Spin, 3);
    auto rep = make_scalar_rep(A, Rational(3));
    auto s = sample_X(A, 42, 150000);
    auto K = kernel_rank2(A, rep, 1, 0, s);
    REQUIRE(!K.span.empty());

    // reproducing property on the span, tested at a few interior points
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    DomainX X(A);
    for (const auto& f : K.span) {
        for (int trial = 0; trial < 5; ++trial) {
            Eigen::VectorXd u0(A.n - 1);
            for (int i = 0; i < A.n - 1; ++i) u0[i] = u(rng);
            if (!X.contains(u0)) continue;
            auto [val, err] = l2x_inner(
                A, rep,
                [&](const Eigen::VectorXd& v) {
                    return (Eigen::VectorXd(1) << K.eval(u0, v)).finished();
                },
                [&](const Eigen::VectorXd& v) { return f.evaluate(v); }, s);
            double target = f.evaluate(u0)(0);
            CHECK(val == doctest::Approx(target).epsilon(5e-2));
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conebranch/diffop.hpp"
#include "test_util.hpp"

using namespace conebranch;

TEST_CASE("Euler operator and Laplacian on monomials") {
    auto E = euler_operator(2);
    auto L = laplacian(2);

    auto m = mp_monomial(2, {2, 1}, Surd(1)); // v1^2 v2
    CHECK(apply(E, m) == Surd(3) * m);
    // Laplacian(v1^2 v2) = 2 v2
    CHECK(apply(L, m) == mp_monomial(2, {0, 1}, Surd(2)));

    auto q = mp_monomial(2, {2, 0}, Surd(1)) + mp_monomial(2, {0, 2}, Surd(1));
    CHECK(apply(L, q) == mp_const(2, Surd(4)));
}

TEST_CASE("apply is linear; compose matches iterated application") {
    auto E = euler_operator(3);
    auto L = laplacian(3);
    auto EL = compose(E, L);
    auto LE = compose(L, E);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p(3, 1);
        for (const auto& k : monomial_exponents(3, 3))
            p.set_coeff(k, testutil::random_rational_vec(rng, 1));
        MultiPoly q(3, 1);
        for (const auto& k : monomial_exponents(3, 2))
            q.set_coeff(k, testutil::random_rational_vec(rng, 1));

        Surd a(Rational(2, 3)), b(Rational(-5, 7));
        CHECK(apply(E, a * p + b * q) == a * apply(E, p) + b * apply(E, q));
        CHECK(apply(EL, p) == apply(E, apply(L, p)));
        CHECK(apply(LE, p) == apply(L, apply(E, p)));
    }
}

TEST_CASE("Spin(2) scalar: Psi vanishes and D = (2 - v^2) d^2 - alpha v d") {
    auto A = build_algebra(Family::Spin, 2);
    auto rep = make_scalar_rep(A, Rational(3)); // alpha = 6
    auto Psi = build_psi_pi(A, rep);
    auto D = build_dpi(A, rep);

    // reference operator assembled by hand
    DiffOp ref(1, 1);
    ref.add_scalar_term(mp_const(1, Surd(2)) - mp_monomial(1, {2}, Surd(1)), {2});
    ref.add_scalar_term(mp_monomial(1, {1}, Surd(-6)), {1});

    for (int k = 0; k <= 6; ++k) {
        auto m = mp_monomial(1, {k}, Surd(1));
        CHECK(apply(Psi, m).is_zero());
        CHECK(apply(D, m) == apply(ref, m));
    }
}

TEST_CASE("displayed formula for D agrees with r Lap + Psi - E(E + alpha - 1)") {
    for (auto [fam, param, lam] : {std::tuple{Family::Spin, 3, 3},
                                   std::tuple{Family::Sym, 2, 4},
                                   std::tuple{Family::Spin, 4, 3}}) {
        auto A = build_algebra(fam, param);
        auto rep = make_scalar_rep(A, Rational(lam));
        auto D1 = build_dpi(A, rep);
        auto D2 = build_dpi_decomposed(A, rep);
        for (int p = 0; p <= 4; ++p)
            for (const auto& k : monomial_exponents(A.n - 1, p)) {
                auto m = mp_monomial(A.n - 1, k, Surd(1));
                CHECK(apply(D1, m) == apply(D2, m));
            }
    }
}

TEST_CASE("degree-1 eigenvalue: D v_i = -alpha v_i") {
    auto A = build_algebra(Family::Sym, 2);
    auto rep = make_scalar_rep(A, Rational(4)); // alpha = 8
    auto D = build_dpi(A, rep);
    for (int i = 0; i < A.n - 1; ++i) {
        MultiPoly::Key k(A.n - 1, 0);
        k[i] = 1;
        auto v = mp_monomial(A.n - 1, k, Surd(1));
        CHECK(apply(D, v) == Surd(Rational(-8)) * v);
    }
}

TEST_CASE("e-component of the Bessel operator on simple ambient functions") {
    for (auto [fam, param, lam] : {std::tuple{Family::Spin, 2, 3},
                                   std::tuple{Family::Sym, 2, 4}}) {
        auto A = build_algebra(fam, param);
        auto rep = make_scalar_rep(A, Rational(lam));
        auto B = bessel_e_component(A, rep);

        CHECK(apply(B, mp_const(A.n, Surd(1))).is_zero());

        // f(x) = (x|e) = sqrt(r) x_0  ->  (e|B f) = alpha, constant
        MultiPoly::Key k0(A.n, 0);
        k0[0] = 1;
        auto f = mp_monomial(A.n, k0, A.sqrt_r);
        CHECK(apply(B, f) == mp_const(A.n, Surd(Rational(A.r * lam))));
    }
}

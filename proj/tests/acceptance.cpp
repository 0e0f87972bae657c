// Acceptance suite: one line per criterion, pinned tolerances, exit 1 on any
// failure. Criterion 9 checks the Casimir constant in the form stated in the
// source text; the discrepancy it reports is documented in the decisions
// ledger and in the README.
#include "conebranch/json_io.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace conebranch;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool pass, const std::string& detail)
{
    std::printf("%s  criterion %2d  %-24s %s\n", pass ? "PASS" : "FAIL", num,
                name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

bool vec_eq(const SurdVec& a, const SurdVec& b)
{
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

SurdVec random_rat_vec(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    SurdVec v(n);
    for (int i = 0; i < n; ++i) v[i] = Surd(Rational(num(rng), den(rng)));
    return v;
}

std::vector<JordanAlgebra> test_algebras()
{
    std::vector<JordanAlgebra> out;
    for (int n = 2; n <= 5; ++n) out.push_back(build_algebra(Family::Spin, n));
    out.push_back(build_algebra(Family::Sym, 2));
    out.push_back(build_algebra(Family::Sym, 3));
    out.push_back(build_algebra(Family::HermC, 2));
    return out;
}

std::string tag(const JordanAlgebra& A)
{
    std::ostringstream os;
    os << family_name(A.family) << A.param;
    return os.str();
}

// ---- criterion 1: Jordan axioms ------------------------------------------
void criterion_1()
{
    std::mt19937_64 rng(42);
    bool ok = true;
    std::string where;
    for (const auto& A : test_algebras()) {
        for (int trial = 0; trial < 100 && ok; ++trial) {
            SurdVec x = random_rat_vec(rng, A.n), y = random_rat_vec(rng, A.n);
            SurdVec z = random_rat_vec(rng, A.n);
            SurdVec x2 = jmul(A, x, x);
            if (!vec_eq(jmul(A, x, y), jmul(A, y, x))
                || !vec_eq(jmul(A, x, jmul(A, x2, y)), jmul(A, x2, jmul(A, x, y)))) {
                ok = false;
                where = tag(A) + " Jordan identity";
            }
            // trace-form associativity: (x.y | z) = (x | y.z); the basis is
            // orthonormal for the trace form, so (a|b) is the dot product.
            Surd lhs = jmul(A, x, y).dot(z);
            Surd rhs = x.dot(jmul(A, y, z));
            if (!(lhs == rhs)) {
                ok = false;
                where = tag(A) + " trace associativity";
            }
        }
        if (!ok) break;
    }
    report(1, "jordan-axioms", ok, ok ? "7 algebras x 100 exact pairs" : where);
}

// ---- criterion 2: structure identities ------------------------------------
void criterion_2()
{
    std::mt19937_64 rng(43);
    bool ok = true;
    std::string detail = "exact + det composition < 1e-10";
    for (const auto& A : test_algebras()) {
        SurdVec e = A.identity();
        SurdVec x = random_rat_vec(rng, A.n);
        if (!vec_eq(quad_rep(A, x) * e, jmul(A, x, x)) || !(jdet(A, e) == Surd(1))
            || !(jtrace(A, e) == Surd(A.r))) {
            ok = false;
            detail = tag(A) + " exact structure identity";
        }
    }
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    double worst = 0.0;
    for (const auto& A : test_algebras()) {
        if (A.family == Family::Spin) continue; // matrix families per the contract
        for (int trial = 0; trial < 50; ++trial) {
            Eigen::VectorXd x(A.n), y(A.n);
            for (int i = 0; i < A.n; ++i) { x[i] = u(rng); y[i] = u(rng); }
            double lhs = jdet(A, Eigen::VectorXd(quad_rep(A, y) * x));
            double rhs = jdet(A, y) * jdet(A, y) * jdet(A, x);
            double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    if (worst >= 1e-10) {
        ok = false;
        detail = "det composition worst " + std::string(format_double(worst));
    }
    report(2, "structure-identities", ok, detail);
}

// ---- criteria 3 + 4: eigen-equation and multiplicities ---------------------
void criteria_3_4()
{
    bool eig_ok = true, mult_ok = true;
    std::string detail3 = "zero symbolic residual", detail4 = "dims + cumulative sums";
    for (const auto& A : test_algebras()) {
        for (int lam : {3, 4}) {
            auto rep = make_scalar_rep(A, Rational(lam));
            auto D = build_dpi(A, rep);
            long long cumulative = 0;
            for (int p = 0; p <= 4; ++p) {
                OrthoBasis W;
                try {
                    W = build_Wp(A, rep, p); // asserts the eigen-equation
                } catch (const std::exception& ex) {
                    eig_ok = false;
                    detail3 = tag(A) + " p=" + std::to_string(p) + ": " + ex.what();
                    continue;
                }
                Surd ev{W.eigenvalue};
                for (const auto& P : W.polys)
                    if (!(apply(D, P) == ev * P)) {
                        eig_ok = false;
                        detail3 = tag(A) + " residual at p=" + std::to_string(p);
                    }
                if ((long long)W.polys.size() != binomial(A.n + p - 2, A.n - 2)) {
                    mult_ok = false;
                    detail4 = tag(A) + " dim W_" + std::to_string(p);
                }
                cumulative += (long long)W.polys.size();
            }
            if (cumulative != binomial(A.n - 1 + 4, A.n - 1)) {
                mult_ok = false;
                detail4 = tag(A) + " cumulative";
            }
        }
    }
    report(3, "eigen-equation", eig_ok, detail3);
    report(4, "multiplicities", mult_ok, detail4);
}

// ---- criterion 5: Gegenbauer oracle ----------------------------------------
MultiPoly gegenbauer_in_v(int p, const Rational& mu)
{
    std::vector<std::vector<Rational>> C(p + 1);
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
    MultiPoly out(1, 1);
    for (int i = 0; i <= p; ++i) {
        if (C[p][i] == 0) continue;
        Surd c = (((p - i) % 2) == 0)
                     ? Surd(C[p][i] * Rational(Int(1) << ((p - i) / 2)))
                     : Surd(2, C[p][i] * Rational(Int(1) << ((p - i - 1) / 2)));
        out.set_coeff({i}, (SurdVec(1) << c).finished());
    }
    return out;
}

void criterion_5()
{
    auto A = build_algebra(Family::Spin, 2);
    bool ok = true;
    std::string detail = "lambda in {3,4}, p <= 6, exact";
    for (int lam : {3, 4}) {
        auto rep = make_scalar_rep(A, Rational(lam));
        Rational mu = (rep.alpha - 1) / 2;
        for (int p = 0; p <= 6; ++p) {
            auto P = lift(A, rep, mp_monomial(1, {p}, Surd(1)));
            if (!(P == gegenbauer_in_v(p, mu))) {
                ok = false;
                detail = "mismatch at lambda=" + std::to_string(lam)
                       + " p=" + std::to_string(p);
            }
        }
    }
    report(5, "gegenbauer-oracle", ok, detail);
}

// ---- criterion 6: orthogonality --------------------------------------------
void criterion_6()
{
    bool ok = true;
    double worst = 0.0;
    for (auto [fam, param, lam] : {std::tuple{Family::Spin, 3, 3},
                                   std::tuple{Family::Sym, 2, 3}}) {
        auto A = build_algebra(fam, param);
        auto rep = make_scalar_rep(A, Rational(lam));
        auto s = sample_X(A, 42, 1000000);
        for (int p = 1; p <= 3; ++p) {
            auto W = build_Wp(A, rep, p);
            for (const auto& P : W.polys) {
                auto [np, ep] = l2x_inner(A, rep, P, P, s);
                for (int q = 0; q < p; ++q)
                    for (const auto& k : monomial_exponents(A.n - 1, q)) {
                        auto m = mp_monomial(A.n - 1, k, Surd(1));
                        auto [nm, em] = l2x_inner(A, rep, m, m, s);
                        auto [ip, ie] = l2x_inner(A, rep, P, m, s);
                        double rel = std::abs(ip) / std::sqrt(np * nm);
                        worst = std::max(worst, rel);
                        if (rel >= 5e-2) ok = false;
                    }
            }
        }
    }
    report(6, "orthogonality", ok,
           "worst normalized overlap " + std::string(format_double(worst))
               + " (< 5e-2, 1e6 samples)");
}

// ---- criterion 7: stratified Jacobian --------------------------------------
void criterion_7()
{
    bool ok = true;
    double worst = 0.0;
    for (auto [fam, param] : {std::pair{Family::Spin, 2}, std::pair{Family::Sym, 2}}) {
        auto A = build_algebra(fam, param);
        int which = 0;
        for (double rho : {0.3, 0.45, 0.6}) {
            auto chk = verify_jacobian(A, bump_at_identity(A, rho), rho,
                                       42 + which++, 1000000);
            worst = std::max(worst, chk.rel_err);
            if (chk.rel_err >= 2e-2) ok = false;
        }
    }
    report(7, "jacobian-formula", ok,
           "worst rel err " + std::string(format_double(worst)) + " (< 2e-2, 1e6 samples)");
}

// ---- criterion 8: Bessel chain rule ----------------------------------------
void criterion_8()
{
    bool ok = true;
    double worst = 0.0;
    std::mt19937_64 rng(77);
    for (const auto& A : test_algebras()) {
        if (A.n > 6) continue; // cubic sweep over ambient monomials
        auto rep = make_scalar_rep(A, Rational(3));
        for (int trial = 0; trial < 20; ++trial) {
            MultiPoly f(A.n, 1);
            for (int p = 0; p <= 3; ++p)
                for (const auto& k : monomial_exponents(A.n, p))
                    f.set_coeff(k, random_rat_vec(rng, 1));
            double err = bessel_identity_check(A, rep, f, 5, 1000 + trial);
            worst = std::max(worst, err);
            if (err >= 1e-9) ok = false;
        }
    }
    report(8, "bessel-chain-rule", ok,
           "worst rel err " + std::string(format_double(worst))
               + " (< 1e-9, 20 cubics / 100 points per algebra)");
}

// ---- criterion 9: sl2 relations and the Casimir constant -------------------
void criterion_9()
{
    bool comm_ok = true, printed_ok = true, corrected_ok = true;
    for (auto [fam, param] : {std::pair{Family::Spin, 2}, std::pair{Family::Spin, 3},
                              std::pair{Family::Sym, 2}}) {
        auto A = build_algebra(fam, param);
        auto rep = make_scalar_rep(A, Rational(3));
        auto rpt = verify_sl2_structure(A, rep, 5, 4);
        comm_ok = comm_ok && rpt.commutators_exact;
        printed_ok = printed_ok && rpt.casimir_alpha_alpha_minus_1;
        corrected_ok = corrected_ok && rpt.casimir_alpha_alpha_minus_2;
    }
    std::ostringstream d;
    d << "commutators " << (comm_ok ? "exact" : "BROKEN")
      << "; H^2+2H+4YX = alpha(alpha-1)-4D as stated: "
      << (printed_ok ? "holds" : "fails, residual -alpha*id")
      << "; with alpha(alpha-2): " << (corrected_ok ? "exact" : "fails");
    report(9, "casimir-identity", comm_ok && printed_ok, d.str());
    if (comm_ok && corrected_ok && !printed_ok)
        std::printf("      note: every sl2 bracket is exact and the Casimir "
                    "equals alpha(alpha-2)-4D_pi with zero residual on the full "
                    "spanning set; the stated constant alpha(alpha-1) is "
                    "off by exactly alpha. See the decisions ledger.\n");
}

// ---- criterion 10: intertwining and adjointness -----------------------------
void criterion_10()
{
    bool ok = true;
    std::string detail;

    for (auto [fam, param, lam] : {std::tuple{Family::Spin, 2, 3},
                                   std::tuple{Family::Sym, 2, 3}}) {
        auto A = build_algebra(fam, param);
        auto rep = make_scalar_rep(A, Rational(lam));
        for (int p = 0; p <= 2; ++p) {
            MultiPoly::Key k(A.n - 1, 0);
            if (p > 0) k[0] = p;
            auto P = lift(A, rep, mp_monomial(A.n - 1, k, Surd(1)));
            auto rpt = intertwine_check(A, rep, p, P, 5);
            if (!rpt.ok) {
                ok = false;
                detail = tag(A) + " p=" + std::to_string(p) + ": " + rpt.detail;
            }
        }
    }

    // adjointness <phi f, g> vs <f, Phi g>: constant across p
    auto A = build_algebra(Family::Spin, 2);
    auto rep = make_scalar_rep(A, Rational(3));
    auto s = sample_X(A, 42, 1000000);
    double alpha = to_double(rep.alpha);
    std::vector<double> ratios;
    double worst_sigma = 0.0;
    for (int p = 0; p <= 2; ++p) {
        auto P = lift(A, rep, mp_monomial(1, {p}, Surd(1)));
        TExpPoly g(1, 1, true);
        g.add(0, mp_const(1, Surd(1)));
        g.add(1, mp_const(1, Surd(1))); // g = (1 + t) e^{-t}
        auto f = holo_apply(g, P, p);   // K-finite vector in the p-th summand

        auto sb = sb_apply(A, rep, f, P, p, s);
        double lhs = 0.0;
        for (const auto& [k, c] : sb.coeffs)
            lhs += c * (t_inner(k, 0, alpha + 2 * p) + t_inner(k, 1, alpha + 2 * p));
        auto [rhs, rhs_err] = l2omega_inner(A, rep, f, f, s);
        double sigma = std::abs(lhs / std::max(rhs, 1e-300)) * rhs_err
                     + sb.mc_error;
        ratios.push_back(lhs / rhs);
        worst_sigma = std::max(worst_sigma, sigma);
    }
    double expect = std::pow(2.0, alpha - 0.5) / gamma_alpha(A, rep.alpha);
    for (double rat : ratios) {
        if (std::abs(rat - ratios[0]) / std::abs(ratios[0]) >= 2e-2) ok = false;
        if (std::abs(rat - expect) > std::max(3 * worst_sigma, 2e-2 * expect)) ok = false;
    }
    std::ostringstream d;
    d << "exact intertwining p<=2; adjointness ratios";
    for (double rat : ratios) d << " " << format_double(rat);
    d << " vs r^{a-1/2}/Gamma_a = " << format_double(expect);
    report(10, "intertwining", ok, detail.empty() ? d.str() : detail);
}

// ---- criterion 11: Gamma factorization --------------------------------------
void criterion_11()
{
    auto A = build_algebra(Family::Spin, 2);
    auto rep = make_scalar_rep(A, Rational(3));
    auto s = sample_X(A, 42, 1000000);
    auto g = gamma_piX_numeric(A, rep, s);
    double ga = gamma_alpha(A, rep.alpha);
    double product = ga * g.value(0, 0);
    // 1-D oracle: int_{-sqrt2}^{sqrt2} (1 - v^2/2) dv = 4 sqrt2 / 3, times
    // Gamma_alpha = 6 / 2^{7.5}; the product is exactly 1/16.
    double oracle = ga * (4.0 * std::sqrt(2.0) / 3.0);
    bool ok = std::abs(product - oracle) < 1e-2 * std::abs(oracle);
    double printed = gamma_pi_formula(A, rep.lambda);
    std::ostringstream d;
    d << "Gamma_a*Gamma_piX = " << format_double(product) << " vs oracle "
      << format_double(oracle);
    report(11, "gamma-factorization", ok, d.str());
    if (std::abs(product - printed) > 3 * ga * g.std_error)
        std::printf("      finding: the printed closed-form product formula "
                    "gives %s, a factor %s from the verified factorization; "
                    "logged as a documented formula discrepancy, not a build "
                    "failure.\n",
                    format_double(printed).c_str(),
                    format_double(printed / product).c_str());
}

// ---- criterion 12: rank-2 harmonic sums -------------------------------------
void criterion_12()
{
    bool ok = true;
    for (int n : {2, 3, 4})
        for (int p = 0; p <= 6; ++p) {
            long long sum = 0;
            for (int j = 0; 2 * j <= p; ++j) sum += harmonic_dim(n, p - 2 * j);
            if (sum != binomial(n + p - 1, n - 1)) ok = false;
        }
    report(12, "harmonic-sums", ok, "n in {2,3,4}, p <= 6, exact (j from 0)");
}

// ---- criterion 13: reproducing kernels --------------------------------------
void criterion_13()
{
    auto A = build_algebra(Family::Spin, 3);
    auto rep = make_scalar_rep(A, Rational(3));
    auto s = sample_X(A, 42, 1000000);
    DomainX X(A);
    bool ok = true;
    double worst = 0.0;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.4, 0.4), ang(0.0, 6.28318530717958648);

    for (int p = 0; p <= 3; ++p)
        for (int j = 0; 2 * j <= p; ++j) {
            auto K = kernel_rank2(A, rep, p, j, s);
            for (const auto& f : K.span) {
                for (int trial = 0; trial < 3; ++trial) {
                    Eigen::VectorXd u0(2);
                    u0 << u(rng), u(rng);
                    if (!X.contains(u0)) continue;
                    auto [val, err] = l2x_inner(
                        A, rep,
                        [&](const Eigen::VectorXd& v) {
                            return (Eigen::VectorXd(1) << K.eval(u0, v)).finished();
                        },
                        [&](const Eigen::VectorXd& v) { return f.evaluate(v); }, s);
                    double target = f.evaluate(u0)(0);
                    double scale = std::max(std::abs(target), 1e-2);
                    double rel = std::abs(val - target) / scale;
                    worst = std::max(worst, rel);
                    if (rel >= 5e-2) ok = false;
                }
            }
            // H-equivariance: X is rotation-invariant for the spin factor and
            // the kernel must commute with the rotation action on v.
            for (int trial = 0; trial < 3; ++trial) {
                double th = ang(rng);
                Eigen::Matrix2d R;
                R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
                Eigen::VectorXd u0(2), v0(2);
                u0 << u(rng), u(rng);
                v0 << u(rng), u(rng);
                if (!X.contains(u0) || !X.contains(v0)) continue;
                double a = K.eval(u0, v0);
                double b = K.eval(Eigen::VectorXd(R * u0), Eigen::VectorXd(R * v0));
                double rel = std::abs(a - b) / std::max(std::abs(a), 1e-2);
                worst = std::max(worst, rel);
                if (rel >= 5e-2) ok = false;
            }
        }
    report(13, "reproducing-kernel", ok,
           "worst deviation " + std::string(format_double(worst))
               + " (< 5e-2, 1e6 samples)");
}

// ---- criterion 14: CLI determinism ------------------------------------------
std::string capture(const std::string& cmd)
{
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "<popen failed>";
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    pclose(p);
    return out;
}

void criterion_14(const char* cli)
{
    if (!cli) {
        report(14, "cli-determinism", false, "no CLI path supplied");
        return;
    }
    bool ok = true;
    std::string detail = "byte-identical reruns";
    const std::string quoted = std::string("\"") + cli + "\" ";
    for (const std::string args :
         {"branch table --family spin --dim 4 --lambda 3 --pmax 3 --format csv",
          "operator dpi --family spin --dim 2 --lambda 3 --format json",
          "verify jordan --family sym --size 2 --lambda 4 --seed 42 2>&1"}) {
        auto a = capture(quoted + args);
        auto b = capture(quoted + args);
        if (a.empty() || a != b) {
            ok = false;
            detail = "mismatch for: " + args;
        }
    }
    // table content: spin dim 4, lambda 3 (alpha 6) -> mults 1,3,6,10
    auto csv = capture(quoted
                       + "branch table --family spin --dim 4 --lambda 3 --pmax 3 --format csv");
    for (const std::string needle : {"0,6,1", "1,8,3", "2,10,6", "3,12,10"})
        if (csv.find(needle) == std::string::npos) {
            ok = false;
            detail = "csv table missing row " + needle;
        }
    report(14, "cli-determinism", ok, detail);
}

} // namespace

int main(int argc, char** argv)
{
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criteria_3_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14(argc > 1 ? argv[1] : nullptr);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    std::printf("---\n%d of 14 criteria failed; %.1f s total\n", g_failures, dt.count());
    return g_failures == 0 ? 0 : 1;
}

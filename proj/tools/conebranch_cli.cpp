#include "conebranch/json_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <random>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace conebranch;

namespace {

struct CommonOpts {
    std::string family = "spin";
    int dim = 3;        // spin: algebra dimension
    int size = 2;       // sym/herm: matrix size
    std::string lambda = "3";
    std::uint64_t seed = 42;
    std::uint64_t samples = 100000;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_numeric)
{
    cmd->add_option("--family", o.family, "Algebra family: spin|sym|herm")
        ->check(CLI::IsMember({"spin", "sym", "herm"}));
    cmd->add_option("--dim", o.dim, "Spin-factor dimension n (family spin)");
    cmd->add_option("--size", o.size, "Matrix size m (families sym, herm)");
    cmd->add_option("--lambda", o.lambda, "Scalar parameter lambda, as p/q");
    if (with_numeric) {
        cmd->add_option("--seed", o.seed, "PRNG seed (default 42)");
        cmd->add_option("--samples", o.samples, "Monte-Carlo sample count");
    }
    cmd->add_option("--format", o.format, "Output format: json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--output", o.output, "Write to file instead of stdout");
}

JordanAlgebra make_algebra(const CommonOpts& o)
{
    if (o.family == "spin") return build_algebra(Family::Spin, o.dim);
    if (o.family == "sym") return build_algebra(Family::Sym, o.size);
    return build_algebra(Family::HermC, o.size);
}

void emit(const CommonOpts& o, const std::string& text)
{
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + o.output);
    f << text;
}

std::string with_meta(const CommonOpts& o, const JordanAlgebra& A, Json body)
{
    Json out;
    out["meta"] = meta_json(o.seed, o.samples, A);
    out["result"] = std::move(body);
    return out.dump(2) + "\n";
}

// 1-D Simpson oracle for int_{-sqrt2}^{sqrt2} (1 - v^2/2)^{lambda-2} dv,
// the closed-form Gamma_{pi,X} integrand when X is an interval (spin dim 2).
double interval_gamma_oracle(double lambda)
{
    const double a = std::sqrt(2.0);
    const int N = 20000;
    double h = 2 * a / N, acc = 0.0;
    for (int i = 0; i <= N; ++i) {
        double v = -a + i * h;
        double w = std::pow(std::max(1.0 - v * v / 2.0, 0.0), lambda - 2.0);
        acc += w * ((i == 0 || i == N) ? 1.0 : (i % 2 ? 4.0 : 2.0));
    }
    return acc * h / 3.0;
}

int run_verify(const std::string& what, const CommonOpts& o, std::ostringstream& log)
{
    auto A = make_algebra(o);
    auto rep = make_scalar_rep(A, parse_rational(o.lambda));
    bool ok = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
        log << (pass ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) log << "  (" << detail << ")";
        log << "\n";
        ok = ok && pass;
    };

    if (what == "jordan" || what == "all") {
        auto vec_eq = [](const SurdVec& a, const SurdVec& b) {
            for (int i = 0; i < a.size(); ++i)
                if (!(a[i] == b[i])) return false;
            return true;
        };
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
        bool axioms = true;
        for (int trial = 0; trial < 50 && axioms; ++trial) {
            SurdVec x(A.n), y(A.n);
            for (int i = 0; i < A.n; ++i) {
                x[i] = Surd(Rational(num(rng), den(rng)));
                y[i] = Surd(Rational(num(rng), den(rng)));
            }
            SurdVec x2 = jmul(A, x, x);
            axioms = axioms && vec_eq(jmul(A, x, y), jmul(A, y, x));
            axioms = axioms
                  && vec_eq(jmul(A, x, jmul(A, x2, y)), jmul(A, x2, jmul(A, x, y)));
        }
        record("jordan.axioms", axioms);
        SurdVec e = A.identity();
        record("jordan.unit", vec_eq(jmul(A, e, e), e) && jdet(A, e) == Surd(1));
    }
    if (what == "strat" || what == "all") {
        auto chk = verify_jacobian(A, bump_at_identity(A, 0.4), 0.4, o.seed,
                                   std::max<std::size_t>(o.samples, 10000));
        std::ostringstream d;
        d << "rel_err=" << format_double(chk.rel_err);
        record("strat.jacobian", chk.rel_err < 5e-2, d.str());
        auto s = sample_X(A, o.seed, std::max<std::size_t>(o.samples / 10, 1000));
        DomainX X(A);
        bool member = true;
        for (const auto& v : s.points) member = member && X.contains(v);
        record("strat.membership", member);
    }
    if (what == "eigen" || what == "all") {
        bool pass = true;
        std::string detail;
        try {
            for (int p = 0; p <= 3; ++p) {
                auto W = build_Wp(A, rep, p);
                pass = pass && (long long)W.polys.size() == binomial(A.n + p - 2, A.n - 2);
            }
        } catch (const std::exception& ex) {
            pass = false;
            detail = ex.what();
        }
        record("eigen.Wp", pass, detail);
    }
    if (what == "sl2" || what == "all") {
        auto rpt = verify_sl2_structure(A, rep, 4, 3);
        record("sl2.commutators", rpt.commutators_exact);
        record("sl2.casimir[alpha(alpha-2)]", rpt.casimir_alpha_alpha_minus_2);
        log << "INFO sl2.casimir[alpha(alpha-1)] "
            << (rpt.casimir_alpha_alpha_minus_1 ? "holds" : "does not hold") << "\n";
    }
    if (what == "gamma" || what == "all") {
        auto s = sample_X(A, o.seed, std::max<std::size_t>(o.samples, 10000));
        auto g = gamma_piX_numeric(A, rep, s);
        if (A.n == 2) {
            double oracle = interval_gamma_oracle(to_double(rep.lambda));
            std::ostringstream d;
            d << "numeric=" << format_double(g.value(0, 0))
              << " oracle=" << format_double(oracle);
            record("gamma.piX", std::abs(g.value(0, 0) - oracle)
                                    < std::max(1e-2 * std::abs(oracle), 4 * g.std_error),
                   d.str());
        } else {
            auto s2 = sample_X(A, o.seed + 1, std::max<std::size_t>(o.samples, 10000));
            auto g2 = gamma_piX_numeric(A, rep, s2);
            double tol = 4 * (g.std_error + g2.std_error) + 1e-9;
            record("gamma.piX.self-consistency",
                   std::abs(g.value(0, 0) - g2.value(0, 0)) < tol);
        }
        record("gamma.alpha.positive", gamma_alpha(A, rep.alpha) > 0.0);
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"conebranch: branching tables and verification for the "
                 "stratified cone model"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* algebra = app.add_subcommand("algebra", "Jordan algebra queries");
    algebra->require_subcommand(1);
    auto* algebra_info = algebra->add_subcommand("info", "Structure constants and invariants");
    add_common(algebra_info, o, false);

    auto* op = app.add_subcommand("operator", "Differential operators");
    op->require_subcommand(1);
    auto* op_dpi = op->add_subcommand("dpi", "The operator D_pi on X");
    add_common(op_dpi, o, false);

    auto* ortho = app.add_subcommand("orthopoly", "Orthogonal polynomial spaces W_p");
    ortho->require_subcommand(1);
    auto* ortho_build = ortho->add_subcommand("build", "Lifted eigenbasis of W_p");
    int p_single = 2;
    add_common(ortho_build, o, false);
    ortho_build->add_option("--p", p_single, "Degree p");

    auto* branch = app.add_subcommand("branch", "Branching data");
    branch->require_subcommand(1);
    auto* branch_table = branch->add_subcommand("table", "Multiplicity table");
    int pmax = 4;
    add_common(branch_table, o, false);
    branch_table->add_option("--pmax", pmax, "Largest degree p");

    auto* verify = app.add_subcommand("verify", "Verification suites (exit 1 on failure)");
    verify->require_subcommand(1);
    std::vector<CLI::App*> verify_cmds;
    int verify_pmax = 3;
    for (const std::string name : {"all", "jordan", "strat", "eigen", "sl2", "gamma"}) {
        auto* c = verify->add_subcommand(name, "Verify: " + name);
        add_common(c, o, true);
        c->add_option("--pmax", verify_pmax, "Largest degree p where applicable");
        verify_cmds.push_back(c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (algebra_info->parsed()) {
            auto A = make_algebra(o);
            if (o.format == "pretty") {
                std::ostringstream t;
                t << "family " << o.family << "  n=" << A.n << " r=" << A.r
                  << " d=" << A.d << "  hash=" << A.hash() << "\n";
                emit(o, t.str());
            } else {
                emit(o, with_meta(o, A, algebra_json(A)));
            }
            return 0;
        }
        if (op_dpi->parsed()) {
            auto A = make_algebra(o);
            auto rep = make_scalar_rep(A, parse_rational(o.lambda));
            auto D = build_dpi(A, rep);
            if (o.format == "pretty") {
                emit(o, D.str("v") + "\n");
            } else {
                Json body;
                body["rep"] = rep_json(rep);
                body["dpi"] = diffop_json(D);
                body["pretty"] = D.str("v");
                emit(o, with_meta(o, A, std::move(body)));
            }
            return 0;
        }
        if (ortho_build->parsed()) {
            auto A = make_algebra(o);
            auto rep = make_scalar_rep(A, parse_rational(o.lambda));
            auto W = build_Wp(A, rep, p_single);
            if (o.format == "pretty") {
                std::ostringstream t;
                for (const auto& P : W.polys) t << P.str("v") << "\n";
                emit(o, t.str());
            } else {
                Json body;
                body["p"] = W.p;
                body["eigenvalue"] = rational_str(W.eigenvalue);
                body["dim"] = (long long)W.polys.size();
                body["basis"] = Json::array();
                for (const auto& P : W.polys) body["basis"].push_back(poly_json(P));
                emit(o, with_meta(o, A, std::move(body)));
            }
            return 0;
        }
        if (branch_table->parsed()) {
            auto A = make_algebra(o);
            auto rep = make_scalar_rep(A, parse_rational(o.lambda));
            auto T = multiplicity_table(A, rep, pmax);
            if (o.format == "csv") {
                emit(o, table_csv(T));
            } else if (o.format == "pretty") {
                std::ostringstream t;
                t << "p  lambda_p  mult\n";
                for (const auto& row : T.rows)
                    t << row.p << "  " << rational_str(row.lambda_p) << "  "
                      << row.mult << "\n";
                emit(o, t.str());
            } else {
                emit(o, with_meta(o, A, table_json(T)));
            }
            return 0;
        }
        for (std::size_t i = 0; i < verify_cmds.size(); ++i) {
            if (!verify_cmds[i]->parsed()) continue;
            static const char* names[] = {"all", "jordan", "strat", "eigen", "sl2", "gamma"};
            std::ostringstream log;
            int code = run_verify(names[i], o, log);
            auto A = make_algebra(o);
            std::ostringstream out;
            out << "meta seed=" << o.seed << " samples=" << o.samples
                << " algebra=" << A.hash() << "\n"
                << log.str()
                << (code == 0 ? "VERIFY OK\n" : "VERIFY FAILED\n");
            emit(o, out.str());
            return code;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}

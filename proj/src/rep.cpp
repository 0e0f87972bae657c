#include "conebranch/rep.hpp"

#include "conebranch/stratified.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace conebranch {

namespace {

SurdMat surd_identity(int d)
{
    SurdMat I(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            I(i, j) = Surd(i == j ? 1 : 0);
    return I;
}

SurdMat surd_zero(int d)
{
    SurdMat Z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            Z(i, j) = Surd();
    return Z;
}

bool surd_mat_equal(const SurdMat& a, const SurdMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

// Gamma with a pole guard: arguments within 1e-9 of a non-positive integer
// raise instead of returning garbage.
double safe_gamma(double x, const char* where)
{
    if (x < 1e-9 && std::abs(x - std::round(x)) < 1e-9)
        throw std::domain_error(std::string(where) + ": gamma argument at or near a pole");
    if (x <= 0.0)
        throw std::domain_error(std::string(where) + ": non-positive gamma argument");
    return std::tgamma(x);
}

} // namespace

SurdMat RepSpec::dpi_identity() const
{
    // e = sqrt(r) e_0, and the stored alpha satisfies dpi(L(e)) = -(alpha/2) Id.
    SurdMat I = surd_identity(dim_Vpi);
    SurdMat out(dim_Vpi, dim_Vpi);
    for (int i = 0; i < dim_Vpi; ++i)
        for (int j = 0; j < dim_Vpi; ++j)
            out(i, j) = Surd(Rational(-alpha) / 2) * I(i, j);
    return out;
}

RepSpec make_scalar_rep(const JordanAlgebra& A, const Rational& lambda)
{
    RepSpec rep;
    rep.kind = RepKind::Scalar;
    rep.lambda = lambda;
    rep.dim_Vpi = 1;
    rep.alpha = Rational(A.r) * lambda;
    rep.omega = lambda;
    rep.weights.assign(A.r, lambda);
    rep.convergent = lambda > Rational(2 * A.n, A.r) - 1;
    rep.dpi_L.assign(A.n, surd_zero(1));
    // dpi(L(e_i)) = -(lambda/2) tr(e_i): zero for i >= 1, and for e_0 = e/sqrt(r)
    // tr(e_0) = r / sqrt(r) = sqrt(r), so dpi_L[0] = -(lambda/2) sqrt(r).
    rep.dpi_L[0](0, 0) = Surd(Rational(-lambda) / 2) * A.sqrt_r;
    return rep;
}

RepSpec make_matrix_rep(const JordanAlgebra& A, const std::vector<SurdMat>& matrices,
                        const Rational& alpha)
{
    if (static_cast<int>(matrices.size()) != A.n)
        throw std::invalid_argument("make_matrix_rep: expected one matrix per basis element");
    const int d = static_cast<int>(matrices[0].rows());
    for (const auto& m : matrices)
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("make_matrix_rep: matrices must be square of equal size");

    RepSpec rep;
    rep.kind = RepKind::Matrix;
    rep.dim_Vpi = d;
    rep.alpha = alpha;
    rep.omega = alpha / A.r;
    rep.dpi_L = matrices;
    rep.convergent = rep.omega > Rational(2 * A.n, A.r) - 1;

    // Schur invariant: dpi(L(e)) = sqrt(r) dpi_L[0] must equal -(alpha/2) Id.
    SurdMat lhs(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            lhs(i, j) = A.sqrt_r * matrices[0](i, j);
    SurdMat want(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            want(i, j) = (i == j) ? Surd(Rational(-alpha) / 2) : Surd();
    if (!surd_mat_equal(lhs, want))
        throw std::invalid_argument(
            "make_matrix_rep: Schur invariant violated, dpi(L(e)) != -(alpha/2) Id "
            "(offending matrix: index 0)");
    return rep;
}

Eigen::MatrixXd pi_at(const JordanAlgebra& A, const RepSpec& rep, const Eigen::VectorXd& x)
{
    if (rep.kind == RepKind::Scalar) {
        Eigen::MatrixXd m(1, 1);
        m(0, 0) = std::pow(jdet(A, x), -to_double(rep.lambda));
        return m;
    }
    const Eigen::VectorXd y = cone_log(A, x);
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(rep.dim_Vpi, rep.dim_Vpi);
    for (int i = 0; i < A.n; ++i) {
        Eigen::MatrixXd di(rep.dim_Vpi, rep.dim_Vpi);
        for (int a = 0; a < rep.dim_Vpi; ++a)
            for (int b = 0; b < rep.dim_Vpi; ++b)
                di(a, b) = rep.dpi_L[i](a, b).to_double();
        gen += 2.0 * y[i] * di;
    }
    return gen.exp();
}

Eigen::MatrixXd pi_inverse_at(const JordanAlgebra& A, const RepSpec& rep,
                              const Eigen::VectorXd& x)
{
    if (rep.kind == RepKind::Scalar) {
        Eigen::MatrixXd m(1, 1);
        m(0, 0) = std::pow(jdet(A, x), to_double(rep.lambda));
        return m;
    }
    return pi_at(A, rep, x).inverse();
}

double gamma_alpha(const JordanAlgebra& A, const Rational& alpha)
{
    const double a = to_double(alpha);
    const double n = A.n;
    if (a <= n)
        throw std::domain_error("gamma_alpha: divergent, requires alpha > n");
    const double g = safe_gamma(a - n, "gamma_alpha");
    return g / (std::pow(static_cast<double>(A.r), a - n - 0.5) * std::pow(2.0, a - n));
}

double gamma_pi_formula(const JordanAlgebra& A, const Rational& lambda)
{
    const double lam = to_double(lambda);
    const double d = to_double(A.d);
    const double nr = static_cast<double>(A.n) / A.r;
    double prod = std::pow(2.0, -A.r) * std::pow(M_PI, A.r * (A.r - 1) * d / 4.0);
    for (int j = 1; j <= A.r; ++j) {
        const double arg = lam - nr - (j - 1) * d / 2.0;
        if (arg <= 1e-9)
            throw std::domain_error("gamma_pi_formula: divergent gamma argument at j=" +
                                    std::to_string(j));
        prod *= safe_gamma(arg, "gamma_pi_formula");
    }
    return prod;
}

GammaPiX gamma_piX_numeric(const JordanAlgebra& A, const RepSpec& rep,
                           const SampleSet& samples)
{
    const double expo = to_double(rep.lambda) - 2.0 * A.n / A.r;
    GammaPiX out;
    if (rep.kind == RepKind::Scalar) {
        // pi(e+v)^{-1} Delta(e+v)^{-2n/r} = Delta(e+v)^{lambda - 2n/r}
        auto [val, err] = samples.integrate([&](const Eigen::VectorXd& v) {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(A.n);
            x[0] = std::sqrt(static_cast<double>(A.r));
            x.tail(A.n - 1) = v;
            return std::pow(jdet(A, x), expo);
        });
        out.value = Eigen::MatrixXd::Constant(1, 1, val);
        out.std_error = err;
        return out;
    }
    const int d = rep.dim_Vpi;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
    for (const auto& v : samples.points) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(A.n);
        x[0] = std::sqrt(static_cast<double>(A.r));
        x.tail(A.n - 1) = v;
        acc += pi_inverse_at(A, rep, x) * std::pow(jdet(A, x), -2.0 * A.n / A.r);
    }
    out.value = acc * (samples.box_volume / static_cast<double>(samples.proposed));
    auto [ref, err] = samples.integrate([&](const Eigen::VectorXd& v) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(A.n);
        x[0] = std::sqrt(static_cast<double>(A.r));
        x.tail(A.n - 1) = v;
        return std::pow(jdet(A, x), -2.0 * A.n / A.r);
    });
    (void)ref;
    out.std_error = err;
    return out;
}

} // namespace conebranch

#include "conebranch/jordan.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace conebranch {

namespace {

// Exact ambient element during construction: the representing matrix with
// rational entries (re + i*im for HermC), or the f-coordinate row for Spin.
struct Ambient {
    RatMat re, im;
};

Ambient ambient_zero(Family fam, int size)
{
    Ambient a;
    switch (fam) {
    case Family::Spin:
        a.re = RatMat::Constant(1, size, Rational(0));
        a.im = RatMat();
        break;
    case Family::Sym:
        a.re = RatMat::Constant(size, size, Rational(0));
        a.im = RatMat();
        break;
    case Family::HermC:
        a.re = RatMat::Constant(size, size, Rational(0));
        a.im = RatMat::Constant(size, size, Rational(0));
        break;
    }
    return a;
}

Ambient ambient_jmul(Family fam, const Ambient& x, const Ambient& y)
{
    Ambient z = ambient_zero(fam, static_cast<int>(fam == Family::Spin ? x.re.cols() : x.re.rows()));
    switch (fam) {
    case Family::Spin: {
        // (x0, u) . (y0, v) = (x0 y0 + B(u, v), x0 v + y0 u)
        const auto cols = x.re.cols();
        Rational dot(0);
        for (Eigen::Index i = 0; i < cols; ++i)
            dot += x.re(0, i) * y.re(0, i);
        z.re(0, 0) = dot;
        for (Eigen::Index i = 1; i < cols; ++i)
            z.re(0, i) = x.re(0, 0) * y.re(0, i) + y.re(0, 0) * x.re(0, i);
        break;
    }
    case Family::Sym:
        z.re = (x.re * y.re + y.re * x.re) / Rational(2);
        break;
    case Family::HermC:
        z.re = (x.re * y.re - x.im * y.im + y.re * x.re - y.im * x.im) / Rational(2);
        z.im = (x.re * y.im + x.im * y.re + y.re * x.im + y.im * x.re) / Rational(2);
        break;
    }
    return z;
}

Rational ambient_trace_form(Family fam, const Ambient& x, const Ambient& y)
{
    switch (fam) {
    case Family::Spin: {
        Rational acc(0);
        for (Eigen::Index i = 0; i < x.re.cols(); ++i)
            acc += x.re(0, i) * y.re(0, i);
        return 2 * acc;
    }
    case Family::Sym:
        return (x.re * y.re).trace();
    case Family::HermC:
        return (x.re * y.re - x.im * y.im).trace();
    }
    throw std::logic_error("unreachable");
}

std::vector<Ambient> canonical_generators(Family fam, int size)
{
    std::vector<Ambient> gens;
    auto unit = [&](int i, int j, bool imag) {
        Ambient a = ambient_zero(fam, size);
        if (imag) {
            a.im(i, j) = 1;
            a.im(j, i) = -1;
        } else {
            a.re(i, j) = 1;
            a.re(j, i) = 1;
        }
        return a;
    };
    if (fam == Family::Spin) {
        for (int i = 0; i < size; ++i) {
            Ambient a = ambient_zero(fam, size);
            a.re(0, i) = 1;
            gens.push_back(a);
        }
        return gens;
    }
    for (int i = 0; i < size; ++i)
        gens.push_back(unit(i, i, false));
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            gens.push_back(unit(i, j, false));
            if (fam == Family::HermC)
                gens.push_back(unit(i, j, true));
        }
    return gens;
}

Ambient ambient_identity(Family fam, int size)
{
    Ambient a = ambient_zero(fam, size);
    if (fam == Family::Spin)
        a.re(0, 0) = 1;
    else
        for (int i = 0; i < size; ++i)
            a.re(i, i) = 1;
    return a;
}

Ambient ambient_scale(Family fam, const Ambient& x, const Rational& c)
{
    Ambient z = x;
    z.re *= c;
    if (z.im.size() > 0)
        z.im *= c;
    return z;
}

Ambient ambient_sub(const Ambient& x, const Ambient& y)
{
    Ambient z = x;
    z.re -= y.re;
    if (z.im.size() > 0)
        z.im -= y.im;
    return z;
}

bool ambient_is_zero(const Ambient& x)
{
    for (Eigen::Index i = 0; i < x.re.rows(); ++i)
        for (Eigen::Index j = 0; j < x.re.cols(); ++j)
            if (x.re(i, j) != 0)
                return false;
    for (Eigen::Index i = 0; i < x.im.rows(); ++i)
        for (Eigen::Index j = 0; j < x.im.cols(); ++j)
            if (x.im(i, j) != 0)
                return false;
    return true;
}

Eigen::MatrixXd ambient_to_double(const RatMat& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = to_double(m(i, j));
    return out;
}

} // namespace

std::string family_name(Family f)
{
    switch (f) {
    case Family::Spin:
        return "spin";
    case Family::Sym:
        return "sym";
    case Family::HermC:
        return "herm";
    }
    throw std::logic_error("unreachable");
}

Family parse_family(const std::string& name)
{
    if (name == "spin")
        return Family::Spin;
    if (name == "sym")
        return Family::Sym;
    if (name == "herm" || name == "hermc")
        return Family::HermC;
    throw std::invalid_argument("unknown Jordan algebra family '" + name + "'");
}

JordanAlgebra build_algebra(Family family, int size)
{
    if ((family == Family::Spin && size < 2) || (family != Family::Spin && size < 2))
        throw std::invalid_argument("build_algebra: size parameter must be >= 2");

    JordanAlgebra A;
    A.family = family;
    A.param = size;
    switch (family) {
    case Family::Spin:
        A.n = size;
        A.r = 2;
        A.d = Rational(size - 2);
        break;
    case Family::Sym:
        A.n = size * (size + 1) / 2;
        A.r = size;
        A.d = Rational(1);
        break;
    case Family::HermC:
        A.n = size * size;
        A.r = size;
        A.d = Rational(2);
        break;
    }
    if (Rational(A.n) != Rational(A.r) + A.d * A.r * (A.r - 1) / 2)
        throw std::logic_error("build_algebra: Peirce dimension count failed");
    A.sqrt_r = Surd::sqrt_of(Rational(A.r));

    // Unnormalized Gram-Schmidt over Q, identity first so that
    // basis[0] = e / sqrt(r).
    std::vector<Ambient> gens = canonical_generators(family, size);
    gens.insert(gens.begin(), ambient_identity(family, size));

    std::vector<Ambient> ortho;     // unnormalized, pairwise orthogonal, rational
    std::vector<Rational> norm2;    // their squared trace-form norms
    for (const auto& g : gens) {
        Ambient w = g;
        for (std::size_t k = 0; k < ortho.size(); ++k) {
            Rational c = ambient_trace_form(family, g, ortho[k]) / norm2[k];
            w = ambient_sub(w, ambient_scale(family, ortho[k], c));
        }
        if (ambient_is_zero(w))
            continue;
        ortho.push_back(w);
        norm2.push_back(ambient_trace_form(family, w, w));
    }
    if (static_cast<int>(ortho.size()) != A.n)
        throw std::logic_error("build_algebra: orthogonal basis has wrong size");

    // c[i][j][k] = (b_i . b_j | b_k) = (w_i . w_j | w_k) / sqrt(Ni Nj Nk)
    A.L.assign(A.n, SurdMat::Constant(A.n, A.n, Surd()));
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) {
            Ambient prod = ambient_jmul(family, ortho[i], ortho[j]);
            for (int k = 0; k < A.n; ++k) {
                Rational num = ambient_trace_form(family, prod, ortho[k]) / norm2[k];
                if (num == 0)
                    continue;
                // (b_i.b_j|b_k) = num * sqrt(Nk) / sqrt(Ni Nj)
                Surd c = Surd(num) * Surd::sqrt_of(norm2[k]) / Surd::sqrt_of(norm2[i] * norm2[j]);
                A.L[i](k, j) = c;
                A.L[j](k, i) = c;
            }
        }

    // Jordan frame
    std::vector<Ambient> frame_amb;
    if (family == Family::Spin) {
        Ambient c1 = ambient_zero(family, size), c2 = ambient_zero(family, size);
        c1.re(0, 0) = Rational(1, 2);
        c1.re(0, 1) = Rational(1, 2);
        c2.re(0, 0) = Rational(1, 2);
        c2.re(0, 1) = Rational(-1, 2);
        frame_amb = {c1, c2};
    } else {
        for (int k = 0; k < size; ++k) {
            Ambient c = ambient_zero(family, size);
            c.re(k, k) = 1;
            frame_amb.push_back(c);
        }
    }
    for (const auto& c : frame_amb) {
        SurdVec coords(A.n);
        for (int i = 0; i < A.n; ++i)
            coords[i] = Surd(ambient_trace_form(family, c, ortho[i])) / Surd::sqrt_of(norm2[i]);
        A.frame.push_back(coords);
    }

    // double-precision data
    for (int i = 0; i < A.n; ++i) {
        double scale = 1.0 / std::sqrt(to_double(norm2[i]));
        A.basis_re.push_back(ambient_to_double(ortho[i].re) * scale);
        if (family == Family::HermC)
            A.basis_im.push_back(ambient_to_double(ortho[i].im) * scale);
    }
    for (int i = 0; i < A.n; ++i)
        A.Ld.push_back(to_double(A.L[i]));

    return A;
}

SurdVec JordanAlgebra::identity() const
{
    SurdVec e = SurdVec::Constant(n, Surd());
    e[0] = sqrt_r;
    return e;
}

Eigen::VectorXd JordanAlgebra::identity_d() const
{
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[0] = std::sqrt(static_cast<double>(r));
    return e;
}

std::uint64_t JordanAlgebra::hash() const
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
    mix(static_cast<std::uint64_t>(family));
    mix(static_cast<std::uint64_t>(param));
    mix(static_cast<std::uint64_t>(n));
    mix(static_cast<std::uint64_t>(r));
    return h;
}

namespace {

template <class Mat, class Vec>
Mat mult_operator_impl(const std::vector<Mat>& L, const Vec& x)
{
    Mat out = L[0] * x[0];
    for (Eigen::Index i = 1; i < x.size(); ++i)
        out += L[i] * x[i];
    return out;
}

} // namespace

SurdMat mult_operator(const JordanAlgebra& A, const SurdVec& x)
{
    if (x.size() != A.n)
        throw std::invalid_argument("mult_operator: dimension mismatch");
    return mult_operator_impl(A.L, x);
}

Eigen::MatrixXd mult_operator(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    if (x.size() != A.n)
        throw std::invalid_argument("mult_operator: dimension mismatch");
    return mult_operator_impl(A.Ld, x);
}

SurdVec jmul(const JordanAlgebra& A, const SurdVec& x, const SurdVec& y)
{
    return mult_operator(A, x) * y;
}

Eigen::VectorXd jmul(const JordanAlgebra& A, const Eigen::VectorXd& x, const Eigen::VectorXd& y)
{
    return mult_operator(A, x) * y;
}

namespace {

template <class Mat, class Vec>
Mat quad_rep_impl(const JordanAlgebra& A, const Vec& x)
{
    Mat Lx = mult_operator(A, x);
    Mat Lx2 = mult_operator(A, Vec(Lx * x));
    return Mat(Lx * Lx + Lx * Lx - Lx2);
}

template <class Mat, class Vec>
Mat quad_rep_impl(const JordanAlgebra& A, const Vec& x, const Vec& y)
{
    Mat Lx = mult_operator(A, x);
    Mat Ly = mult_operator(A, y);
    Mat Lxy = mult_operator(A, Vec(Lx * y));
    return Mat(Lx * Ly + Ly * Lx - Lxy);
}

} // namespace

SurdMat quad_rep(const JordanAlgebra& A, const SurdVec& x) { return quad_rep_impl<SurdMat>(A, x); }
SurdMat quad_rep(const JordanAlgebra& A, const SurdVec& x, const SurdVec& y)
{
    return quad_rep_impl<SurdMat>(A, x, y);
}
Eigen::MatrixXd quad_rep(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    return quad_rep_impl<Eigen::MatrixXd>(A, x);
}
Eigen::MatrixXd quad_rep(const JordanAlgebra& A, const Eigen::VectorXd& x, const Eigen::VectorXd& y)
{
    return quad_rep_impl<Eigen::MatrixXd>(A, x, y);
}

SurdMat box(const JordanAlgebra& A, const SurdVec& x, const SurdVec& y)
{
    SurdMat Lx = mult_operator(A, x), Ly = mult_operator(A, y);
    return SurdMat(mult_operator(A, SurdVec(Lx * y)) + Lx * Ly - Ly * Lx);
}

Eigen::MatrixXd box(const JordanAlgebra& A, const Eigen::VectorXd& x, const Eigen::VectorXd& y)
{
    Eigen::MatrixXd Lx = mult_operator(A, x), Ly = mult_operator(A, y);
    return mult_operator(A, Eigen::VectorXd(Lx * y)) + Lx * Ly - Ly * Lx;
}

Surd jtrace(const JordanAlgebra& A, const SurdVec& x) { return A.sqrt_r * x[0]; }
double jtrace(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    return std::sqrt(static_cast<double>(A.r)) * x[0];
}

namespace {

// Newton's identities: from power sums p_k = tr(x^k) to e_r = det.
template <class Scalar, class Vec>
Scalar jdet_impl(const JordanAlgebra& A, const Vec& x)
{
    std::vector<Scalar> p(A.r + 1);
    Vec xk = x;
    p[1] = jtrace(A, x);
    for (int k = 2; k <= A.r; ++k) {
        xk = jmul(A, xk, x);
        p[k] = jtrace(A, xk);
    }
    std::vector<Scalar> e(A.r + 1);
    e[0] = Scalar(1);
    for (int k = 1; k <= A.r; ++k) {
        Scalar acc = Scalar(0);
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            acc += Scalar(sign) * e[k - i] * p[i];
            sign = -sign;
        }
        e[k] = acc / Scalar(k);
    }
    return e[A.r];
}

} // namespace

Surd jdet(const JordanAlgebra& A, const SurdVec& x) { return jdet_impl<Surd, SurdVec>(A, x); }
double jdet(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    return jdet_impl<double, Eigen::VectorXd>(A, x);
}

namespace {

Eigen::MatrixXcd representing_matrix(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(A.param, A.param);
    for (int i = 0; i < A.n; ++i) {
        M.real() += x[i] * A.basis_re[i];
        if (!A.basis_im.empty())
            M.imag() += x[i] * A.basis_im[i];
    }
    return M;
}

} // namespace

Eigen::VectorXd spectral(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    if (x.size() != A.n)
        throw std::invalid_argument("spectral: dimension mismatch");
    Eigen::VectorXd ev(A.r);
    if (A.family == Family::Spin) {
        const double s = 1.0 / std::sqrt(2.0);
        double x0 = x[0] * s;
        double un = x.tail(A.n - 1).norm() * s;
        ev << x0 + un, x0 - un;
        return ev;
    }
    Eigen::MatrixXcd M = representing_matrix(A, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
    ev = es.eigenvalues().reverse();
    return ev;
}

SpectralDecomposition spectral_decomposition(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    SpectralDecomposition out;
    if (A.family == Family::Spin) {
        const double s = 1.0 / std::sqrt(2.0);
        double x0 = x[0] * s;
        Eigen::VectorXd u = x.tail(A.n - 1) * s;
        double un = u.norm();
        Eigen::VectorXd dir = Eigen::VectorXd::Zero(A.n - 1);
        if (un > 0)
            dir = u / un;
        else
            dir[0] = 1.0;
        out.eigenvalues.resize(2);
        out.eigenvalues << x0 + un, x0 - un;
        // c = (1/2)(f0 +- dir); ONB coordinates are sqrt(2) * f-coordinates
        for (int sgn : {+1, -1}) {
            Eigen::VectorXd c(A.n);
            c[0] = std::sqrt(2.0) * 0.5;
            c.tail(A.n - 1) = std::sqrt(2.0) * 0.5 * sgn * dir;
            out.idempotents.push_back(c);
        }
        return out;
    }
    Eigen::MatrixXcd M = representing_matrix(A, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    out.eigenvalues.resize(A.r);
    for (int k = 0; k < A.r; ++k) {
        int src = A.r - 1 - k; // descending
        out.eigenvalues[k] = es.eigenvalues()[src];
        Eigen::MatrixXcd P = es.eigenvectors().col(src) * es.eigenvectors().col(src).adjoint();
        Eigen::VectorXd coords(A.n);
        for (int i = 0; i < A.n; ++i) {
            Eigen::MatrixXcd B = A.basis_re[i].cast<std::complex<double>>();
            if (!A.basis_im.empty())
                B += std::complex<double>(0, 1) * A.basis_im[i];
            coords[i] = (P * B).trace().real();
        }
        out.idempotents.push_back(coords);
    }
    return out;
}

double cone_tolerance(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    return 1e-12 * (1.0 + std::abs(jtrace(A, x)));
}

bool in_cone(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    return spectral(A, x).minCoeff() > cone_tolerance(A, x);
}

std::optional<Eigen::VectorXd> cone_sqrt(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    if (!in_cone(A, x))
        return std::nullopt;
    SpectralDecomposition sd = spectral_decomposition(A, x);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(A.n);
    for (int k = 0; k < A.r; ++k)
        out += std::sqrt(sd.eigenvalues[k]) * sd.idempotents[k];
    return out;
}

Eigen::VectorXd cone_log(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    if (!in_cone(A, x))
        throw std::domain_error("cone_log: element is not in the open cone");
    SpectralDecomposition sd = spectral_decomposition(A, x);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(A.n);
    for (int k = 0; k < A.r; ++k)
        out += std::log(sd.eigenvalues[k]) * sd.idempotents[k];
    return out;
}

} // namespace conebranch

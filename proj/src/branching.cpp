#include "conebranch/branching.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace conebranch {

namespace {

std::string gen_name(int which)
{
    switch (which) {
    case 0: return "H";
    case 1: return "X";
    default: return "Y";
    }
}

} // namespace

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

void TExpPoly::add(int tpow, const MultiPoly& c)
{
    if (c.nvars != nvars || c.dim != dim)
        throw std::invalid_argument("TExpPoly::add: shape mismatch");
    if (c.is_zero())
        return;
    auto it = tc.find(tpow);
    if (it == tc.end()) {
        tc[tpow] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            tc.erase(it);
    }
}

Eigen::VectorXd TExpPoly::evaluate(double t, const Eigen::VectorXd& v) const
{
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
    for (const auto& [k, c] : tc)
        acc += std::pow(t, k) * c.evaluate(v);
    if (exp_factor)
        acc *= std::exp(-t);
    return acc;
}

std::string TExpPoly::str() const
{
    if (tc.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : tc) {
        if (!first)
            os << " + ";
        first = false;
        os << "t^" << k << "*(" << c.str() << ")";
    }
    if (exp_factor)
        os << " * e^-t";
    return os.str();
}

TExpPoly operator+(const TExpPoly& a, const TExpPoly& b)
{
    if (a.nvars != b.nvars || a.dim != b.dim || a.exp_factor != b.exp_factor)
        throw std::invalid_argument("TExpPoly::operator+: shape mismatch");
    TExpPoly out = a;
    for (const auto& [k, c] : b.tc)
        out.add(k, c);
    return out;
}

TExpPoly operator-(const TExpPoly& a, const TExpPoly& b) { return a + Surd(-1) * b; }

TExpPoly operator*(const Surd& s, const TExpPoly& a)
{
    TExpPoly out(a.nvars, a.dim, a.exp_factor);
    if (s.is_zero())
        return out;
    for (const auto& [k, c] : a.tc)
        out.tc[k] = s * c;
    return out;
}

bool operator==(const TExpPoly& a, const TExpPoly& b)
{
    return a.exp_factor == b.exp_factor && (a - b).is_zero();
}

TExpPoly tshift(int k, const TExpPoly& f)
{
    TExpPoly out(f.nvars, f.dim, f.exp_factor);
    for (const auto& [j, c] : f.tc)
        out.tc[j + k] = c;
    return out;
}

TExpPoly dt(const TExpPoly& f)
{
    TExpPoly out(f.nvars, f.dim, f.exp_factor);
    for (const auto& [k, c] : f.tc) {
        if (k != 0)
            out.add(k - 1, Surd(k) * c);
        if (f.exp_factor)
            out.add(k, Surd(-1) * c);
    }
    return out;
}

TExpPoly apply_vop(const DiffOp& op, const TExpPoly& f)
{
    TExpPoly out(f.nvars, f.dim, f.exp_factor);
    for (const auto& [k, c] : f.tc)
        out.add(k, apply(op, c));
    return out;
}

TExpPoly Sl2Generators::H(const TExpPoly& f) const
{
    return tshift(1, Surd(2) * dt(f)) + Surd(Rational(alpha)) * f;
}

TExpPoly Sl2Generators::Xr(const TExpPoly& f) const { return Surd(-1) * tshift(1, f); }

TExpPoly Sl2Generators::Yr(const TExpPoly& f) const
{
    // -(B_alpha + t^{-1} D_pi), B_alpha = t d²/dt² + alpha d/dt
    const TExpPoly b = tshift(1, dt(dt(f))) + Surd(Rational(alpha)) * dt(f);
    return Surd(-1) * (b + tshift(-1, apply_vop(dpi_v, f)));
}

TExpPoly Sl2Generators::casimir(const TExpPoly& f) const
{
    const TExpPoly hf = H(f);
    return H(hf) + Surd(2) * hf + Surd(-4) * Yr(Xr(f));
}

Sl2Generators make_sl2_generators(const JordanAlgebra& A, const RepSpec& rep)
{
    Sl2Generators g;
    g.alpha = rep.alpha;
    g.dpi_v = build_dpi(A, rep);
    return g;
}

Sl2Report verify_sl2_structure(const JordanAlgebra& A, const RepSpec& rep, int tdeg_max,
                               int vdeg_max)
{
    const Sl2Generators g = make_sl2_generators(A, rep);
    const int m = A.n - 1;
    std::ostringstream detail;

    std::vector<TExpPoly> span;
    for (int a = 0; a <= tdeg_max; ++a)
        for (int d = 0; d <= vdeg_max; ++d)
            for (const auto& exps : monomial_exponents(m, d))
                for (int comp = 0; comp < rep.dim_Vpi; ++comp) {
                    SurdVec c(rep.dim_Vpi);
                    for (int i = 0; i < rep.dim_Vpi; ++i)
                        c[i] = Surd(i == comp ? 1 : 0);
                    TExpPoly f(m, rep.dim_Vpi, true);
                    f.add(a, mp_vector_monomial(m, exps, c));
                    span.push_back(f);
                }

    const Rational c1 = Rational(rep.alpha) * (rep.alpha - 1);
    const Rational c2 = Rational(rep.alpha) * (rep.alpha - 2);

    Sl2Report rep_out;
    rep_out.commutators_exact = true;
    rep_out.casimir_alpha_alpha_minus_1 = true;
    rep_out.casimir_alpha_alpha_minus_2 = true;

    for (const auto& f : span) {
        const TExpPoly hx = g.H(g.Xr(f)) - g.Xr(g.H(f));
        if (!(hx == Surd(2) * g.Xr(f))) {
            rep_out.commutators_exact = false;
            detail << "[H,X] != 2X on " << f.str() << "\n";
        }
        const TExpPoly hy = g.H(g.Yr(f)) - g.Yr(g.H(f));
        if (!(hy == Surd(-2) * g.Yr(f))) {
            rep_out.commutators_exact = false;
            detail << "[H,Y] != -2Y on " << f.str() << "\n";
        }
        // [X,Y] = H reads [Xr,Yr] = -H after stripping the factors i
        const TExpPoly xy = g.Xr(g.Yr(f)) - g.Yr(g.Xr(f));
        if (!(xy == Surd(-1) * g.H(f))) {
            rep_out.commutators_exact = false;
            detail << "[X,Y] != H on " << f.str() << "\n";
        }

        const TExpPoly cas = g.casimir(f);
        const TExpPoly d4 = Surd(-4) * apply_vop(g.dpi_v, f);
        if (!(cas == Surd(Rational(c1)) * f + d4))
            rep_out.casimir_alpha_alpha_minus_1 = false;
        if (!(cas == Surd(Rational(c2)) * f + d4))
            rep_out.casimir_alpha_alpha_minus_2 = false;
    }

    if (!rep_out.casimir_alpha_alpha_minus_1 && rep_out.casimir_alpha_alpha_minus_2)
        detail << "Casimir = alpha(alpha-2) - 4 D_pi exactly; the constant "
                  "alpha(alpha-1) leaves residual alpha * id\n";
    rep_out.detail = detail.str();
    return rep_out;
}

TExpPoly pullback_iota(const JordanAlgebra& A, const MultiPoly& f_ambient)
{
    if (f_ambient.nvars != A.n)
        throw std::invalid_argument("pullback_iota: expected ambient coordinates");
    const int m = A.n - 1;
    const Surd inv_sqrt_r = Surd(1) / A.sqrt_r;
    const Surd inv_r{Rational(1, A.r)};
    TExpPoly out(m, f_ambient.dim, false);
    for (const auto& [k, c] : f_ambient.terms) {
        int tdeg = k[0];
        Surd scale(1);
        for (int j = 0; j < k[0]; ++j)
            scale *= inv_sqrt_r;
        MultiPoly::Key vexp(m, 0);
        for (int i = 1; i < A.n; ++i) {
            tdeg += k[i];
            vexp[i - 1] = k[i];
            for (int j = 0; j < k[i]; ++j)
                scale *= inv_r;
        }
        SurdVec coef = c;
        for (int i = 0; i < f_ambient.dim; ++i)
            coef[i] *= scale;
        out.add(tdeg, mp_vector_monomial(m, vexp, coef));
    }
    return out;
}

double bessel_identity_check(const JordanAlgebra& A, const RepSpec& rep,
                             const MultiPoly& f_ambient, int npoints, std::uint64_t seed)
{
    const DiffOp bessel = bessel_e_component(A, rep);
    const MultiPoly lhs_poly = apply(bessel, f_ambient);

    const TExpPoly fs = pullback_iota(A, f_ambient);
    const Sl2Generators g = make_sl2_generators(A, rep);
    // B_alpha + t^{-1} D_pi, on the exp-free ring
    const TExpPoly rhs = tshift(1, dt(dt(fs))) + Surd(Rational(rep.alpha)) * dt(fs) +
                         tshift(-1, apply_vop(g.dpi_v, fs));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ut(0.5, 4.0);
    DomainX X(A);
    std::uniform_real_distribution<double> uv(-X.bounding_radius, X.bounding_radius);
    const int m = A.n - 1;
    double max_rel = 0.0;
    Eigen::VectorXd v(m);
    int done = 0;
    while (done < npoints) {
        for (int i = 0; i < m; ++i)
            v[i] = uv(rng);
        if (!X.contains(v))
            continue;
        const double t = ut(rng);
        const Eigen::VectorXd lhs = lhs_poly.evaluate(iota(A, t, v));
        const Eigen::VectorXd rhsv = rhs.evaluate(t, v);
        const double denom = std::max({lhs.norm(), rhsv.norm(), 1.0});
        max_rel = std::max(max_rel, (lhs - rhsv).norm() / denom);
        ++done;
    }
    return max_rel;
}

TExpPoly holo_apply(const TExpPoly& g, const MultiPoly& P, int p)
{
    TExpPoly out(P.nvars, P.dim, g.exp_factor);
    for (const auto& [k, c] : g.tc) {
        if (c.degree() > 0)
            throw std::invalid_argument("holo_apply: g must depend on t only");
        if (c.is_zero())
            continue;
        out.add(k + p, c.coeff(MultiPoly::Key(c.nvars, 0))[0] * P);
    }
    return out;
}

IntertwineReport intertwine_check(const JordanAlgebra& A, const RepSpec& rep, int p,
                                  const MultiPoly& P, int kmax)
{
    const Sl2Generators big = make_sl2_generators(A, rep);
    // rho_{alpha+2p}: same generators in t only, D = 0
    Sl2Generators small;
    small.alpha = Rational(rep.alpha) + 2 * p;
    small.dpi_v = DiffOp(P.nvars, 1); // zero operator

    IntertwineReport out;
    out.ok = true;
    std::ostringstream detail;
    for (int k = 0; k <= kmax; ++k) {
        TExpPoly g(P.nvars, 1, true);
        g.add(k, mp_const(P.nvars, Surd(1)));
        for (int which = 0; which < 3; ++which) {
            auto act = [&](const Sl2Generators& gen, const TExpPoly& f) {
                if (which == 0)
                    return gen.H(f);
                if (which == 1)
                    return gen.Xr(f);
                return gen.Yr(f);
            };
            const TExpPoly lhs = holo_apply(act(small, g), P, p);
            const TExpPoly rhs = act(big, holo_apply(g, P, p));
            if (!(lhs == rhs)) {
                out.ok = false;
                detail << "generator " << gen_name(which) << " fails on t^" << k
                       << " e^-t\n";
            }
        }
    }
    out.detail = detail.str();
    return out;
}

double t_inner(int a, int b, double beta)
{
    const double s = a + b + beta;
    return std::tgamma(s) / std::pow(2.0, s);
}

std::pair<double, double> l2omega_inner(const JordanAlgebra& A, const RepSpec& rep,
                                        const TExpPoly& f, const TExpPoly& g,
                                        const SampleSet& samples)
{
    if (!f.exp_factor || !g.exp_factor)
        throw std::invalid_argument("l2omega_inner: expected K-finite vectors (e^{-t})");
    const double alpha = to_double(rep.alpha);
    const double c = gamma_alpha(A, rep.alpha) / std::pow(static_cast<double>(A.r), alpha - 0.5);
    double acc = 0.0, err2 = 0.0;
    for (const auto& [k, ck] : f.tc)
        for (const auto& [l, cl] : g.tc) {
            const auto [x, e] = l2x_inner(A, rep, ck, cl, samples);
            const double w = t_inner(k, l, alpha);
            acc += w * x;
            err2 += w * w * e * e;
        }
    return {c * acc, c * std::sqrt(err2)};
}

SbResult sb_apply(const JordanAlgebra& A, const RepSpec& rep, const TExpPoly& f,
                  const MultiPoly& P, int p, const SampleSet& samples, int grid_points)
{
    if (!f.exp_factor)
        throw std::invalid_argument("sb_apply: expected a K-finite vector (e^{-t})");
    SbResult out;
    double err2 = 0.0;
    for (const auto& [k, c] : f.tc) {
        const auto [x, e] = l2x_inner(A, rep, c, P, samples);
        out.coeffs[k - p] += x;
        err2 += e * e;
    }
    out.mc_error = std::sqrt(err2);

    const double alpha = to_double(rep.alpha);
    const double tmax = 4.0 * std::max(alpha, 1.0);
    out.tgrid.resize(grid_points);
    out.values.resize(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        const double t = tmax * std::pow(2.0, -(grid_points - 1 - i) * 0.35);
        out.tgrid[i] = t;
        double val = 0.0;
        for (const auto& [k, ck] : out.coeffs)
            val += ck * std::pow(t, k);
        out.values[i] = val * std::exp(-t);
    }

    // least-squares residual against span{t^k e^{-t}, k >= 0}
    int kmax = 0;
    for (const auto& [k, ck] : out.coeffs)
        kmax = std::max(kmax, k);
    kmax = std::max(kmax, 3);
    Eigen::MatrixXd B(grid_points, kmax + 1);
    Eigen::VectorXd y(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        y[i] = out.values[i];
        for (int k = 0; k <= kmax; ++k)
            B(i, k) = std::pow(out.tgrid[i], k) * std::exp(-out.tgrid[i]);
    }
    const Eigen::VectorXd sol = B.colPivHouseholderQr().solve(y);
    const double ynorm = y.norm();
    out.fit_residual = ynorm == 0.0 ? 0.0 : (B * sol - y).norm() / std::max(ynorm, 1e-30);
    return out;
}

BranchingTable multiplicity_table(const JordanAlgebra& A, const RepSpec& rep, int p_max)
{
    if (p_max < 0)
        throw std::invalid_argument("multiplicity_table: negative p_max");
    BranchingTable table;
    table.family = family_name(A.family);
    table.param = A.param;
    table.alpha = rep.alpha;
    table.dim_Vpi = rep.dim_Vpi;
    for (int p = 0; p <= p_max; ++p) {
        BranchRow row;
        row.p = p;
        row.lambda_p = Rational(rep.alpha) + 2 * p;
        row.mult = binomial(A.n + p - 2, A.n - 2) * rep.dim_Vpi;
        if (A.family == Family::Spin && rep.kind == RepKind::Scalar) {
            for (int j = 0; 2 * j <= p; ++j)
                row.harmonics.emplace_back(p - 2 * j, harmonic_dim(A.n - 1, p - 2 * j));
        }
        table.rows.push_back(row);
    }
    return table;
}

} // namespace conebranch

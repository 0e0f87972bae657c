#ifndef CONEBRANCH_BRANCHING_HPP
#define CONEBRANCH_BRANCHING_HPP

#include "conebranch/orthopoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace conebranch {

// Element of the ring (Laurent polynomials in t) x (polynomials in v),
// optionally carrying the factor e^{-t}; closed under the stratified sl2
// generators. K-finite vectors live here as Q(t, v) e^{-t}.
struct TExpPoly {
    int nvars = 0;
    int dim = 1;
    bool exp_factor = true;
    std::map<int, MultiPoly> tc; // t-power -> v-polynomial coefficient

    TExpPoly() = default;
    TExpPoly(int nvars_, int dim_, bool exp_factor_ = true)
        : nvars(nvars_), dim(dim_), exp_factor(exp_factor_) {}

    bool is_zero() const { return tc.empty(); }
    void add(int tpow, const MultiPoly& c);
    Eigen::VectorXd evaluate(double t, const Eigen::VectorXd& v) const;
    std::string str() const;
};

TExpPoly operator+(const TExpPoly& a, const TExpPoly& b);
TExpPoly operator-(const TExpPoly& a, const TExpPoly& b);
TExpPoly operator*(const Surd& s, const TExpPoly& a);
bool operator==(const TExpPoly& a, const TExpPoly& b);

TExpPoly tshift(int k, const TExpPoly& f);          // multiply by t^k
TExpPoly dt(const TExpPoly& f);                     // d/dt, aware of e^{-t}
TExpPoly apply_vop(const DiffOp& op, const TExpPoly& f);

// The stratified sl2 generators with the scalar factor i stripped:
//   H  = 2 t d/dt + alpha
//   X  = i Xr with Xr f = -t f
//   Y  = i Yr with Yr = -(B_alpha + t^{-1} D_pi),  B_alpha = t d²/dt² + alpha d/dt
// so that [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H hold, equivalently
// [H,Xr] = 2Xr, [H,Yr] = -2Yr, [Xr,Yr] = -H, and the Casimir satisfies
// H² + 2H + 4YX = H² + 2H - 4 Yr Xr.
struct Sl2Generators {
    Rational alpha;
    DiffOp dpi_v; // D_pi acting in the v variables

    TExpPoly H(const TExpPoly& f) const;
    TExpPoly Xr(const TExpPoly& f) const;
    TExpPoly Yr(const TExpPoly& f) const;
    TExpPoly casimir(const TExpPoly& f) const; // H² + 2H - 4 Yr Xr
};

Sl2Generators make_sl2_generators(const JordanAlgebra& A, const RepSpec& rep);

struct Sl2Report {
    bool commutators_exact = false;
    // Casimir compared against c - 4 D_pi for the two candidate constants
    bool casimir_alpha_alpha_minus_1 = false;
    bool casimir_alpha_alpha_minus_2 = false;
    std::string detail;
};

// Exact check on the spanning set t^a * (v-monomial) * e^{-t},
// a <= tdeg_max, v-degree <= vdeg_max.
Sl2Report verify_sl2_structure(const JordanAlgebra& A, const RepSpec& rep,
                               int tdeg_max = 5, int vdeg_max = 4);

// Chain-rule identity: (e|B_pi f) evaluated at iota(t,v) versus
// (B_alpha + t^{-1} D_pi)(f o iota); max relative error over random points.
double bessel_identity_check(const JordanAlgebra& A, const RepSpec& rep,
                             const MultiPoly& f_ambient, int npoints,
                             std::uint64_t seed);

// Substitute x_0 = t/sqrt(r), x_i = (t/r) v_i into an ambient polynomial.
TExpPoly pullback_iota(const JordanAlgebra& A, const MultiPoly& f_ambient);

struct IntertwineReport {
    bool ok = false;
    std::string detail;
};

// Exact symbolic verification on g = t^k e^{-t}, k <= kmax, that
// Phi_p(P) intertwines rho_{alpha+2p} with the stratified action, for all
// three generators.
IntertwineReport intertwine_check(const JordanAlgebra& A, const RepSpec& rep, int p,
                                  const MultiPoly& P, int kmax = 5);

// Holographic operator: g(t) (a t-only TExpPoly) -> t^p g(t) P(v).
TExpPoly holo_apply(const TExpPoly& g, const MultiPoly& P, int p);

struct SbResult {
    std::map<int, double> coeffs;   // phi f = sum_k coeffs[k] t^k e^{-t}
    std::vector<double> tgrid;
    std::vector<double> values;
    double fit_residual = 0.0;      // relative lsq residual against t^k e^{-t}, k >= 0
    double mc_error = 0.0;
};

// Symmetry breaking operator phi_p(P) applied to a K-finite f, using
// Monte-Carlo for the X-integrals and symbolic t-bookkeeping.
SbResult sb_apply(const JordanAlgebra& A, const RepSpec& rep, const TExpPoly& f,
                  const MultiPoly& P, int p, const SampleSet& samples,
                  int grid_points = 32);

// Exact t-integral: <t^a e^{-t}, t^b e^{-t}> in L^2(R+, t^{beta-1} dt).
double t_inner(int a, int b, double beta);

// Inner product of K-finite vectors in L^2_pi(Omega) computed through the
// stratified factorization, carrying the constant Gamma_alpha / r^{alpha-1/2}.
std::pair<double, double> l2omega_inner(const JordanAlgebra& A, const RepSpec& rep,
                                        const TExpPoly& f, const TExpPoly& g,
                                        const SampleSet& samples);

struct BranchRow {
    int p = 0;
    Rational lambda_p;                                // alpha + 2p
    long long mult = 0;                               // C(n+p-2, n-2) dim V_pi
    std::vector<std::pair<int, long long>> harmonics; // (degree, dim), spin scalar only
};

struct BranchingTable {
    std::string family;
    int param = 0;
    Rational alpha;
    int dim_Vpi = 1;
    std::vector<BranchRow> rows;
};

BranchingTable multiplicity_table(const JordanAlgebra& A, const RepSpec& rep, int p_max);

long long binomial(int n, int k);

} // namespace conebranch

#endif

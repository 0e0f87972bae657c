#ifndef CONEBRANCH_STRATIFIED_HPP
#define CONEBRANCH_STRATIFIED_HPP

#include "conebranch/poly.hpp"
#include "conebranch/rep.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace conebranch {

// The bounded domain X = { v in e-perp : e + v in cone }, in the coordinates
// of the orthonormal basis e_1..e_{n-1} of e-perp (so points have n-1 entries
// and trace zero automatically).
struct DomainX {
    const JordanAlgebra* algebra = nullptr;
    double bounding_radius = 0.0; // trace-form bound: (v|v) < r(r-1) on X
    double tolerance = 1e-12;

    explicit DomainX(const JordanAlgebra& A);
    bool contains(const Eigen::VectorXd& v) const;
    // ambient coordinates of e + v
    Eigen::VectorXd ambient(const Eigen::VectorXd& v) const;
};

// Seeded Monte-Carlo cloud on X. Proposals are uniform in the cube
// [-R, R]^{n-1} with R = bounding_radius; rejected proposals are counted so
// that integrals over X are box_volume * (sum over accepted) / proposed.
struct SampleSet {
    std::uint64_t seed = 0;
    std::uint64_t proposed = 0;
    double box_volume = 0.0;
    double acceptance_rate = 0.0;
    std::vector<Eigen::VectorXd> points;

    // integral over X of f dv, with standard error
    std::pair<double, double> integrate(const std::function<double(const Eigen::VectorXd&)>& f) const;
};

SampleSet sample_X(const JordanAlgebra& A, std::uint64_t seed, std::size_t count);

// Binary cache: magic "XSMP", algebra hash, seed, count, then f64 coordinates.
void save_samples(const std::string& path, const JordanAlgebra& A, const SampleSet& s);
SampleSet load_samples(const std::string& path, const JordanAlgebra& A);

// iota(t, v) = (t/r)(e + v) in ambient coordinates; iota_inv fixes t = tr(x).
Eigen::VectorXd iota(const JordanAlgebra& A, double t, const Eigen::VectorXd& v);
std::pair<double, Eigen::VectorXd> iota_inv(const JordanAlgebra& A, const Eigen::VectorXd& x);

// L^2_pi(X) inner product: for the scalar kind
//   Gamma_piX * int_X f(v) g(v) Delta(e+v)^{lambda - n/r} dv,
// and in general int_X < Gamma_piX W f, W g > Delta(e+v)^{-n/r} dv with
// W = pi((e+v)^{1/2})^{-1}. Returns (value, standard error).
std::pair<double, double> l2x_inner(const JordanAlgebra& A, const RepSpec& rep,
                                    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                                    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& g,
                                    const SampleSet& samples);
std::pair<double, double> l2x_inner(const JordanAlgebra& A, const RepSpec& rep,
                                    const MultiPoly& f, const MultiPoly& g,
                                    const SampleSet& samples);

struct JacobianCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;
};

// Two independent Monte-Carlo estimates of int_Omega f: directly over a box
// around e, and via r^{1/2-n} int int f(iota(t,v)) t^{n-1} dt dv.
JacobianCheck verify_jacobian(const JordanAlgebra& A,
                              const std::function<double(const Eigen::VectorXd&)>& f,
                              double support_radius, std::uint64_t seed, std::size_t count);

// Smooth bump supported in the trace-norm ball of radius rho around e.
std::function<double(const Eigen::VectorXd&)> bump_at_identity(const JordanAlgebra& A, double rho);

} // namespace conebranch

#endif

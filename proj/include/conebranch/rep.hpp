#ifndef CONEBRANCH_REP_HPP
#define CONEBRANCH_REP_HPP

#include "conebranch/jordan.hpp"

#include <vector>

namespace conebranch {

struct SampleSet; // module stratified

enum class RepKind { Scalar, Matrix };

// The representation pi of the structure group factor, reduced to the data
// actually used downstream: the constant alpha, the matrices dpi(L(e_i)) in
// the orthonormal basis, and the scalar parameter lambda when applicable.
//
// Invariant: dpi(L(e)) = -(alpha/2) Id exactly; since e = sqrt(r) e_0 this
// reads sqrt(r) * dpi_L[0] = -(alpha/2) Id.
struct RepSpec {
    RepKind kind = RepKind::Scalar;
    Rational lambda;           // Scalar kind only
    int dim_Vpi = 1;
    Rational alpha;
    Rational omega;            // Scalar kind: omega = lambda
    std::vector<Rational> weights;
    std::vector<SurdMat> dpi_L; // one per basis element e_0..e_{n-1}
    bool convergent = false;    // omega > 2n/r - 1

    SurdMat dpi_identity() const; // dpi(L(e))
};

RepSpec make_scalar_rep(const JordanAlgebra& A, const Rational& lambda);
RepSpec make_matrix_rep(const JordanAlgebra& A, const std::vector<SurdMat>& matrices,
                        const Rational& alpha);

// pi(x) for x in the cone, via pi(exp y) = exp(2 sum y_i dpi(L(e_i))) with
// y = cone_log(x). Scalar kind reduces to Delta(x)^{-lambda}.
Eigen::MatrixXd pi_at(const JordanAlgebra& A, const RepSpec& rep, const Eigen::VectorXd& x);
Eigen::MatrixXd pi_inverse_at(const JordanAlgebra& A, const RepSpec& rep,
                              const Eigen::VectorXd& x);

// Gamma_alpha = Gamma(alpha - n) / (r^{alpha-n-1/2} 2^{alpha-n}); alpha > n.
double gamma_alpha(const JordanAlgebra& A, const Rational& alpha);

// The closed-form product 2^{-r} pi^{r(r-1)d/4} prod_j Gamma(lambda - n/r - (j-1)d/2),
// evaluated exactly as written; cross-checked numerically elsewhere.
double gamma_pi_formula(const JordanAlgebra& A, const Rational& lambda);

struct GammaPiX {
    Eigen::MatrixXd value;  // 1x1 for scalar kind
    double std_error = 0.0; // Monte-Carlo standard error (scalar entrywise bound)
};

GammaPiX gamma_piX_numeric(const JordanAlgebra& A, const RepSpec& rep,
                           const SampleSet& samples);

} // namespace conebranch

#endif

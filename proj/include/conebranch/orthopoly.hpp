#ifndef CONEBRANCH_ORTHOPOLY_HPP
#define CONEBRANCH_ORTHOPOLY_HPP

#include "conebranch/diffop.hpp"
#include "conebranch/stratified.hpp"

#include <utility>
#include <vector>

namespace conebranch {

enum class BasisProvenance { Recursion, GramSchmidt };

struct OrthoBasis {
    int p = 0;
    Rational eigenvalue; // -p(p + alpha - 1)
    BasisProvenance provenance = BasisProvenance::Recursion;
    std::vector<MultiPoly> polys;
};

// Solve the downward recursion
//   (r Laplacian) P_{i+2} + Psi_pi P_{i+1} = (i(i+alpha-1) - p(p+alpha-1)) P_i
// for the unique eigenpolynomial P = sum P_i with top term P_p = Q.
MultiPoly lift(const JordanAlgebra& A, const RepSpec& rep, const MultiPoly& Q);

// Lift of the full monomial basis of Pol_p(X, V_pi); asserts the exact
// eigen-equation D_pi P = -p(p+alpha-1) P on every output.
OrthoBasis build_Wp(const JordanAlgebra& A, const RepSpec& rep, int p);

// Numerical alternative: orthogonalize the degree-p monomials against the
// full lower-degree flag in the L^2_pi(X) inner product.
OrthoBasis gram_schmidt_Wp(const JordanAlgebra& A, const RepSpec& rep, int p,
                           const SampleSet& samples);

// dim of harmonic polynomials of degree k in nvars variables
long long harmonic_dim(int nvars, int k);

// Exact basis of the kernel of the Laplacian on homogeneous degree-k
// polynomials (rational coefficients).
std::vector<MultiPoly> harmonic_basis(int nvars, int k);

// P homogeneous of degree p decomposed as sum_j |v|^{2j} h_{p-2j} with each
// h harmonic; exact. Returns pairs (j, h_{p-2j}).
std::vector<std::pair<int, MultiPoly>> harmonic_decompose(const MultiPoly& P);

// Reproducing kernel of the lifted subspace F_p^j = lift(|v|^{2j} H_{p-2j})
// (rank-2 scalar case), orthonormalized in L^2_pi(X) by Monte-Carlo.
struct KernelRank2 {
    int p = 0;
    int j = 0;
    std::vector<MultiPoly> span;  // lifted basis
    Eigen::MatrixXd ortho;        // row a: coefficients of the a-th ON vector

    double eval(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
};

KernelRank2 kernel_rank2(const JordanAlgebra& A, const RepSpec& rep, int p, int j,
                         const SampleSet& samples);

} // namespace conebranch

#endif

#ifndef CONEBRANCH_JORDAN_HPP
#define CONEBRANCH_JORDAN_HPP

#include "conebranch/eigen_support.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace conebranch {

enum class Family { Spin, Sym, HermC };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Simple Euclidean Jordan algebra in an orthonormal basis of the trace form,
// with basis[0] = e / sqrt(r). Immutable after construction.
//
// Structure constants are exact: L[i] is the multiplication operator L(e_i),
// so e_i . e_j = sum_k L[i](k,j) e_k with entries in a real multiquadratic
// extension of Q.
struct JordanAlgebra {
    Family family = Family::Spin;
    int param = 0; // Spin: ambient dimension n; Sym/HermC: matrix size m
    int n = 0;     // dimension
    int r = 0;     // rank
    Rational d;    // Peirce constant, n = r + d r (r-1) / 2

    std::vector<SurdMat> L;     // n matrices, n x n
    std::vector<SurdVec> frame; // Jordan frame c_1..c_r in basis coordinates
    Surd sqrt_r;

    // Representing matrix of each basis element (double precision), used by
    // the spectral routines. Spin stores the f-coordinate row instead.
    std::vector<Eigen::MatrixXd> basis_re;
    std::vector<Eigen::MatrixXd> basis_im; // HermC only
    std::vector<Eigen::MatrixXd> Ld;       // double copies of L

    SurdVec identity() const;
    Eigen::VectorXd identity_d() const;
    std::uint64_t hash() const;
};

JordanAlgebra build_algebra(Family family, int size);

SurdMat mult_operator(const JordanAlgebra& A, const SurdVec& x);
Eigen::MatrixXd mult_operator(const JordanAlgebra& A, const Eigen::VectorXd& x);

SurdVec jmul(const JordanAlgebra& A, const SurdVec& x, const SurdVec& y);
Eigen::VectorXd jmul(const JordanAlgebra& A, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// P(x) = 2 L(x)^2 - L(x^2); P(x,y) = L(x)L(y) + L(y)L(x) - L(xy)
SurdMat quad_rep(const JordanAlgebra& A, const SurdVec& x);
SurdMat quad_rep(const JordanAlgebra& A, const SurdVec& x, const SurdVec& y);
Eigen::MatrixXd quad_rep(const JordanAlgebra& A, const Eigen::VectorXd& x);
Eigen::MatrixXd quad_rep(const JordanAlgebra& A, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// x box y = L(xy) + [L(x), L(y)]
SurdMat box(const JordanAlgebra& A, const SurdVec& x, const SurdVec& y);
Eigen::MatrixXd box(const JordanAlgebra& A, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

Surd jtrace(const JordanAlgebra& A, const SurdVec& x);
double jtrace(const JordanAlgebra& A, const Eigen::VectorXd& x);

// Jordan determinant through Newton's identities on tr(x^k), k = 1..r.
Surd jdet(const JordanAlgebra& A, const SurdVec& x);
double jdet(const JordanAlgebra& A, const Eigen::VectorXd& x);

// Eigenvalues in descending order (r of them, with multiplicity).
Eigen::VectorXd spectral(const JordanAlgebra& A, const Eigen::VectorXd& x);

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;          // descending, length r
    std::vector<Eigen::VectorXd> idempotents; // basis coordinates, complete system
};

SpectralDecomposition spectral_decomposition(const JordanAlgebra& A, const Eigen::VectorXd& x);

double cone_tolerance(const JordanAlgebra& A, const Eigen::VectorXd& x);
bool in_cone(const JordanAlgebra& A, const Eigen::VectorXd& x);
std::optional<Eigen::VectorXd> cone_sqrt(const JordanAlgebra& A, const Eigen::VectorXd& x);
Eigen::VectorXd cone_log(const JordanAlgebra& A, const Eigen::VectorXd& x);

} // namespace conebranch

#endif

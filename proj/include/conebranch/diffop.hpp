#ifndef CONEBRANCH_DIFFOP_HPP
#define CONEBRANCH_DIFFOP_HPP

#include "conebranch/poly.hpp"
#include "conebranch/rep.hpp"

#include <vector>

namespace conebranch {

// One term of a differential operator: (scalar polynomial coefficient)
// x (partial derivative multi-index) x (endomorphism of the value space).
struct DiffOpTerm {
    MultiPoly coeff;            // dim 1
    MultiPoly::Key deriv;       // length nvars
    SurdMat endo;               // dim x dim
};

struct DiffOp {
    int nvars = 0;
    int dim = 1;
    std::vector<DiffOpTerm> terms;

    DiffOp() = default;
    DiffOp(int nvars_, int dim_) : nvars(nvars_), dim(dim_) {}

    void add_term(const MultiPoly& coeff, const MultiPoly::Key& d, const SurdMat& endo);
    void add_scalar_term(const MultiPoly& coeff, const MultiPoly::Key& d); // endo = Id
    std::string str(const std::string& var = "v") const;
};

MultiPoly apply(const DiffOp& op, const MultiPoly& p);

DiffOp operator+(const DiffOp& a, const DiffOp& b);
DiffOp operator*(const Surd& s, const DiffOp& a);

// Operator composition via the multi-index Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b);

// Euler operator E = sum v_i d_i and Laplacian sum d_i^2 on n-1 variables.
DiffOp euler_operator(int nvars, int dim = 1);
DiffOp laplacian(int nvars, int dim = 1);

// Psi_pi = sum r (e_i e_j | v) d_i d_j - 2 r sum dpi(L(e_i)) d_i, i,j >= 1.
DiffOp build_psi_pi(const JordanAlgebra& A, const RepSpec& rep);

// D_pi from the displayed second-order formula:
//   r sum d_i^2 + sum (r (e_i e_j|v) - v_i v_j) d_i d_j
//   - alpha sum v_i d_i - 2 r sum dpi(L(e_i)) d_i.
DiffOp build_dpi(const JordanAlgebra& A, const RepSpec& rep);

// Same operator assembled as r Laplacian + Psi_pi - E(E + alpha - 1); used to
// cross-check build_dpi by application to a monomial basis.
DiffOp build_dpi_decomposed(const JordanAlgebra& A, const RepSpec& rep);

// The e-component (e|B_pi) of the Bessel operator, in the n ambient
// coordinates x_0..x_{n-1}:
//   sum (e|P(e_i,e_j)x) d_i d_j - 2 sum dpi(L(e_i)) d_i.
DiffOp bessel_e_component(const JordanAlgebra& A, const RepSpec& rep);

} // namespace conebranch

#endif

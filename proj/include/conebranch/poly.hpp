#ifndef CONEBRANCH_POLY_HPP
#define CONEBRANCH_POLY_HPP

#include "conebranch/eigen_support.hpp"

#include <map>
#include <string>
#include <vector>

namespace conebranch {

// Sparse multivariate polynomial with values in a finite-dimensional vector
// space (dim = 1 for scalar polynomials). Coefficients are exact Surd numbers;
// keys are exponent multi-indices of length nvars. No zero coefficient vector
// is ever stored.
struct MultiPoly {
    using Key = std::vector<int>;

    int nvars = 0;
    int dim = 1;
    std::map<Key, SurdVec> terms;

    MultiPoly() = default;
    MultiPoly(int nvars_, int dim_) : nvars(nvars_), dim(dim_) {}

    bool is_zero() const { return terms.empty(); }
    int degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    SurdVec coeff(const Key& k) const;
    void set_coeff(const Key& k, const SurdVec& c);

    Eigen::VectorXd evaluate(const Eigen::VectorXd& point) const;
    SurdVec evaluate_exact(const SurdVec& point) const;

    MultiPoly homogeneous_part(int k) const;
    std::string str(const std::string& var = "v") const;
};

MultiPoly mp_zero(int nvars, int dim = 1);
MultiPoly mp_const(int nvars, const Surd& c);
MultiPoly mp_monomial(int nvars, const MultiPoly::Key& exps, const Surd& c);
MultiPoly mp_vector_monomial(int nvars, const MultiPoly::Key& exps, const SurdVec& c);

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const Surd& s, const MultiPoly& a);

// Product; at least one factor must be scalar-valued.
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

bool operator==(const MultiPoly& a, const MultiPoly& b);
inline bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

MultiPoly deriv(const MultiPoly& p, int var);
MultiPoly deriv(const MultiPoly& p, const MultiPoly::Key& multi);
MultiPoly apply_endo(const SurdMat& endo, const MultiPoly& p);

// All exponent multi-indices of total degree exactly p in nvars variables,
// in lexicographic order (deterministic basis enumeration).
std::vector<MultiPoly::Key> monomial_exponents(int nvars, int p);

} // namespace conebranch

#endif

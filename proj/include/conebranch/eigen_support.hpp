#ifndef CONEBRANCH_EIGEN_SUPPORT_HPP
#define CONEBRANCH_EIGEN_SUPPORT_HPP

#include "conebranch/surd.hpp"

#include <Eigen/Core>

#include <boost/multiprecision/eigen.hpp>

// boost::multiprecision's byte-container detection dereferences C::const_iterator,
// which is a void typedef on Eigen dense expressions and hard-errors during
// overload resolution of mixed scalar/matrix operators.  Opt Eigen types out.
namespace boost { namespace multiprecision { namespace detail {

template <class C>
struct is_byte_container;

template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : public std::false_type {};

template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Array<S, R, C, O, MR, MC>> : public std::false_type {};

template <typename L, typename R, int Opt>
struct is_byte_container<Eigen::Product<L, R, Opt>> : public std::false_type {};

template <typename Op, typename L, typename R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : public std::false_type {};

template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : public std::false_type {};

template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, X>> : public std::false_type {};

template <typename X, int BR, int BC, bool P>
struct is_byte_container<Eigen::Block<X, BR, BC, P>> : public std::false_type {};

template <typename X>
struct is_byte_container<Eigen::Transpose<X>> : public std::false_type {};

}}} // namespace boost::multiprecision::detail

namespace Eigen {

template <>
struct NumTraits<conebranch::Surd> {
    using Self = conebranch::Surd;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 80,
    };

    static Self epsilon() { return Self(); }
    static Self dummy_precision() { return Self(); }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace conebranch {

using SurdVec = Eigen::Matrix<Surd, Eigen::Dynamic, 1>;
using SurdMat = Eigen::Matrix<Surd, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline Eigen::VectorXd to_double(const SurdVec& v)
{
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out[i] = v[i].to_double();
    return out;
}

inline Eigen::MatrixXd to_double(const SurdMat& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).to_double();
    return out;
}

} // namespace conebranch

#endif

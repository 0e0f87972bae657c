#ifndef CONEBRANCH_TEST_UTIL_HPP
#define CONEBRANCH_TEST_UTIL_HPP

#include "conebranch/eigen_support.hpp"

#include <random>

namespace conebranch::testutil {

inline SurdVec random_rational_vec(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    SurdVec v(n);
    for (int i = 0; i < n; ++i)
        v[i] = Surd(Rational(num(rng), den(rng)));
    return v;
}

inline Eigen::VectorXd to_d(const SurdVec& v) { return to_double(v); }

} // namespace conebranch::testutil

#endif

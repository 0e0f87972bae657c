#ifndef CONEBRANCH_RATIONAL_HPP
#define CONEBRANCH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace conebranch {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline std::string rational_str(const Rational& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    return Rational(num, den);
}

// Largest square divisor split: m = square * squarefree. Trial division is
// plenty here, the radicands that occur are tiny (2, 3, 6, ...).
inline void split_square(const Int& m, Int& sq_root, Int& squarefree)
{
    if (m <= 0)
        throw std::domain_error("split_square: expected positive integer");
    Int rest = m;
    sq_root = 1;
    for (Int p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            sq_root *= p;
        }
    }
    squarefree = rest;
}

} // namespace conebranch

#endif

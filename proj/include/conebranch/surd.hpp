#ifndef CONEBRANCH_SURD_HPP
#define CONEBRANCH_SURD_HPP

#include "conebranch/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace conebranch {

// Exact real number of the form sum_s q_s * sqrt(s) with q_s rational and s a
// positive squarefree integer (s = 1 is the rational part). Closed under the
// field operations; the set {sqrt(s)} is linearly independent over Q, so the
// zero test is coefficient-wise.
class Surd {
public:
    using TermMap = std::map<long long, Rational>;

    Surd() = default;
    Surd(int v) { set_term(1, Rational(v)); }                // NOLINT(google-explicit-constructor)
    Surd(const Rational& v) { set_term(1, v); }              // NOLINT(google-explicit-constructor)
    Surd(long long radicand, const Rational& coeff) { set_term(radicand, coeff); }

    static Surd sqrt_of(const Rational& q)
    {
        if (q < 0)
            throw std::domain_error("Surd::sqrt_of: negative argument");
        if (q == 0)
            return Surd();
        // sqrt(p/q) = sqrt(p*q)/q
        Int m = numerator(q) * denominator(q);
        Int root, sf;
        split_square(m, root, sf);
        return Surd(sf.template convert_to<long long>(), Rational(root, denominator(q)));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rational_part() const
    {
        auto it = terms_.find(1);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational rational_value() const
    {
        if (!is_rational())
            throw std::domain_error("Surd::rational_value: value is irrational");
        return rational_part();
    }

    double to_double() const
    {
        double acc = 0.0;
        for (const auto& [s, q] : terms_)
            acc += conebranch::to_double(q) * std::sqrt(static_cast<double>(s));
        return acc;
    }

    Surd operator-() const
    {
        Surd out;
        for (const auto& [s, q] : terms_)
            out.terms_.emplace(s, -q);
        return out;
    }

    Surd& operator+=(const Surd& o)
    {
        for (const auto& [s, q] : o.terms_)
            set_term(s, term(s) + q);
        return *this;
    }
    Surd& operator-=(const Surd& o) { return *this += -o; }

    Surd& operator*=(const Surd& o) { return *this = *this * o; }
    Surd& operator/=(const Surd& o) { return *this = *this * o.inverse(); }

    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }

    friend Surd operator*(const Surd& a, const Surd& b)
    {
        Surd out;
        for (const auto& [s, qa] : a.terms_)
            for (const auto& [t, qb] : b.terms_) {
                long long g = gcd_ll(s, t);
                long long rad = (s / g) * (t / g);
                out.set_term(rad, out.term(rad) + qa * qb * g);
            }
        return out;
    }
    friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }

    friend bool operator==(const Surd& a, const Surd& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

    // Exact inverse: solve x * y = 1 in the Q-vector space spanned by the
    // multiplicative closure of the radicands of x.
    Surd inverse() const
    {
        if (is_zero())
            throw std::domain_error("Surd::inverse: division by zero");
        if (is_rational())
            return Surd(Rational(1) / rational_part());
        if (terms_.size() == 1) {
            const auto& [s, q] = *terms_.begin();
            return Surd(s, Rational(1) / (q * s));
        }
        std::vector<long long> basis = radicand_closure();
        const std::size_t m = basis.size();
        std::map<long long, std::size_t> index;
        for (std::size_t i = 0; i < m; ++i)
            index[basis[i]] = i;

        // col i holds the coordinates of x * sqrt(basis[i]).
        std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m + 1, Rational(0)));
        for (std::size_t i = 0; i < m; ++i) {
            Surd prod = *this * Surd(basis[i], Rational(1));
            for (const auto& [s, q] : prod.terms_)
                mat[index.at(s)][i] = q;
        }
        mat[index.at(1)][m] = 1; // rhs = 1

        // exact Gaussian elimination
        for (std::size_t col = 0, row = 0; col < m && row < m; ++col, ++row) {
            std::size_t piv = row;
            while (piv < m && mat[piv][col] == 0)
                ++piv;
            if (piv == m)
                throw std::runtime_error("Surd::inverse: singular multiplication matrix");
            std::swap(mat[piv], mat[row]);
            for (std::size_t k = 0; k < m; ++k) {
                if (k == row || mat[k][col] == 0)
                    continue;
                Rational f = mat[k][col] / mat[row][col];
                for (std::size_t j = col; j <= m; ++j)
                    mat[k][j] -= f * mat[row][j];
            }
        }
        Surd out;
        for (std::size_t i = 0; i < m; ++i)
            out.set_term(basis[i], mat[i][m] / mat[i][i]);
        if (!(*this * out == Surd(1)))
            throw std::runtime_error("Surd::inverse: verification failed");
        return out;
    }

    const TermMap& terms() const { return terms_; }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [s, q] : terms_) {
            if (!first)
                os << (q >= 0 ? "+" : "");
            os << rational_str(q);
            if (s != 1)
                os << "*sqrt(" << s << ")";
            first = false;
        }
        return os.str();
    }

private:
    static long long gcd_ll(long long a, long long b)
    {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    Rational term(long long s) const
    {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_term(long long s, const Rational& q)
    {
        if (q == 0)
            terms_.erase(s);
        else
            terms_[s] = q;
    }

    std::vector<long long> radicand_closure() const
    {
        std::vector<long long> basis{1};
        for (const auto& [s, q] : terms_)
            if (s != 1)
                basis.push_back(s);
        for (std::size_t i = 1; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                long long g = gcd_ll(basis[i], basis[j]);
                long long rad = (basis[i] / g) * (basis[j] / g);
                bool known = false;
                for (long long b : basis)
                    known |= (b == rad);
                if (!known)
                    basis.push_back(rad);
            }
        std::sort(basis.begin(), basis.end());
        return basis;
    }

    TermMap terms_;
};

} // namespace conebranch

#endif

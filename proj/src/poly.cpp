#include "conebranch/poly.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conebranch {

namespace {

bool vec_zero(const SurdVec& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            return false;
    return true;
}

void check_compatible(const MultiPoly& a, const MultiPoly& b, const char* what)
{
    if (a.nvars != b.nvars || a.dim != b.dim)
        throw std::invalid_argument(std::string(what) + ": incompatible polynomials");
}

} // namespace

int MultiPoly::degree() const
{
    int d = -1;
    for (const auto& [k, c] : terms)
        d = std::max(d, std::accumulate(k.begin(), k.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    int d = -2;
    for (const auto& [k, c] : terms) {
        int t = std::accumulate(k.begin(), k.end(), 0);
        if (d == -2)
            d = t;
        else if (t != d)
            return false;
    }
    return true;
}

SurdVec MultiPoly::coeff(const Key& k) const
{
    auto it = terms.find(k);
    if (it != terms.end())
        return it->second;
    SurdVec z(dim);
    for (int i = 0; i < dim; ++i)
        z[i] = Surd();
    return z;
}

void MultiPoly::set_coeff(const Key& k, const SurdVec& c)
{
    if (static_cast<int>(k.size()) != nvars || c.size() != dim)
        throw std::invalid_argument("MultiPoly::set_coeff: shape mismatch");
    if (vec_zero(c))
        terms.erase(k);
    else
        terms[k] = c;
}

Eigen::VectorXd MultiPoly::evaluate(const Eigen::VectorXd& point) const
{
    if (point.size() != nvars)
        throw std::invalid_argument("MultiPoly::evaluate: wrong point dimension");
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
    for (const auto& [k, c] : terms) {
        double m = 1.0;
        for (int i = 0; i < nvars; ++i)
            for (int j = 0; j < k[i]; ++j)
                m *= point[i];
        for (int i = 0; i < dim; ++i)
            acc[i] += m * c[i].to_double();
    }
    return acc;
}

SurdVec MultiPoly::evaluate_exact(const SurdVec& point) const
{
    if (point.size() != nvars)
        throw std::invalid_argument("MultiPoly::evaluate_exact: wrong point dimension");
    SurdVec acc(dim);
    for (int i = 0; i < dim; ++i)
        acc[i] = Surd();
    for (const auto& [k, c] : terms) {
        Surd m(1);
        for (int i = 0; i < nvars; ++i)
            for (int j = 0; j < k[i]; ++j)
                m *= point[i];
        for (int i = 0; i < dim; ++i)
            acc[i] += m * c[i];
    }
    return acc;
}

MultiPoly MultiPoly::homogeneous_part(int deg) const
{
    MultiPoly out(nvars, dim);
    for (const auto& [k, c] : terms)
        if (std::accumulate(k.begin(), k.end(), 0) == deg)
            out.terms[k] = c;
    return out;
}

std::string MultiPoly::str(const std::string& var) const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first)
            os << " + ";
        first = false;
        if (dim == 1) {
            os << "(" << c[0].str() << ")";
        } else {
            os << "[";
            for (int i = 0; i < dim; ++i)
                os << (i ? "," : "") << c[i].str();
            os << "]";
        }
        for (int i = 0; i < nvars; ++i) {
            if (k[i] == 0)
                continue;
            os << "*" << var << i + 1;
            if (k[i] > 1)
                os << "^" << k[i];
        }
    }
    return os.str();
}

MultiPoly mp_zero(int nvars, int dim) { return MultiPoly(nvars, dim); }

MultiPoly mp_const(int nvars, const Surd& c)
{
    return mp_monomial(nvars, MultiPoly::Key(nvars, 0), c);
}

MultiPoly mp_monomial(int nvars, const MultiPoly::Key& exps, const Surd& c)
{
    SurdVec v(1);
    v[0] = c;
    return mp_vector_monomial(nvars, exps, v);
}

MultiPoly mp_vector_monomial(int nvars, const MultiPoly::Key& exps, const SurdVec& c)
{
    MultiPoly p(nvars, static_cast<int>(c.size()));
    p.set_coeff(exps, c);
    return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b)
{
    check_compatible(a, b, "MultiPoly::operator+");
    MultiPoly out = a;
    for (const auto& [k, c] : b.terms) {
        auto it = out.terms.find(k);
        if (it == out.terms.end()) {
            out.terms[k] = c;
        } else {
            SurdVec s = it->second;
            for (int i = 0; i < out.dim; ++i)
                s[i] += c[i];
            if (vec_zero(s))
                out.terms.erase(it);
            else
                it->second = s;
        }
    }
    return out;
}

MultiPoly operator-(const MultiPoly& a) { return Surd(-1) * a; }

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const Surd& s, const MultiPoly& a)
{
    MultiPoly out(a.nvars, a.dim);
    if (s.is_zero())
        return out;
    for (const auto& [k, c] : a.terms) {
        SurdVec v = c;
        for (int i = 0; i < a.dim; ++i)
            v[i] *= s;
        out.terms[k] = v;
    }
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars != b.nvars)
        throw std::invalid_argument("MultiPoly::operator*: variable count mismatch");
    if (a.dim != 1 && b.dim != 1)
        throw std::invalid_argument("MultiPoly::operator*: one factor must be scalar");
    const MultiPoly& scal = (a.dim == 1) ? a : b;
    const MultiPoly& vect = (a.dim == 1) ? b : a;
    MultiPoly out(a.nvars, vect.dim);
    for (const auto& [ka, ca] : scal.terms)
        for (const auto& [kb, cb] : vect.terms) {
            MultiPoly::Key k(a.nvars);
            for (int i = 0; i < a.nvars; ++i)
                k[i] = ka[i] + kb[i];
            SurdVec add = cb;
            for (int i = 0; i < vect.dim; ++i)
                add[i] *= ca[0];
            auto it = out.terms.find(k);
            if (it == out.terms.end()) {
                out.terms[k] = add;
            } else {
                for (int i = 0; i < vect.dim; ++i)
                    it->second[i] += add[i];
                if (vec_zero(it->second))
                    out.terms.erase(it);
            }
        }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    return a.nvars == b.nvars && a.dim == b.dim && (a - b).is_zero();
}

MultiPoly deriv(const MultiPoly& p, int var)
{
    if (var < 0 || var >= p.nvars)
        throw std::invalid_argument("deriv: variable index out of range");
    MultiPoly out(p.nvars, p.dim);
    for (const auto& [k, c] : p.terms) {
        if (k[var] == 0)
            continue;
        MultiPoly::Key kk = k;
        kk[var] -= 1;
        SurdVec v = c;
        for (int i = 0; i < p.dim; ++i)
            v[i] *= Surd(k[var]);
        out.terms[kk] = v;
    }
    return out;
}

MultiPoly deriv(const MultiPoly& p, const MultiPoly::Key& multi)
{
    if (static_cast<int>(multi.size()) != p.nvars)
        throw std::invalid_argument("deriv: multi-index length mismatch");
    MultiPoly out = p;
    for (int i = 0; i < p.nvars; ++i)
        for (int j = 0; j < multi[i]; ++j)
            out = deriv(out, i);
    return out;
}

MultiPoly apply_endo(const SurdMat& endo, const MultiPoly& p)
{
    if (endo.cols() != p.dim)
        throw std::invalid_argument("apply_endo: endomorphism size mismatch");
    MultiPoly out(p.nvars, static_cast<int>(endo.rows()));
    for (const auto& [k, c] : p.terms) {
        SurdVec v(endo.rows());
        for (Eigen::Index i = 0; i < endo.rows(); ++i) {
            Surd acc;
            for (Eigen::Index j = 0; j < endo.cols(); ++j)
                acc += endo(i, j) * c[j];
            v[i] = acc;
        }
        out.set_coeff(k, v);
    }
    return out;
}

std::vector<MultiPoly::Key> monomial_exponents(int nvars, int p)
{
    std::vector<MultiPoly::Key> out;
    if (nvars == 0) {
        if (p == 0)
            out.push_back({});
        return out;
    }
    MultiPoly::Key cur(nvars, 0);
    // lexicographic enumeration by recursion on the first variable
    std::function<void(int, int)> rec = [&](int var, int rest) {
        if (var == nvars - 1) {
            cur[var] = rest;
            out.push_back(cur);
            return;
        }
        for (int k = rest; k >= 0; --k) {
            cur[var] = k;
            rec(var + 1, rest - k);
        }
    };
    rec(0, p);
    return out;
}

} // namespace conebranch

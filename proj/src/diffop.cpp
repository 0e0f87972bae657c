#include "conebranch/diffop.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace conebranch {

namespace {

SurdMat surd_identity(int d)
{
    SurdMat I(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            I(i, j) = Surd(i == j ? 1 : 0);
    return I;
}

bool endo_zero(const SurdMat& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                return false;
    return true;
}

MultiPoly::Key unit_key(int nvars, int i, int order = 1)
{
    MultiPoly::Key k(nvars, 0);
    k[i] = order;
    return k;
}

// enumerate all multi-indices s <= a componentwise, with multinomial factors
void foreach_sub_index(const MultiPoly::Key& a,
                       const std::function<void(const MultiPoly::Key&, const Int&)>& fn)
{
    MultiPoly::Key s(a.size(), 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t pos, Int binom) {
        if (pos == a.size()) {
            fn(s, binom);
            return;
        }
        Int c = 1;
        for (int k = 0; k <= a[pos]; ++k) {
            s[pos] = k;
            rec(pos + 1, binom * c);
            c = c * (a[pos] - k) / (k + 1);
        }
    };
    rec(0, Int(1));
}

} // namespace

void DiffOp::add_term(const MultiPoly& coeff, const MultiPoly::Key& d, const SurdMat& endo)
{
    if (coeff.nvars != nvars || coeff.dim != 1 || static_cast<int>(d.size()) != nvars ||
        endo.rows() != dim || endo.cols() != dim)
        throw std::invalid_argument("DiffOp::add_term: shape mismatch");
    if (coeff.is_zero() || endo_zero(endo))
        return;
    terms.push_back({coeff, d, endo});
}

void DiffOp::add_scalar_term(const MultiPoly& coeff, const MultiPoly::Key& d)
{
    add_term(coeff, d, surd_identity(dim));
}

std::string DiffOp::str(const std::string& var) const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << t.coeff.str(var) << ")";
        if (dim > 1)
            os << "*M";
        for (int i = 0; i < nvars; ++i) {
            if (t.deriv[i] == 0)
                continue;
            os << " d" << var << i + 1;
            if (t.deriv[i] > 1)
                os << "^" << t.deriv[i];
        }
    }
    return os.str();
}

MultiPoly apply(const DiffOp& op, const MultiPoly& p)
{
    if (op.nvars != p.nvars || op.dim != p.dim)
        throw std::invalid_argument("apply: operator/polynomial shape mismatch");
    MultiPoly out(p.nvars, p.dim);
    for (const auto& t : op.terms)
        out = out + t.coeff * apply_endo(t.endo, deriv(p, t.deriv));
    return out;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b)
{
    if (a.nvars != b.nvars || a.dim != b.dim)
        throw std::invalid_argument("DiffOp::operator+: shape mismatch");
    DiffOp out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

DiffOp operator*(const Surd& s, const DiffOp& a)
{
    DiffOp out(a.nvars, a.dim);
    for (const auto& t : a.terms)
        out.add_term(s * t.coeff, t.deriv, t.endo);
    return out;
}

// composition via the multi-index Leibniz rule:
// (c1 d^a M1)(c2 d^b M2) = sum_{s<=a} binom(a,s) c1 (d^{a-s} c2) d^{b+s} M1 M2
DiffOp compose(const DiffOp& a, const DiffOp& b)
{
    if (a.nvars != b.nvars || a.dim != b.dim)
        throw std::invalid_argument("compose: shape mismatch");
    DiffOp out(a.nvars, a.dim);
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            SurdMat endo(a.dim, a.dim);
            for (int i = 0; i < a.dim; ++i)
                for (int j = 0; j < a.dim; ++j) {
                    Surd acc;
                    for (int k = 0; k < a.dim; ++k)
                        acc += ta.endo(i, k) * tb.endo(k, j);
                    endo(i, j) = acc;
                }
            foreach_sub_index(ta.deriv, [&](const MultiPoly::Key& s, const Int& binom) {
                MultiPoly::Key rest(a.nvars), dtot(a.nvars);
                for (int i = 0; i < a.nvars; ++i) {
                    rest[i] = ta.deriv[i] - s[i];
                    dtot[i] = tb.deriv[i] + s[i];
                }
                MultiPoly c = Surd(Rational(binom)) * (ta.coeff * deriv(tb.coeff, rest));
                out.add_term(c, dtot, endo);
            });
        }
    return out;
}

DiffOp euler_operator(int nvars, int dim)
{
    DiffOp op(nvars, dim);
    for (int i = 0; i < nvars; ++i)
        op.add_scalar_term(mp_monomial(nvars, unit_key(nvars, i), Surd(1)),
                           unit_key(nvars, i));
    return op;
}

DiffOp laplacian(int nvars, int dim)
{
    DiffOp op(nvars, dim);
    for (int i = 0; i < nvars; ++i)
        op.add_scalar_term(mp_const(nvars, Surd(1)), unit_key(nvars, i, 2));
    return op;
}

DiffOp build_psi_pi(const JordanAlgebra& A, const RepSpec& rep)
{
    const int m = A.n - 1;
    DiffOp op(m, rep.dim_Vpi);
    // r (e_i e_j | v) = r sum_{k>=1} (e_i e_j | e_k) v_k, read off L(e_i)
    for (int i = 1; i < A.n; ++i)
        for (int j = 1; j < A.n; ++j) {
            MultiPoly c(m, 1);
            for (int k = 1; k < A.n; ++k) {
                const Surd s = Surd(A.r) * A.L[i](k, j);
                if (!s.is_zero())
                    c = c + mp_monomial(m, unit_key(m, k - 1), s);
            }
            MultiPoly::Key d(m, 0);
            d[i - 1] += 1;
            d[j - 1] += 1;
            op.add_scalar_term(c, d);
        }
    for (int i = 1; i < A.n; ++i) {
        SurdMat endo(rep.dim_Vpi, rep.dim_Vpi);
        for (int a = 0; a < rep.dim_Vpi; ++a)
            for (int b = 0; b < rep.dim_Vpi; ++b)
                endo(a, b) = Surd(-2 * A.r) * rep.dpi_L[i](a, b);
        op.add_term(mp_const(m, Surd(1)), unit_key(m, i - 1), endo);
    }
    return op;
}

DiffOp build_dpi(const JordanAlgebra& A, const RepSpec& rep)
{
    const int m = A.n - 1;
    const Surd alpha{Rational(rep.alpha)};
    DiffOp op = Surd(A.r) * laplacian(m, rep.dim_Vpi);
    op = op + build_psi_pi(A, rep);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            MultiPoly::Key mono(m, 0);
            mono[i] += 1;
            mono[j] += 1;
            MultiPoly::Key d(m, 0);
            d[i] += 1;
            d[j] += 1;
            op.add_scalar_term(mp_monomial(m, mono, Surd(-1)), d);
        }
    for (int i = 0; i < m; ++i)
        op.add_scalar_term(mp_monomial(m, unit_key(m, i), -alpha), unit_key(m, i));
    return op;
}

DiffOp build_dpi_decomposed(const JordanAlgebra& A, const RepSpec& rep)
{
    const int m = A.n - 1;
    const DiffOp E = euler_operator(m, rep.dim_Vpi);
    DiffOp shifted = E; // E + (alpha - 1)
    shifted.add_scalar_term(mp_const(m, Surd(Rational(rep.alpha) - 1)), MultiPoly::Key(m, 0));
    DiffOp op = Surd(A.r) * laplacian(m, rep.dim_Vpi);
    op = op + build_psi_pi(A, rep);
    op = op + Surd(-1) * compose(E, shifted);
    return op;
}

DiffOp bessel_e_component(const JordanAlgebra& A, const RepSpec& rep)
{
    const int n = A.n;
    DiffOp op(n, rep.dim_Vpi);
    SurdVec ei(n), ej(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                ei[k] = Surd(k == i ? 1 : 0);
                ej[k] = Surd(k == j ? 1 : 0);
            }
            const SurdMat P = quad_rep(A, ei, ej);
            // (e | P(e_i,e_j) e_k) = sqrt(r) * (P e_k)_0
            MultiPoly c(n, 1);
            for (int k = 0; k < n; ++k) {
                const Surd s = A.sqrt_r * P(0, k);
                if (!s.is_zero())
                    c = c + mp_monomial(n, unit_key(n, k), s);
            }
            MultiPoly::Key d(n, 0);
            d[i] += 1;
            d[j] += 1;
            op.add_scalar_term(c, d);
        }
    // e box e_i = L(e_i), so the first-order part is -2 dpi(L(e_i)) d_i
    for (int i = 0; i < n; ++i) {
        SurdMat endo(rep.dim_Vpi, rep.dim_Vpi);
        for (int a = 0; a < rep.dim_Vpi; ++a)
            for (int b = 0; b < rep.dim_Vpi; ++b)
                endo(a, b) = Surd(-2) * rep.dpi_L[i](a, b);
        op.add_term(mp_const(n, Surd(1)), unit_key(n, i), endo);
    }
    return op;
}

} // namespace conebranch

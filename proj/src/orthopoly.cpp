#include "conebranch/orthopoly.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace conebranch {

namespace {

Rational eigen_value(const Rational& alpha, int p)
{
    return Rational(-p) * (Rational(p) + alpha - 1);
}

long long binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

// exact nullspace of a Rational matrix (columns = unknowns)
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> mat,
                                             std::size_t ncols)
{
    const std::size_t nrows = mat.size();
    std::vector<long long> pivot_of_col(ncols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t piv = row;
        while (piv < nrows && mat[piv][col] == 0)
            ++piv;
        if (piv == nrows)
            continue;
        std::swap(mat[piv], mat[row]);
        for (std::size_t k = 0; k < nrows; ++k) {
            if (k == row || mat[k][col] == 0)
                continue;
            Rational f = mat[k][col] / mat[row][col];
            for (std::size_t j = col; j < ncols; ++j)
                mat[k][j] -= f * mat[row][j];
        }
        pivot_of_col[col] = static_cast<long long>(row);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t freecol = 0; freecol < ncols; ++freecol) {
        if (pivot_of_col[freecol] >= 0)
            continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[freecol] = 1;
        for (std::size_t col = 0; col < ncols; ++col) {
            const long long pr = pivot_of_col[col];
            if (pr >= 0)
                v[col] = -mat[static_cast<std::size_t>(pr)][freecol] /
                         mat[static_cast<std::size_t>(pr)][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

MultiPoly lift(const JordanAlgebra& A, const RepSpec& rep, const MultiPoly& Q)
{
    if (!Q.is_homogeneous() || Q.is_zero())
        throw std::invalid_argument("lift: expected a nonzero homogeneous polynomial");
    const int p = Q.degree();
    const int m = A.n - 1;
    if (Q.nvars != m || Q.dim != rep.dim_Vpi)
        throw std::invalid_argument("lift: polynomial shape does not match algebra/rep");

    const DiffOp rLap = Surd(A.r) * laplacian(m, rep.dim_Vpi);
    const DiffOp psi = build_psi_pi(A, rep);
    const Rational top = eigen_value(rep.alpha, p);

    std::vector<MultiPoly> P(static_cast<std::size_t>(p) + 2, mp_zero(m, rep.dim_Vpi));
    P[static_cast<std::size_t>(p)] = Q;
    for (int i = p - 1; i >= 0; --i) {
        const Rational denom = Rational(i) * (Rational(i) + rep.alpha - 1) + top;
        if (denom == 0)
            throw std::domain_error("lift: resonant alpha, vanishing denominator at i=" +
                                    std::to_string(i));
        const MultiPoly rhs = apply(rLap, P[static_cast<std::size_t>(i) + 2]) +
                              apply(psi, P[static_cast<std::size_t>(i) + 1]);
        P[static_cast<std::size_t>(i)] = Surd(Rational(1) / denom) * rhs;
    }
    MultiPoly out = mp_zero(m, rep.dim_Vpi);
    for (int i = 0; i <= p; ++i)
        out = out + P[static_cast<std::size_t>(i)];
    return out;
}

OrthoBasis build_Wp(const JordanAlgebra& A, const RepSpec& rep, int p)
{
    if (p < 0)
        throw std::invalid_argument("build_Wp: negative degree");
    const int m = A.n - 1;
    OrthoBasis basis;
    basis.p = p;
    basis.eigenvalue = eigen_value(rep.alpha, p);
    basis.provenance = BasisProvenance::Recursion;

    const DiffOp D = build_dpi(A, rep);
    const Surd ev{basis.eigenvalue};
    for (const auto& exps : monomial_exponents(m, p))
        for (int comp = 0; comp < rep.dim_Vpi; ++comp) {
            SurdVec c(rep.dim_Vpi);
            for (int i = 0; i < rep.dim_Vpi; ++i)
                c[i] = Surd(i == comp ? 1 : 0);
            const MultiPoly P = lift(A, rep, mp_vector_monomial(m, exps, c));
            if (apply(D, P) != ev * P)
                throw std::logic_error("build_Wp: exact eigen-equation failed");
            basis.polys.push_back(P);
        }
    return basis;
}

OrthoBasis gram_schmidt_Wp(const JordanAlgebra& A, const RepSpec& rep, int p,
                           const SampleSet& samples)
{
    const int m = A.n - 1;
    if (rep.dim_Vpi != 1)
        throw std::invalid_argument("gram_schmidt_Wp: scalar representations only");

    std::vector<MultiPoly> low;
    for (int k = 0; k < p; ++k)
        for (const auto& exps : monomial_exponents(m, k))
            low.push_back(mp_monomial(m, exps, Surd(1)));
    std::vector<MultiPoly> top;
    for (const auto& exps : monomial_exponents(m, p))
        top.push_back(mp_monomial(m, exps, Surd(1)));

    const auto nl = static_cast<Eigen::Index>(low.size());
    Eigen::MatrixXd G(nl, nl);
    for (Eigen::Index i = 0; i < nl; ++i)
        for (Eigen::Index j = i; j < nl; ++j)
            G(i, j) = G(j, i) = l2x_inner(A, rep, low[i], low[j], samples).first;
    if (nl > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e8)
            throw std::runtime_error("gram_schmidt_Wp: ill-conditioned Gram matrix, "
                                     "increase the sample count");
    }

    OrthoBasis basis;
    basis.p = p;
    basis.eigenvalue = eigen_value(rep.alpha, p);
    basis.provenance = BasisProvenance::GramSchmidt;
    for (const auto& q : top) {
        MultiPoly ortho = q;
        if (nl > 0) {
            Eigen::VectorXd b(nl);
            for (Eigen::Index i = 0; i < nl; ++i)
                b[i] = l2x_inner(A, rep, q, low[i], samples).first;
            const Eigen::VectorXd c = G.ldlt().solve(b);
            for (Eigen::Index i = 0; i < nl; ++i)
                ortho = ortho - Surd(Rational(c[i])) * low[i];
        }
        basis.polys.push_back(ortho);
    }
    return basis;
}

long long harmonic_dim(int nvars, int k)
{
    if (k < 0)
        return 0;
    if (nvars == 1)
        return k <= 1 ? 1 : 0;
    return binom(nvars + k - 1, nvars - 1) - binom(nvars + k - 3, nvars - 1);
}

std::vector<MultiPoly> harmonic_basis(int nvars, int k)
{
    const auto monos = monomial_exponents(nvars, k);
    const auto targets = k >= 2 ? monomial_exponents(nvars, k - 2)
                                : std::vector<MultiPoly::Key>{};
    std::map<MultiPoly::Key, std::size_t> row_of;
    for (std::size_t i = 0; i < targets.size(); ++i)
        row_of[targets[i]] = i;

    std::vector<std::vector<Rational>> mat(targets.size(),
                                           std::vector<Rational>(monos.size(), Rational(0)));
    for (std::size_t c = 0; c < monos.size(); ++c) {
        const MultiPoly lap = apply(laplacian(nvars), mp_monomial(nvars, monos[c], Surd(1)));
        for (const auto& [key, coef] : lap.terms)
            mat[row_of.at(key)][c] = coef[0].rational_value();
    }
    std::vector<MultiPoly> out;
    for (const auto& v : nullspace(std::move(mat), monos.size())) {
        MultiPoly h(nvars, 1);
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (v[c] != 0)
                h = h + mp_monomial(nvars, monos[c], Surd(v[c]));
        out.push_back(h);
    }
    if (static_cast<long long>(out.size()) != harmonic_dim(nvars, k))
        throw std::logic_error("harmonic_basis: dimension mismatch");
    return out;
}

std::vector<std::pair<int, MultiPoly>> harmonic_decompose(const MultiPoly& P)
{
    if (!P.is_homogeneous() || P.dim != 1)
        throw std::invalid_argument("harmonic_decompose: expected scalar homogeneous input");
    if (P.is_zero())
        return {};
    const int p = P.degree();
    const int m = P.nvars;

    MultiPoly norm2(m, 1);
    for (int i = 0; i < m; ++i) {
        MultiPoly::Key k(m, 0);
        k[i] = 2;
        norm2 = norm2 + mp_monomial(m, k, Surd(1));
    }

    // columns |v|^{2j} h, h in the harmonic basis of degree p-2j, expressed
    // over the monomial basis of Pol_p; solve exactly for the coordinates.
    const auto monos = monomial_exponents(m, p);
    std::map<MultiPoly::Key, std::size_t> row_of;
    for (std::size_t i = 0; i < monos.size(); ++i)
        row_of[monos[i]] = i;

    struct Col {
        int j;
        MultiPoly harmonic; // the harmonic generator h
        MultiPoly embedded; // |v|^{2j} h
    };
    std::vector<Col> cols;
    for (int j = 0; 2 * j <= p; ++j) {
        MultiPoly pw = mp_const(m, Surd(1));
        for (int a = 0; a < j; ++a)
            pw = pw * norm2;
        for (const auto& h : harmonic_basis(m, p - 2 * j))
            cols.push_back({j, h, pw * h});
    }
    const std::size_t nc = cols.size();
    if (nc != monos.size())
        throw std::logic_error("harmonic_decompose: basis count mismatch");

    // Gaussian elimination over Surd on [A | b]
    const std::size_t nr = monos.size();
    std::vector<std::vector<Surd>> mat(nr, std::vector<Surd>(nc + 1, Surd()));
    for (std::size_t c = 0; c < nc; ++c)
        for (const auto& [key, coef] : cols[c].embedded.terms)
            mat[row_of.at(key)][c] = coef[0];
    for (const auto& [key, coef] : P.terms)
        mat[row_of.at(key)][nc] = coef[0];

    std::vector<long long> pivot_row(nc, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && mat[piv][col].is_zero())
            ++piv;
        if (piv == nr)
            throw std::logic_error("harmonic_decompose: singular change of basis");
        std::swap(mat[piv], mat[row]);
        for (std::size_t k = 0; k < nr; ++k) {
            if (k == row || mat[k][col].is_zero())
                continue;
            const Surd f = mat[k][col] / mat[row][col];
            for (std::size_t jj = col; jj <= nc; ++jj)
                mat[k][jj] -= f * mat[row][jj];
        }
        pivot_row[col] = static_cast<long long>(row);
        ++row;
    }

    std::map<int, MultiPoly> parts;
    for (std::size_t c = 0; c < nc; ++c) {
        const auto pr = static_cast<std::size_t>(pivot_row[c]);
        const Surd coef = mat[pr][nc] / mat[pr][c];
        if (coef.is_zero())
            continue;
        auto [it, fresh] = parts.try_emplace(cols[c].j, mp_zero(m, 1));
        (void)fresh;
        it->second = it->second + coef * cols[c].harmonic;
    }
    std::vector<std::pair<int, MultiPoly>> out;
    for (auto& [j, h] : parts)
        out.emplace_back(j, std::move(h));
    return out;
}

double KernelRank2::eval(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const
{
    const auto nb = static_cast<Eigen::Index>(span.size());
    Eigen::VectorXd fu(nb), fv(nb);
    for (Eigen::Index b = 0; b < nb; ++b) {
        fu[b] = span[static_cast<std::size_t>(b)].evaluate(u)[0];
        fv[b] = span[static_cast<std::size_t>(b)].evaluate(v)[0];
    }
    double acc = 0.0;
    for (Eigen::Index a = 0; a < ortho.rows(); ++a)
        acc += (ortho.row(a) * fu)[0] * (ortho.row(a) * fv)[0];
    return acc;
}

KernelRank2 kernel_rank2(const JordanAlgebra& A, const RepSpec& rep, int p, int j,
                         const SampleSet& samples)
{
    if (A.family != Family::Spin || rep.kind != RepKind::Scalar)
        throw std::invalid_argument("kernel_rank2: spin algebra with scalar rep required");
    if (j < 0 || 2 * j > p)
        throw std::invalid_argument("kernel_rank2: need 0 <= j <= p/2");
    const int m = A.n - 1;

    MultiPoly norm2(m, 1);
    for (int i = 0; i < m; ++i) {
        MultiPoly::Key k(m, 0);
        k[i] = 2;
        norm2 = norm2 + mp_monomial(m, k, Surd(1));
    }
    MultiPoly pw = mp_const(m, Surd(1));
    for (int a = 0; a < j; ++a)
        pw = pw * norm2;

    KernelRank2 out;
    out.p = p;
    out.j = j;
    for (const auto& h : harmonic_basis(m, p - 2 * j))
        out.span.push_back(lift(A, rep, pw * h));

    const auto nb = static_cast<Eigen::Index>(out.span.size());
    Eigen::MatrixXd G(nb, nb);
    for (Eigen::Index a = 0; a < nb; ++a)
        for (Eigen::Index b = a; b < nb; ++b)
            G(a, b) = G(b, a) =
                l2x_inner(A, rep, out.span[static_cast<std::size_t>(a)],
                          out.span[static_cast<std::size_t>(b)], samples)
                    .first;
    // rows of L^{-1} give an orthonormal basis when G = L L^T
    const Eigen::MatrixXd L = G.llt().matrixL();
    out.ortho = L.inverse();
    return out;
}

} // namespace conebranch

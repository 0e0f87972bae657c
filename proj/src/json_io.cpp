#include "conebranch/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace conebranch {

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

Json surd_json(const Surd& s)
{
    Json out = Json::array();
    for (const auto& [rad, q] : s.terms())
        out.push_back(Json::array({rad, rational_str(q)}));
    return out;
}

Json algebra_json(const JordanAlgebra& A)
{
    Json out;
    out["family"] = family_name(A.family);
    out["param"] = A.param;
    out["n"] = A.n;
    out["r"] = A.r;
    out["d"] = rational_str(A.d);
    out["hash"] = A.hash();
    Json frame = Json::array();
    for (const auto& c : A.frame) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < c.size(); ++i)
            v.push_back(surd_json(c[i]));
        frame.push_back(v);
    }
    out["frame"] = frame;
    Json sc = Json::array();
    for (int i = 0; i < A.n; ++i) {
        Json rows = Json::array();
        for (int k = 0; k < A.n; ++k) {
            Json row = Json::array();
            for (int j = 0; j < A.n; ++j)
                row.push_back(surd_json(A.L[i](k, j)));
            rows.push_back(row);
        }
        sc.push_back(rows);
    }
    out["mult_operators"] = sc;
    return out;
}

Json rep_json(const RepSpec& rep)
{
    Json out;
    if (rep.kind == RepKind::Scalar) {
        out["kind"] = "scalar";
        out["lambda"] = rational_str(rep.lambda);
    } else {
        out["kind"] = "matrix";
    }
    out["dim_Vpi"] = rep.dim_Vpi;
    out["alpha"] = rational_str(rep.alpha);
    out["omega"] = rational_str(rep.omega);
    out["convergent"] = rep.convergent;
    Json dpi = Json::array();
    for (const auto& m : rep.dpi_L) {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                row.push_back(surd_json(m(i, j)));
            rows.push_back(row);
        }
        dpi.push_back(rows);
    }
    out["dpi"] = dpi;
    return out;
}

Json poly_json(const MultiPoly& p)
{
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms) {
        Json term;
        term["exp"] = k;
        Json coef = Json::array();
        for (Eigen::Index i = 0; i < c.size(); ++i)
            coef.push_back(surd_json(c[i]));
        term["coef"] = coef;
        terms.push_back(term);
    }
    Json out;
    out["nvars"] = p.nvars;
    out["dim"] = p.dim;
    out["terms"] = terms;
    return out;
}

Json diffop_json(const DiffOp& op)
{
    Json terms = Json::array();
    for (const auto& t : op.terms) {
        Json term;
        term["coeff"] = poly_json(t.coeff);
        term["deriv"] = t.deriv;
        Json endo = Json::array();
        for (Eigen::Index i = 0; i < t.endo.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < t.endo.cols(); ++j)
                row.push_back(surd_json(t.endo(i, j)));
            endo.push_back(row);
        }
        term["endo"] = endo;
        terms.push_back(term);
    }
    Json out;
    out["nvars"] = op.nvars;
    out["dim"] = op.dim;
    out["terms"] = terms;
    return out;
}

Json table_json(const BranchingTable& t)
{
    Json out;
    out["algebra"] = t.family;
    out["param"] = t.param;
    out["alpha"] = rational_str(t.alpha);
    out["dim_Vpi"] = t.dim_Vpi;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["p"] = r.p;
        row["lambda"] = rational_str(r.lambda_p);
        row["mult"] = r.mult;
        if (!r.harmonics.empty()) {
            Json h = Json::array();
            for (const auto& [deg, dim] : r.harmonics)
                h.push_back(Json::array({deg, dim}));
            row["harmonics"] = h;
        }
        rows.push_back(row);
    }
    out["rows"] = rows;
    return out;
}

std::string table_csv(const BranchingTable& t)
{
    std::ostringstream os;
    os << "p,lambda,mult,harmonics\n";
    for (const auto& r : t.rows) {
        os << r.p << "," << rational_str(r.lambda_p) << "," << r.mult << ",";
        bool first = true;
        for (const auto& [deg, dim] : r.harmonics) {
            os << (first ? "" : ";") << deg << ":" << dim;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

Json meta_json(std::uint64_t seed, std::uint64_t samples, const JordanAlgebra& A)
{
    Json out;
    out["seed"] = seed;
    out["samples"] = samples;
    out["algebra_hash"] = A.hash();
    return out;
}

} // namespace conebranch

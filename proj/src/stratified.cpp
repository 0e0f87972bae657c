#include "conebranch/stratified.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>
#include <thread>

namespace conebranch {

namespace {

constexpr std::size_t kShardSize = 4096;

int worker_count()
{
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char* env = std::getenv("CONEBRANCH_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw)
            hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(hw);
}

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard)
{
    // splitmix64 step keeps shards decorrelated and deterministic
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (shard + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Eigen::VectorXd ambient_of(const JordanAlgebra& A, const Eigen::VectorXd& v)
{
    Eigen::VectorXd x = Eigen::VectorXd::Zero(A.n);
    x[0] = std::sqrt(static_cast<double>(A.r));
    x.tail(A.n - 1) = v;
    return x;
}

} // namespace

DomainX::DomainX(const JordanAlgebra& A)
    : algebra(&A), bounding_radius(std::sqrt(static_cast<double>(A.r) * (A.r - 1)))
{
}

bool DomainX::contains(const Eigen::VectorXd& v) const
{
    if (v.size() != algebra->n - 1)
        throw std::invalid_argument("DomainX::contains: wrong coordinate count");
    return in_cone(*algebra, ambient(v));
}

Eigen::VectorXd DomainX::ambient(const Eigen::VectorXd& v) const
{
    return ambient_of(*algebra, v);
}

std::pair<double, double>
SampleSet::integrate(const std::function<double(const Eigen::VectorXd&)>& f) const
{
    double sum = 0.0, sumsq = 0.0;
    for (const auto& v : points) {
        const double y = f(v);
        sum += y;
        sumsq += y * y;
    }
    const double nprop = static_cast<double>(proposed);
    const double mean = sum / nprop;
    const double var = std::max(0.0, sumsq / nprop - mean * mean);
    return {box_volume * mean, box_volume * std::sqrt(var / nprop)};
}

SampleSet sample_X(const JordanAlgebra& A, std::uint64_t seed, std::size_t count)
{
    if (count < 1)
        throw std::invalid_argument("sample_X: count must be positive");
    DomainX X(A);
    const int m = A.n - 1;
    const double R = X.bounding_radius;

    const std::size_t nshards = (count + kShardSize - 1) / kShardSize;
    std::vector<std::vector<Eigen::VectorXd>> accepted(nshards);

    auto run_shard = [&](std::size_t s) {
        std::mt19937_64 rng(shard_seed(seed, s));
        std::uniform_real_distribution<double> uni(-R, R);
        const std::size_t todo = std::min(kShardSize, count - s * kShardSize);
        Eigen::VectorXd v(m);
        for (std::size_t k = 0; k < todo; ++k) {
            for (int i = 0; i < m; ++i)
                v[i] = uni(rng);
            if (X.contains(v))
                accepted[s].push_back(v);
        }
    };

    const int nthreads = std::min<std::size_t>(worker_count(), nshards);
    if (nthreads <= 1) {
        for (std::size_t s = 0; s < nshards; ++s)
            run_shard(s);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t s = next.fetch_add(1); s < nshards; s = next.fetch_add(1))
                    run_shard(s);
            });
        for (auto& t : pool)
            t.join();
    }

    SampleSet out;
    out.seed = seed;
    out.proposed = count;
    out.box_volume = std::pow(2.0 * R, m);
    for (std::size_t s = 0; s < nshards; ++s)
        for (auto& v : accepted[s])
            out.points.push_back(std::move(v));
    out.acceptance_rate = static_cast<double>(out.points.size()) / static_cast<double>(count);
    if (out.acceptance_rate < 1e-4)
        throw std::runtime_error("sample_X: acceptance rate below 1e-4, bound misconfigured");
    return out;
}

void save_samples(const std::string& path, const JordanAlgebra& A, const SampleSet& s)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("save_samples: cannot open " + path);
    out.write("XSMP", 4);
    const std::uint64_t hash = A.hash();
    const std::uint64_t npts = s.points.size();
    out.write(reinterpret_cast<const char*>(&hash), 8);
    out.write(reinterpret_cast<const char*>(&s.seed), 8);
    out.write(reinterpret_cast<const char*>(&s.proposed), 8);
    out.write(reinterpret_cast<const char*>(&npts), 8);
    out.write(reinterpret_cast<const char*>(&s.box_volume), 8);
    for (const auto& v : s.points)
        out.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(sizeof(double) * v.size()));
}

SampleSet load_samples(const std::string& path, const JordanAlgebra& A)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("load_samples: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, "XSMP", 4) != 0)
        throw std::runtime_error("load_samples: bad magic in " + path);
    std::uint64_t hash = 0, npts = 0;
    SampleSet s;
    in.read(reinterpret_cast<char*>(&hash), 8);
    in.read(reinterpret_cast<char*>(&s.seed), 8);
    in.read(reinterpret_cast<char*>(&s.proposed), 8);
    in.read(reinterpret_cast<char*>(&npts), 8);
    in.read(reinterpret_cast<char*>(&s.box_volume), 8);
    if (hash != A.hash())
        throw std::runtime_error("load_samples: cache was built for a different algebra");
    const int m = A.n - 1;
    s.points.resize(npts, Eigen::VectorXd(m));
    for (auto& v : s.points)
        in.read(reinterpret_cast<char*>(v.data()),
                static_cast<std::streamsize>(sizeof(double) * m));
    if (!in)
        throw std::runtime_error("load_samples: truncated file " + path);
    s.acceptance_rate = static_cast<double>(npts) / static_cast<double>(s.proposed);
    return s;
}

Eigen::VectorXd iota(const JordanAlgebra& A, double t, const Eigen::VectorXd& v)
{
    if (t <= 0.0)
        throw std::domain_error("iota: t must be positive");
    Eigen::VectorXd x(A.n);
    x[0] = t / std::sqrt(static_cast<double>(A.r));
    x.tail(A.n - 1) = (t / A.r) * v;
    return x;
}

std::pair<double, Eigen::VectorXd> iota_inv(const JordanAlgebra& A, const Eigen::VectorXd& x)
{
    if (!in_cone(A, x))
        throw std::domain_error("iota_inv: point not in the cone");
    const double t = jtrace(A, x); // t = tr(iota(t,v)) reconciles the two normalizations
    Eigen::VectorXd v = (A.r / t) * x.tail(A.n - 1);
    return {t, v};
}

std::pair<double, double>
l2x_inner(const JordanAlgebra& A, const RepSpec& rep,
          const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
          const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& g,
          const SampleSet& samples)
{
    const GammaPiX gam = gamma_piX_numeric(A, rep, samples);
    if (rep.kind == RepKind::Scalar) {
        const double expo = to_double(rep.lambda) - static_cast<double>(A.n) / A.r;
        const double c = gam.value(0, 0);
        auto [val, err] = samples.integrate([&](const Eigen::VectorXd& v) {
            const double w = std::pow(jdet(A, ambient_of(A, v)), expo);
            return f(v)[0] * g(v)[0] * w;
        });
        return {c * val, std::abs(c) * err};
    }
    auto [val, err] = samples.integrate([&](const Eigen::VectorXd& v) {
        const Eigen::VectorXd x = ambient_of(A, v);
        const auto root = cone_sqrt(A, x);
        const Eigen::MatrixXd W = pi_inverse_at(A, rep, *root);
        const double w = std::pow(jdet(A, x), -static_cast<double>(A.n) / A.r);
        return (gam.value * W * f(v)).dot(W * g(v)) * w;
    });
    return {val, err};
}

std::pair<double, double> l2x_inner(const JordanAlgebra& A, const RepSpec& rep,
                                    const MultiPoly& f, const MultiPoly& g,
                                    const SampleSet& samples)
{
    return l2x_inner(
        A, rep, [&](const Eigen::VectorXd& v) { return f.evaluate(v); },
        [&](const Eigen::VectorXd& v) { return g.evaluate(v); }, samples);
}

std::function<double(const Eigen::VectorXd&)> bump_at_identity(const JordanAlgebra& A,
                                                               double rho)
{
    Eigen::VectorXd center = Eigen::VectorXd::Zero(A.n);
    center[0] = std::sqrt(static_cast<double>(A.r));
    return [center, rho](const Eigen::VectorXd& x) {
        const double s = (x - center).squaredNorm() / (rho * rho);
        if (s >= 1.0)
            return 0.0;
        return std::exp(-1.0 / (1.0 - s));
    };
}

JacobianCheck verify_jacobian(const JordanAlgebra& A,
                              const std::function<double(const Eigen::VectorXd&)>& f,
                              double support_radius, std::uint64_t seed, std::size_t count)
{
    const int n = A.n;
    const double rho = support_radius;
    Eigen::VectorXd center = Eigen::VectorXd::Zero(n);
    center[0] = std::sqrt(static_cast<double>(A.r));

    // direct estimate over the cube around e containing the support
    std::mt19937_64 rng1(shard_seed(seed, 0));
    std::uniform_real_distribution<double> uni(-rho, rho);
    double sum1 = 0.0;
    Eigen::VectorXd x(n);
    for (std::size_t k = 0; k < count; ++k) {
        for (int i = 0; i < n; ++i)
            x[i] = center[i] + uni(rng1);
        sum1 += f(x);
    }
    const double lhs = std::pow(2.0 * rho, n) * sum1 / static_cast<double>(count);

    // stratified estimate: r^{1/2-n} int_X int f(iota(t,v)) t^{n-1} dt dv.
    // |tr(x) - r| <= sqrt(r) |x - e| on the support, so the t-window below
    // covers it with margin.
    const double sr = std::sqrt(static_cast<double>(A.r));
    const double tlo = std::max(1e-9, A.r - 2.0 * rho * sr);
    const double thi = A.r + 2.0 * rho * sr;
    DomainX X(A);
    const double R = X.bounding_radius;
    const int m = n - 1;
    std::mt19937_64 rng2(shard_seed(seed + 1, 1));
    std::uniform_real_distribution<double> unit(tlo, thi);
    std::uniform_real_distribution<double> univ(-R, R);
    double sum2 = 0.0;
    Eigen::VectorXd v(m);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = unit(rng2);
        for (int i = 0; i < m; ++i)
            v[i] = univ(rng2);
        if (!X.contains(v))
            continue;
        sum2 += f(iota(A, t, v)) * std::pow(t, n - 1);
    }
    const double rhs = std::pow(static_cast<double>(A.r), 0.5 - n) * (thi - tlo) *
                       std::pow(2.0 * R, m) * sum2 / static_cast<double>(count);

    JacobianCheck out;
    out.lhs = lhs;
    out.rhs = rhs;
    const double denom = std::max(std::abs(lhs), std::abs(rhs));
    out.rel_err = denom == 0.0 ? 0.0 : std::abs(lhs - rhs) / denom;
    return out;
}

} // namespace conebranch

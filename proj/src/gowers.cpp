#include "polgow/gowers.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace polgow {

MatFunc constant_matfunc(GroupRef g, const MatC& value) {
    MatFunc f;
    f.group = std::move(g);
    f.dim = static_cast<int>(value.rows());
    f.values.assign(f.group->order(), value);
    return f;
}

MatFunc phase_to_matfunc(const PhaseMap& q) {
    MatFunc f;
    f.group = q.source;
    f.dim = 1;
    f.values.resize(f.group->order());
    const double tau = 2.0 * M_PI / static_cast<double>(q.modulus);
    for (int g = 0; g < f.group->order(); ++g) {
        MatC m(1, 1);
        m(0, 0) = std::polar(1.0, tau * static_cast<double>(q.exponents[g]));
        f.values[g] = m;
    }
    return f;
}

MatFunc delta(const MatFunc& f, int g) {
    const GroupTable& grp = *f.group;
    MatFunc out{f.group, f.dim, std::vector<MatC>(grp.order())};
    for (int h = 0; h < grp.order(); ++h)
        out.values[h] = f(grp.mult(g, h)) * f(h).adjoint();
    return out;
}

CubeList cube_words(int k) {
    if (k < 0 || k > kCubeCap) throw std::domain_error("cube words capped at k <= 6");
    CubeList c;
    c.k = 0;
    c.words = {{}};
    for (int level = 1; level <= k; ++level) {
        CubeList next;
        next.k = level;
        next.words.reserve(c.words.size() * 2);
        for (const auto& w : c.words) {
            std::vector<int> v = w;
            v.push_back(level);
            next.words.push_back(std::move(v));
        }
        for (auto it = c.words.rbegin(); it != c.words.rend(); ++it) next.words.push_back(*it);
        c = std::move(next);
    }
    return c;
}

std::vector<int> cube_eval(const CubeList& c, const GroupTable& g, const std::vector<int>& gs,
                           int g0) {
    if (static_cast<int>(gs.size()) != c.k) throw std::invalid_argument("need k arguments");
    std::vector<int> out;
    out.reserve(c.words.size());
    for (const auto& w : c.words) {
        int v = g.identity();
        for (int var : w) v = g.mult(v, gs[var - 1]);
        out.push_back(g.mult(v, g0));
    }
    return out;
}

IndexAssignment IndexAssignment::identity_assignment(int k) {
    IndexAssignment a;
    a.k = k;
    a.map.resize(1 << k);
    for (int i = 1; i <= (1 << k); ++i) a.map[i - 1] = i;
    return a;
}

IndexAssignment index_transform(const IndexAssignment& a, IndexTransform which) {
    const int m = 1 << a.k;
    const int half = m / 2;
    IndexAssignment out;
    out.k = a.k;
    out.map.resize(m);
    switch (which) {
        case IndexTransform::L:
            for (int i = 1; i <= m; ++i) out.map[i - 1] = a(i <= half ? i : m + 1 - i);
            break;
        case IndexTransform::R:
            for (int i = 1; i <= m; ++i) out.map[i - 1] = a(i <= half ? m + 1 - i : i);
            break;
        case IndexTransform::S:
            for (int i = 1; i <= m; ++i) out.map[i - 1] = a(i == 1 ? m : i - 1);
            break;
        case IndexTransform::Bar:
            for (int i = 1; i <= m; ++i) out.map[i - 1] = a(m + 1 - i);
            break;
    }
    return out;
}

bool self_barred(const IndexAssignment& a) {
    return a == index_transform(a, IndexTransform::Bar);
}

namespace {

void check_shared_shape(std::span<const MatFunc> fs) {
    for (const MatFunc& f : fs) {
        if (f.group->order() != fs[0].group->order() || f.dim != fs[0].dim)
            throw std::invalid_argument("functions must share group and dimension");
    }
}

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    if ((std::size_t{1} << k) != n)
        throw std::invalid_argument("need exactly 2^k functions");
    return k;
}

// left-ordered product with adjoints on even (1-based) positions
Cplx cube_trace(std::span<const MatFunc> fs, const std::vector<int>& elems, int dim) {
    MatC prod = MatC::Identity(dim, dim);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const MatC& v = fs[i](elems[i]);
        if (i % 2 == 0)
            prod *= v;
        else
            prod *= v.adjoint();
    }
    return prod.trace() / static_cast<double>(dim);
}

struct TupleIter {
    // lexicographic (g_1, ..., g_k, g_0); g0 fastest
    std::vector<int> gs;
    int g0 = 0;
    int n;
    bool done = false;

    explicit TupleIter(int k, int order) : gs(k, 0), n(order) {}
    void next() {
        if (++g0 < n) return;
        g0 = 0;
        for (int i = static_cast<int>(gs.size()) - 1; i >= 0; --i) {
            if (++gs[i] < n) return;
            gs[i] = 0;
        }
        done = true;
    }
};

std::int64_t inner_budget(int order, int k, int dim) {
    std::int64_t b = 1;
    for (int i = 0; i <= k; ++i) b *= order;
    return b * (std::int64_t{1} << k) * dim * dim * dim;
}

}  // namespace

Cplx gowers_inner(std::span<const MatFunc> fs, std::int64_t budget) {
    check_shared_shape(fs);
    const int k = log2_exact(fs.size());
    const GroupTable& g = *fs[0].group;
    const int dim = fs[0].dim;
    if (inner_budget(g.order(), k, dim) > budget)
        throw std::domain_error("gowers inner product exceeds the op budget");
    CubeList cube = cube_words(k);
    PairwiseSum<Cplx> acc;
    std::int64_t count = 0;
    for (TupleIter it(k, g.order()); !it.done; it.next()) {
        acc.add(cube_trace(fs, cube_eval(cube, g, it.gs, it.g0), dim));
        ++count;
    }
    return acc.total() / static_cast<double>(count);
}

Cplx gowers_inner_assigned(std::span<const MatFunc> fs, const IndexAssignment& a,
                           std::int64_t budget) {
    const int m = 1 << a.k;
    std::vector<MatFunc> picked;
    picked.reserve(m);
    for (int i = 1; i <= m; ++i) picked.push_back(fs[a(i) - 1]);
    return gowers_inner(picked, budget);
}

namespace {

// E_g reduction down to the k = 1 base; the base expectation is real up to
// rounding, and the largest imaginary residue seen is reported upward.
double gowers_pow(const MatFunc& f, int k, double& max_imag) {
    const GroupTable& g = *f.group;
    if (k == 1) {
        PairwiseSum<Cplx> acc;
        for (int g1 = 0; g1 < g.order(); ++g1)
            for (int g0 = 0; g0 < g.order(); ++g0) {
                MatC m = f(g.mult(g1, g0)) * f(g0).adjoint();
                acc.add(m.trace() / static_cast<double>(f.dim));
            }
        Cplx v = acc.total() / static_cast<double>(g.order()) /
                 static_cast<double>(g.order());
        max_imag = std::max(max_imag, std::abs(v.imag()));
        return v.real();
    }
    PairwiseSum<double> acc;
    for (int x = 0; x < g.order(); ++x) acc.add(gowers_pow(delta(f, x), k - 1, max_imag));
    return acc.total() / static_cast<double>(g.order());
}

}  // namespace

GowersReport gowers_norm_exact_report(const MatFunc& f, int k, std::int64_t budget) {
    if (k < 1 || k > kCubeCap) throw std::domain_error("k must be in 1..6");
    const GroupTable& g = *f.group;
    const std::int64_t cost = inner_budget(g.order(), k, f.dim);
    if (cost > budget) throw std::domain_error("gowers norm exceeds the op budget");

    GowersReport rep;
    rep.budget_used = cost;
    rep.imag_residual = 0;
    rep.pow_value = gowers_pow(f, k, rep.imag_residual);
    if (rep.imag_residual > 1e-9)
        throw std::logic_error("non-negligible imaginary part in gowers norm");
    rep.norm = std::pow(std::max(rep.pow_value, 0.0), 1.0 / std::pow(2.0, k));
    return rep;
}

double gowers_norm_exact(const MatFunc& f, int k, std::int64_t budget) {
    return gowers_norm_exact_report(f, k, budget).norm;
}

McReport gowers_norm_mc(const MatFunc& f, int k, std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    const GroupTable& g = *f.group;
    CubeList cube = cube_words(k);
    std::vector<MatFunc> copies(1 << k, f);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    PairwiseSum<double> sum, sumsq;
    std::vector<int> gs(k);
    for (std::int64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < k; ++i) gs[i] = pick(rng);
        int g0 = pick(rng);
        double x = cube_trace(copies, cube_eval(cube, g, gs, g0), f.dim).real();
        sum.add(x);
        sumsq.add(x * x);
    }
    McReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.mean = sum.total() / static_cast<double>(samples);
    double var = sumsq.total() / static_cast<double>(samples) - rep.mean * rep.mean;
    rep.stderr_mean = samples > 1 ? std::sqrt(std::max(var, 0.0) / static_cast<double>(samples - 1))
                                  : 0.0;
    rep.estimate = std::copysign(std::pow(std::abs(rep.mean), 1.0 / std::pow(2.0, k)), rep.mean);
    return rep;
}

double u2_quadruple_form(const MatFunc& f, std::int64_t budget) {
    const GroupTable& g = *f.group;
    const int n = g.order();
    std::int64_t cost = static_cast<std::int64_t>(n) * n * n * f.dim * f.dim * f.dim;
    if (cost > budget) throw std::domain_error("u2 quadruple form exceeds the op budget");
    PairwiseSum<Cplx> acc;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int w = g.mult(g.mult(x, g.inverse(y)), z);
                MatC m = f(x) * f(y).adjoint() * f(z) * f(w).adjoint();
                acc.add(m.trace() / static_cast<double>(f.dim));
            }
    Cplx v = acc.total() / (static_cast<double>(n) * n * n);
    return std::pow(std::max(v.real(), 0.0), 0.25);
}

MatC polar_unitarize(const MatC& v) {
    const int n = static_cast<int>(v.rows());
    if (v.cols() != n) throw std::invalid_argument("polar factor needs a square matrix");
    if (n == 0) return v;
    Eigen::JacobiSVD<MatC> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    constexpr double tol = 1e-12;
    int r = 0;
    while (r < n && sv[r] >= tol) ++r;
    if (r == n) return svd.matrixU() * svd.matrixV().adjoint();

    // complete the well-determined part with the unitary closest to acting
    // as the identity on the degenerate complement
    MatC u1 = svd.matrixU().leftCols(r);
    MatC v1 = svd.matrixV().leftCols(r);
    MatC pu = svd.matrixU().rightCols(n - r);  // basis of the left complement
    MatC pv = svd.matrixV().rightCols(n - r);  // basis of the right complement
    MatC bridge = pu.adjoint() * pv;           // (n-r) x (n-r)
    Eigen::JacobiSVD<MatC> bsvd(bridge, Eigen::ComputeFullU | Eigen::ComputeFullV);
    MatC q = bsvd.matrixU() * bsvd.matrixV().adjoint();
    return u1 * v1.adjoint() + pu * q * pv.adjoint();
}

double hs_norm_sq(const MatC& a) {
    return a.squaredNorm() / static_cast<double>(a.rows());
}

double hs_distance_sq(const MatFunc& f, const MatFunc& g) {
    if (f.group->order() != g.group->order())
        throw std::invalid_argument("functions live on different groups");
    const int n = std::max(f.dim, g.dim);
    auto padded = [&](const MatC& m) {
        if (static_cast<int>(m.rows()) == n) return m;
        MatC out = MatC::Identity(n, n);
        out.topLeftCorner(m.rows(), m.cols()) = m;
        return out;
    };
    PairwiseSum<double> acc;
    const int order = f.group->order();
    for (int x = 0; x < order; ++x) acc.add(hs_norm_sq(padded(f(x)) - padded(g(x))));
    return acc.total() / static_cast<double>(order);
}

MatFunc nearest_unital(const MatFunc& f) {
    const MatC u = f(f.group->identity()).adjoint();
    MatFunc out{f.group, f.dim, std::vector<MatC>(f.group->order())};
    for (int x = 0; x < f.group->order(); ++x) out.values[x] = u * f(x);
    return out;
}

}  // namespace polgow

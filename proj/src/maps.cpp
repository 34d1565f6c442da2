#include "polgow/maps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polgow {

GroupMap finite_difference(const GroupMap& phi, int k) {
    const GroupTable& s = *phi.source;
    const GroupTable& t = *phi.target;
    GroupMap out{phi.source, phi.target, std::vector<int>(s.order())};
    for (int g = 0; g < s.order(); ++g)
        out.values[g] = t.mult(phi(s.mult(k, g)), t.inverse(phi(g)));
    return out;
}

GroupMap translate(const GroupMap& phi, int k) {
    const GroupTable& s = *phi.source;
    GroupMap out{phi.source, phi.target, std::vector<int>(s.order())};
    for (int g = 0; g < s.order(); ++g) out.values[g] = phi(s.mult(k, g));
    return out;
}

GroupMap beta(const GroupMap& phi, int k) {
    if (!phi.unital()) throw std::invalid_argument("beta needs a unital map");
    const GroupTable& s = *phi.source;
    const GroupTable& t = *phi.target;
    GroupMap out{phi.source, phi.target, std::vector<int>(s.order())};
    const int ck = t.inverse(phi(k));
    for (int g = 0; g < s.order(); ++g)
        out.values[g] = t.mult(ck, t.mult(phi(s.mult(k, g)), t.inverse(phi(g))));
    return out;
}

bool is_homomorphism(const GroupMap& phi) {
    const GroupTable& s = *phi.source;
    const GroupTable& t = *phi.target;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (phi(s.mult(x, y)) != t.mult(phi(x), phi(y))) return false;
    return true;
}

bool is_constant(const GroupMap& phi) {
    return std::all_of(phi.values.begin(), phi.values.end(),
                       [&](int v) { return v == phi.values[0]; });
}

namespace {

struct DegreeMemo {
    std::map<std::pair<int, std::vector<int>>, bool> cache;
    std::int64_t ops = 0;
    std::int64_t budget;

    bool run(const GroupMap& phi, int d) {
        const GroupTable& s = *phi.source;
        const GroupTable& t = *phi.target;
        if (d <= -1) {
            ++ops;
            return std::all_of(phi.values.begin(), phi.values.end(),
                               [&](int v) { return v == t.identity(); });
        }
        auto key = std::make_pair(d, phi.values);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        ops += s.order();
        if (ops > budget) throw std::domain_error("degree check exceeded the op budget");
        bool ok = true;
        for (int k = 0; k < s.order() && ok; ++k) ok = run(finite_difference(phi, k), d - 1);
        cache.emplace(std::move(key), ok);
        return ok;
    }
};

}  // namespace

bool degree_at_most(const GroupMap& phi, int d, std::int64_t op_budget) {
    if (d < -1) throw std::invalid_argument("degree must be >= -1");
    DegreeMemo memo{{}, 0, op_budget};
    return memo.run(phi, d);
}

DecomposeResult decompose_degree_one(const GroupMap& phi) {
    const GroupTable& s = *phi.source;
    const GroupTable& t = *phi.target;
    const int c = phi(s.identity());
    GroupMap psi{phi.source, phi.target, std::vector<int>(s.order())};
    for (int g = 0; g < s.order(); ++g) psi.values[g] = t.mult(phi(g), t.inverse(c));
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (psi(s.mult(x, y)) != t.mult(psi(x), psi(y)))
                throw std::domain_error("map is not of degree <= 1; witness pair (" +
                                        std::to_string(x) + "," + std::to_string(y) + ")");
    return {std::move(psi), c};
}

TripleWitness quad_relation_check(const GroupMap& phi) {
    if (!phi.unital()) throw std::invalid_argument("quadratic relation needs a unital map");
    const GroupTable& s = *phi.source;
    const GroupTable& t = *phi.target;
    std::vector<int> inv(s.order());
    for (int g = 0; g < s.order(); ++g) inv[g] = t.inverse(phi(g));
    for (int a = 0; a < s.order(); ++a)
        for (int b = 0; b < s.order(); ++b)
            for (int c = 0; c < s.order(); ++c) {
                int lhs = phi(s.mult(s.mult(a, b), c));
                int rhs = t.mult(phi(s.mult(a, b)), inv[b]);
                rhs = t.mult(rhs, inv[a]);
                rhs = t.mult(rhs, phi(s.mult(a, c)));
                rhs = t.mult(rhs, inv[c]);
                rhs = t.mult(rhs, phi(s.mult(b, c)));
                if (lhs != rhs) return {false, {a, b, c}};
            }
    return {};
}

namespace {

std::int64_t phase_third_difference_violations(const PhaseMap& q, bool stop_early) {
    const GroupTable& g = *q.source;
    const std::int64_t n = q.modulus;
    std::int64_t bad = 0;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            for (int z = 0; z < g.order(); ++z) {
                std::int64_t v = q.exponents[g.mult(g.mult(x, y), z)] -
                                 q.exponents[g.mult(x, y)] - q.exponents[g.mult(x, z)] -
                                 q.exponents[g.mult(y, z)] + q.exponents[x] + q.exponents[y] +
                                 q.exponents[z];
                if (((v % n) + n) % n != 0) {
                    ++bad;
                    if (stop_early) return bad;
                }
            }
    return bad;
}

}  // namespace

bool phase_is_quadratic(const PhaseMap& q) {
    if (!fingerprint_is_abelian(*q.source))
        throw std::invalid_argument("phase maps need an abelian source");
    return q.unital() && phase_third_difference_violations(q, true) == 0;
}

bool phase_is_affine(const PhaseMap& q) {
    const GroupTable& g = *q.source;
    const std::int64_t n = q.modulus;
    if (!q.unital()) return false;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
            std::int64_t v = q.exponents[g.mult(x, y)] - q.exponents[x] - q.exponents[y];
            if (((v % n) + n) % n != 0) return false;
        }
    return true;
}

std::int64_t quad_default_modulus(const FinAbelian& g) {
    std::int64_t n = 1;
    for (const auto& [p, exps] : primary_decomposition(g)) {
        std::int64_t pw = 1;
        for (int e = 0; e < exps.back() + 1; ++e) pw *= p;
        n = std::lcm(n, pw);
    }
    return std::max<std::int64_t>(n, 1);
}

namespace {

QuadOracleResult oracle_once(GroupRef gref, std::int64_t modulus) {
    const GroupTable& g = *gref;
    const int n = g.order();
    const int id = g.identity();
    // variables: q(x) for x != identity
    std::vector<int> var(n, -1);
    int k = 0;
    for (int x = 0; x < n; ++x)
        if (x != id) var[x] = k++;

    std::set<std::vector<std::int64_t>> rows;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::vector<std::int64_t> r(k, 0);
                auto add = [&](int e, std::int64_t c) {
                    if (var[e] >= 0) r[var[e]] += c;
                };
                add(g.mult(g.mult(x, y), z), 1);
                add(g.mult(x, y), -1);
                add(g.mult(x, z), -1);
                add(g.mult(y, z), -1);
                add(x, 1);
                add(y, 1);
                add(z, 1);
                if (std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v != 0; }))
                    rows.insert(std::move(r));
            }

    IntMatrix rel(std::max<Eigen::Index>(1, static_cast<Eigen::Index>(rows.size())),
                  std::max(1, k));
    rel.setZero();
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        for (int j = 0; j < k; ++j) rel(i, j) = Int(r[j]);
        ++i;
    }

    QuadOracleResult out;
    out.modulus = modulus;
    if (k == 0) {  // trivial source group
        out.structure = FinAbelian();
        out.count = 1;
        return out;
    }
    ModKernel kernel = solve_linear_mod(rel, modulus);
    out.count = kernel.count();
    out.structure = FinAbelian::from_factors(kernel.cyclic_orders);
    out.generator_orders = kernel.cyclic_orders;
    for (const VecI& gen : kernel.generators) {
        PhaseMap pm{gref, modulus, std::vector<std::int64_t>(n, 0)};
        for (int x = 0; x < n; ++x)
            if (var[x] >= 0) pm.exponents[x] = gen[var[x]];
        out.generators.push_back(std::move(pm));
    }
    return out;
}

}  // namespace

QuadOracleResult enumerate_quad_phase(GroupRef gref, std::int64_t modulus) {
    const GroupTable& g = *gref;
    if (g.order() > 64) throw std::domain_error("oracle capped at source order 64");
    if (!fingerprint_is_abelian(g))
        throw std::invalid_argument("the phase oracle needs an abelian source");
    if (modulus == 0) modulus = quad_default_modulus(abelian_invariants_of(g).group);
    QuadOracleResult out = oracle_once(gref, modulus);
    out.saturated = oracle_once(gref, 2 * modulus).count == out.count;
    return out;
}

std::int64_t enumerate_quad_phase_exhaustive(const GroupTable& g, std::int64_t modulus) {
    const int n = g.order();
    double bits = (n - 1) * std::log2(static_cast<double>(modulus));
    if (bits > 21) throw std::domain_error("exhaustive oracle too large");
    std::vector<std::int64_t> expo(n, 0);
    std::int64_t count = 0;
    std::int64_t total = 1;
    for (int i = 0; i < n - 1; ++i) total *= modulus;
    GroupRef gref = share(g);
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t rest = code;
        for (int x = 0; x < n; ++x) {
            if (x == g.identity()) {
                expo[x] = 0;
                continue;
            }
            expo[x] = rest % modulus;
            rest /= modulus;
        }
        PhaseMap pm{gref, modulus, expo};
        if (phase_third_difference_violations(pm, true) == 0) ++count;
    }
    return count;
}

std::vector<PhaseMap> expand_quad_group(const QuadOracleResult& oracle) {
    std::vector<PhaseMap> out;
    if (oracle.generators.empty()) return out;
    const GroupRef src = oracle.generators[0].source;
    const int n = src->order();
    const std::int64_t mod = oracle.modulus;
    const int k = static_cast<int>(oracle.generators.size());
    std::vector<std::int64_t> idx(k, 0);
    for (;;) {
        PhaseMap pm{src, mod, std::vector<std::int64_t>(n, 0)};
        for (int i = 0; i < k; ++i)
            for (int x = 0; x < n; ++x)
                pm.exponents[x] =
                    (pm.exponents[x] + idx[i] * oracle.generators[i].exponents[x]) % mod;
        out.push_back(std::move(pm));
        int c = k - 1;
        while (c >= 0 && ++idx[c] == oracle.generator_orders[c]) idx[c--] = 0;
        if (c < 0) break;
    }
    return out;
}

}  // namespace polgow

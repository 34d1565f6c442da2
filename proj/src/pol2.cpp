#include "polgow/pol2.hpp"
#include "polgow/group_algorithms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polgow {

VecI Pol2::pure_tensor(int h, const VecI& v) const {
    VecI out = product.module().zero();
    if (slot_base[h] < 0) return out;
    for (int j = 0; j < gab.rank(); ++j) out[slot_base[h] + j] = v[j];
    return product.module().reduce(std::move(out));
}

Int pol2_order(const GroupTable& g) {
    AbelianizationResult ab = abelianization(g);
    Int order = 1;
    for (int i = 0; i < g.order() - 1; ++i) order *= ab.group.order();
    return order * g.order();
}

Pol2 pol2(GroupRef g, std::int64_t order_cap) {
    Int theoretical = pol2_order(*g);
    if (theoretical > order_cap)
        throw std::domain_error("pol2 order " + theoretical.str() + " exceeds cap " +
                                std::to_string(order_cap));
    AugmentationModule aug = augmentation_module(g);

    const GroupTable& base = *g;
    Cocycle2 psi = zero_cocycle(aug.module);
    for (int x = 0; x < base.order(); ++x)
        for (int y = 0; y < base.order(); ++y)
            psi.at(x, y) = aug.pure_tensor(x, aug.gab_proj[y]);

    Pol2 out{twisted_product(std::move(aug.module), std::move(psi), order_cap),
             g, std::move(aug.gab), std::move(aug.gab_proj), std::move(aug.slot_base)};
    return out;
}

TripleCheck universal_map_relations(const Pol2& p) {
    const GroupTable& g = *p.base;
    const TwistedProduct& t = p.product;
    const int n = g.order();
    std::vector<int> phi(n), phi_inv(n);
    for (int x = 0; x < n; ++x) {
        phi[x] = p.universal(x);
        phi_inv[x] = t.inverse(phi[x]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = phi[g.mult(g.mult(a, b), c)];
                int rhs = t.mult(phi[g.mult(a, b)], phi_inv[b]);
                rhs = t.mult(rhs, phi_inv[a]);
                rhs = t.mult(rhs, phi[g.mult(a, c)]);
                rhs = t.mult(rhs, phi_inv[c]);
                rhs = t.mult(rhs, phi[g.mult(b, c)]);
                if (lhs != rhs) return {false, {a, b, c}};
            }
    return {};
}

bool beta_formula_holds(const Pol2& p) {
    const GroupTable& g = *p.base;
    const TwistedProduct& t = p.product;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
            int lhs = t.mult(t.mult(t.inverse(p.universal(x)), p.universal(g.mult(x, y))),
                             t.inverse(p.universal(y)));
            VecI expected = p.pure_tensor(g.inverse(x), p.gab_proj[y]);
            if (lhs != t.embed(expected, g.identity())) return false;
        }
    return true;
}

Pol2Abelianized pol2_abelianization(const FinAbelian& g, std::int64_t order_cap) {
    Sym2 sym = sym2(g);
    GroupRef base = share(group_from_abelian(g.invariant_factors()));

    // element index -> coordinates of the abelian base group
    const int r = g.rank();
    const int n = base->order();
    std::vector<VecI> coords(n);
    {
        const auto& d = g.invariant_factors();
        for (int idx = 0; idx < n; ++idx) {
            VecI v(r);
            int rest = idx;
            for (int i = r - 1; i >= 0; --i) {
                v[i] = rest % d[i];
                rest = static_cast<int>(rest / d[i]);
            }
            coords[idx] = v;
        }
    }

    GModule mod = trivial_module(base, sym.slot_moduli);
    Cocycle2 sigma = zero_cocycle(mod);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) sigma.at(x, y) = sym.product(coords[x], coords[y]);
    return {twisted_product(std::move(mod), std::move(sigma), order_cap), std::move(sym),
            std::move(base)};
}

QuotientResult pol2_quotient(const Pol2& p, const std::vector<int>& sigma,
                             const std::vector<int>& gens) {
    const GroupTable& g = *p.base;
    std::set<int> sig(sigma.begin(), sigma.end()), gen(gens.begin(), gens.end());
    for (int s : sigma) sig.insert(g.inverse(s));
    for (int s : gens) gen.insert(g.inverse(s));

    std::vector<int> seeds;
    for (int s : sig) seeds.push_back(p.universal(s));
    for (int s : sig)
        for (int t : gen)
            seeds.push_back(p.product.mult(p.universal(g.mult(s, t)),
                                           p.product.inverse(p.universal(t))));
    std::vector<int> members =
        normal_closure_members(p.product, std::move(seeds), p.product.structural_generators());
    return quotient_by_members(p.product, members, p.product.structural_generators());
}

FinAbelian pol2_abelian_invariants(const GroupTable& g) {
    const int n = g.order();
    if (n > 32)
        throw std::domain_error("relation presentation capped at base order 32");
    // generators x_e for e in G; relations: x_1 = 0 and the abelianized
    // quadratic relation for every triple
    std::set<std::vector<std::int64_t>> rows;
    {
        std::vector<std::int64_t> r(n, 0);
        r[g.identity()] = 1;
        rows.insert(r);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::vector<std::int64_t> r(n, 0);
                r[g.mult(g.mult(a, b), c)] += 1;
                r[g.mult(a, b)] -= 1;
                r[g.mult(a, c)] -= 1;
                r[g.mult(b, c)] -= 1;
                r[a] += 1;
                r[b] += 1;
                r[c] += 1;
                if (std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v != 0; }))
                    rows.insert(std::move(r));
            }
    IntMatrix rel(static_cast<Eigen::Index>(rows.size()), n);
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        for (int j = 0; j < n; ++j) rel(i, j) = Int(r[j]);
        ++i;
    }
    return FinAbelian::from_factors(cokernel(rel, n).factors());
}

namespace {

std::int64_t pow_i64(std::int64_t p, int e) {
    std::int64_t v = 1;
    while (e-- > 0) v *= p;
    return v;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

FinAbelian classify_quad_p(std::int64_t p, const std::vector<int>& exponents) {
    if (!is_prime(p)) throw std::invalid_argument("classify_quad_p needs a prime");
    for (int e : exponents)
        if (e < 1) throw std::invalid_argument("exponents must be >= 1");
    const int d = static_cast<int>(exponents.size());
    std::vector<std::int64_t> parts;
    if (p == 2) {
        for (int i = 0; i < d; ++i) parts.push_back(pow_i64(2, exponents[i] - 1));
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                parts.push_back(pow_i64(2, std::min(exponents[i], exponents[j])));
        for (int i = 0; i < d; ++i) parts.push_back(pow_i64(2, exponents[i] + 1));
    } else {
        for (int i = 0; i < d; ++i) parts.push_back(pow_i64(p, exponents[i]));
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                parts.push_back(pow_i64(p, std::min(exponents[i], exponents[j])));
        for (int i = 0; i < d; ++i) parts.push_back(pow_i64(p, exponents[i]));
    }
    return FinAbelian::from_factors(parts);
}

FinAbelian classify_quad(const FinAbelian& g) {
    std::vector<std::int64_t> parts;
    for (const auto& [p, exps] : primary_decomposition(g)) {
        FinAbelian q = classify_quad_p(p, exps);
        for (std::int64_t f : q.invariant_factors()) parts.push_back(f);
    }
    return FinAbelian::from_factors(parts);
}

}  // namespace polgow

#include "polgow/gmodule.hpp"

#include <random>
#include <stdexcept>

namespace polgow {

std::int64_t GModule::size() const {
    std::int64_t s = 1;
    for (std::int64_t m : moduli) s *= m;
    return s;
}

VecI GModule::reduce(VecI v) const {
    for (int i = 0; i < rank(); ++i) {
        std::int64_t m = moduli[i];
        v[i] = ((v[i] % m) + m) % m;
    }
    return v;
}

VecI GModule::act(int g, const VecI& v) const {
    if (rank() == 0) return VecI();
    return reduce(action[g] * v);
}

void GModule::validate() const {
    const int n = group->order();
    if (static_cast<int>(action.size()) != n)
        throw std::invalid_argument("module needs one action matrix per group element");
    for (const MatI& a : action)
        if (a.rows() != rank() || a.cols() != rank())
            throw std::invalid_argument("action matrix has wrong shape");
    if (rank() == 0) return;

    auto same_mod = [&](const MatI& a, const MatI& b) {
        for (int i = 0; i < rank(); ++i) {
            std::int64_t m = moduli[i];
            for (int j = 0; j < rank(); ++j)
                if (((a(i, j) - b(i, j)) % m + m) % m != 0) return false;
        }
        return true;
    };
    if (!same_mod(action[group->identity()], MatI::Identity(rank(), rank())))
        throw std::invalid_argument("identity must act trivially");
    auto check_pair = [&](int g, int h) {
        if (!same_mod(action[group->mult(g, h)], MatI(action[g] * action[h])))
            throw std::invalid_argument("action is not a homomorphism at pair (" +
                                        std::to_string(g) + "," + std::to_string(h) + ")");
    };
    if (n <= 64) {
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) check_pair(g, h);
    } else {
        std::mt19937_64 rng(0x51ab5u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 2000; ++t) check_pair(pick(rng), pick(rng));
    }
}

GModule trivial_module(GroupRef g, std::vector<std::int64_t> moduli) {
    GModule m;
    m.group = std::move(g);
    m.moduli = std::move(moduli);
    m.action.assign(m.group->order(), MatI::Identity(m.rank(), m.rank()));
    return m;
}

AugmentationModule augmentation_module(GroupRef gref) {
    const GroupTable& g = *gref;
    AugmentationModule out;
    AbelianizationResult ab = abelianization(g);
    out.gab = ab.group;
    out.gab_proj = ab.projection;

    const int n = g.order();
    const int r = out.gab.rank();
    out.slot_base.assign(n, -1);
    std::vector<std::int64_t> moduli;
    for (int h = 0; h < n; ++h) {
        if (h == g.identity()) continue;
        out.slot_base[h] = static_cast<int>(moduli.size());
        for (int j = 0; j < r; ++j) moduli.push_back(out.gab.invariant_factors()[j]);
    }

    GModule mod;
    mod.group = gref;
    mod.moduli = std::move(moduli);
    const int rank = mod.rank();
    mod.action.assign(n, MatI::Zero(rank, rank));
    // a * (c(h) (x) x) = c(ah) (x) x - c(a) (x) x, with c(1) = 0
    for (int a = 0; a < n; ++a) {
        MatI& m = mod.action[a];
        for (int h = 0; h < n; ++h) {
            if (h == g.identity()) continue;
            int ah = g.mult(a, h);
            for (int j = 0; j < r; ++j) {
                int src = out.slot(h, j);
                if (ah != g.identity()) m(out.slot(ah, j), src) += 1;
                if (a != g.identity()) m(out.slot(a, j), src) -= 1;
            }
        }
    }
    out.module = std::move(mod);
    out.module.validate();
    return out;
}

VecI AugmentationModule::pure_tensor(int h, const VecI& v) const {
    VecI out = module.zero();
    if (slot_base[h] < 0) return out;  // c(identity) = 0
    for (int j = 0; j < gab.rank(); ++j) out[slot(h, j)] = v[j];
    return module.reduce(std::move(out));
}

const VecI& Cocycle2::at(int g, int h) const {
    return values[static_cast<std::size_t>(g) * module->group->order() + h];
}

VecI& Cocycle2::at(int g, int h) {
    return values[static_cast<std::size_t>(g) * module->group->order() + h];
}

bool Cocycle2::normalized() const {
    const GroupTable& g = *module->group;
    for (int x = 0; x < g.order(); ++x)
        if (vec_nonzero(at(g.identity(), x)) || vec_nonzero(at(x, g.identity()))) return false;
    return true;
}

Cocycle2 zero_cocycle(const GModule& m) {
    Cocycle2 psi;
    psi.module = &m;
    psi.values.assign(static_cast<std::size_t>(m.group->order()) * m.group->order(), m.zero());
    return psi;
}

Cocycle2 normalize_cocycle(const Cocycle2& psi) {
    // subtract the coboundary of the constant psi(1,1)
    const GModule& m = *psi.module;
    const GroupTable& g = *m.group;
    VecI c = psi.at(g.identity(), g.identity());
    Cocycle2 out = psi;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            out.at(x, y) = m.reduce(psi.at(x, y) - m.act(x, c));
    if (!out.normalized()) throw std::logic_error("cocycle normalization failed");
    return out;
}

CocycleCheck validate_cocycle(const Cocycle2& psi) {
    const GModule& m = *psi.module;
    const GroupTable& g = *m.group;
    const int n = g.order();
    auto holds = [&](int g1, int g2, int g3) {
        VecI lhs = m.act(g1, psi.at(g2, g3)) - psi.at(g.mult(g1, g2), g3) +
                   psi.at(g1, g.mult(g2, g3)) - psi.at(g1, g2);
        return !vec_nonzero(m.reduce(std::move(lhs)));
    };
    CocycleCheck res;
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!holds(a, b, c)) return {false, {a, b, c}};
    } else {
        std::mt19937_64 rng(0xc0c2ull);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 20000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (!holds(a, b, c)) return {false, {a, b, c}};
        }
    }
    return res;
}

}  // namespace polgow

#pragma once

#include "polgow/group_table.hpp"

#include <array>
#include <memory>
#include <optional>
#include <vector>

namespace polgow {

/// A finite abelian G-module: cyclic coordinate slots with an invertible
/// integer action matrix per group element (new = A_g * old, reduced mod
/// the slot moduli rowwise).
using GroupRef = std::shared_ptr<const GroupTable>;

inline GroupRef share(GroupTable g) {
    return std::make_shared<const GroupTable>(std::move(g));
}

struct GModule {
    GroupRef group;
    std::vector<std::int64_t> moduli;  // one per slot; module trivial when empty
    std::vector<MatI> action;          // one matrix per group element

    int rank() const { return static_cast<int>(moduli.size()); }
    std::int64_t size() const;
    FinAbelian underlying() const { return FinAbelian::from_factors(moduli); }

    VecI reduce(VecI v) const;
    VecI zero() const { return VecI::Zero(rank()); }
    VecI act(int g, const VecI& v) const;

    /// action(1) = id and action(gh) = action(g) action(h), checked on all
    /// pairs for |G| <= 64 and on sampled pairs above.
    void validate() const;
};

GModule trivial_module(GroupRef g, std::vector<std::int64_t> moduli);

/// omega(G) (x) G^ab with basis slots (h, j) for h != 1 and j a generator
/// coordinate of G^ab; G acts through left multiplication on the omega leg.
struct AugmentationModule {
    GModule module;
    FinAbelian gab;
    std::vector<VecI> gab_proj;   // g -> coordinates in gab
    std::vector<int> slot_base;   // group element h -> first slot index, -1 for identity

    int slot(int h, int j) const { return slot_base[h] + j; }
    /// c(h) (x) v for a gab coordinate vector v; c(identity) = 0
    VecI pure_tensor(int h, const VecI& v) const;
};

AugmentationModule augmentation_module(GroupRef g);

/// 2-cocycle on G with values in a module, as a dense table.
struct Cocycle2 {
    const GModule* module = nullptr;
    std::vector<VecI> values;  // index g * |G| + h

    const VecI& at(int g, int h) const;
    VecI& at(int g, int h);
    bool normalized() const;  // psi(1,g) = psi(g,1) = 0
};

Cocycle2 zero_cocycle(const GModule& m);
Cocycle2 normalize_cocycle(const Cocycle2& psi);

struct CocycleCheck {
    bool ok = true;
    std::array<int, 3> violation{-1, -1, -1};
};

/// mu_{g1}(psi(g2,g3)) - psi(g1 g2, g3) + psi(g1, g2 g3) - psi(g1, g2) = 0;
/// exhaustive for |G| <= 64, sampled (seeded) above.
CocycleCheck validate_cocycle(const Cocycle2& psi);

}  // namespace polgow

#pragma once

#include "polgow/twisted_product.hpp"

#include <array>

namespace polgow {

/// The universal quadratic-map group of a finite group, realized as the
/// twisted crossed product of the augmentation module with the exterior
/// cocycle psi(g, h) = c(g) (x) hbar. The universal map is g -> (0, g).
struct Pol2 {
    TwistedProduct product;
    GroupRef base;
    FinAbelian gab;
    std::vector<VecI> gab_proj;
    std::vector<int> slot_base;  // base element h -> first module slot, -1 at identity

    int universal(int g) const { return product.embed(product.module().zero(), g); }
    /// c(h) (x) v as a module vector
    VecI pure_tensor(int h, const VecI& v) const;
};

/// Theoretical order |G^ab|^(|G|-1) * |G| (computed before any allocation).
Int pol2_order(const GroupTable& g);

Pol2 pol2(GroupRef g, std::int64_t order_cap = kTwistedOrderCap);

/// All triples: phi(g1 g2 g3) = phi(g1 g2) phi(g2)^-1 phi(g1)^-1 phi(g1 g3)
/// phi(g3)^-1 phi(g2 g3). Returns the first violating triple if any.
struct TripleCheck {
    bool ok = true;
    std::array<int, 3> witness{-1, -1, -1};
};
TripleCheck universal_map_relations(const Pol2& p);

/// phi(g)^-1 phi(gh) phi(h)^-1 = (c(g^-1) (x) hbar, 1) on all pairs.
bool beta_formula_holds(const Pol2& p);

/// Sym^2(G) x|_sigma G for abelian G, sigma(g, h) = g h in Sym^2.
struct Pol2Abelianized {
    TwistedProduct product;
    Sym2 sym;
    GroupRef base;
};
Pol2Abelianized pol2_abelianization(const FinAbelian& g,
                                    std::int64_t order_cap = kTwistedOrderCap);

/// Quotient functor: Pol2(G/N) from Pol2(G), N the normal closure of sigma
/// seeds, S a generating set of G. Both sets are symmetrized internally.
QuotientResult pol2_quotient(const Pol2& p, const std::vector<int>& sigma,
                             const std::vector<int>& gens);

/// Invariant factors of Pol2(G)^ab straight from the relation presentation
/// (third-difference cokernel over Z); no realization required.
FinAbelian pol2_abelian_invariants(const GroupTable& g);

/// Classification of unital quadratic maps into the circle for a p-primary
/// group with exponents n, and the primary recombination for arbitrary
/// finite abelian groups.
FinAbelian classify_quad_p(std::int64_t p, const std::vector<int>& exponents);
FinAbelian classify_quad(const FinAbelian& g);

}  // namespace polgow

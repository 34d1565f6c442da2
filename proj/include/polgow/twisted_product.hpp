#pragma once

#include "polgow/gmodule.hpp"

#include <optional>
#include <utility>

namespace polgow {

inline constexpr std::int64_t kTwistedOrderCap = 100000;

/// The group M x|_{mu,psi} G on pairs (xi, g) with multiplication
/// (xi1, g1)(xi2, g2) = (xi1 + mu_{g1}(xi2) + psi(g1, g2), g1 g2).
/// Elements are indexed module-major: index = module_index * |G| + g.
/// Multiplication is structural; a dense table is materialized on demand
/// for orders up to the dense cap.
class TwistedProduct {
public:
    TwistedProduct(GModule module, Cocycle2 psi, std::int64_t order_cap = kTwistedOrderCap);
    TwistedProduct(const TwistedProduct& o) { *this = o; }
    TwistedProduct(TwistedProduct&& o) noexcept { *this = std::move(o); }
    TwistedProduct& operator=(const TwistedProduct& o) {
        if (this != &o) {
            module_ = o.module_;
            cocycle_ = o.cocycle_;
            cocycle_.module = &module_;
            order_ = o.order_;
            identity_ = o.identity_;
            stride_ = o.stride_;
            realized_ = o.realized_;
        }
        return *this;
    }
    TwistedProduct& operator=(TwistedProduct&& o) noexcept {
        module_ = std::move(o.module_);
        cocycle_ = std::move(o.cocycle_);
        cocycle_.module = &module_;
        order_ = o.order_;
        identity_ = o.identity_;
        stride_ = std::move(o.stride_);
        realized_ = std::move(o.realized_);
        return *this;
    }

    std::int64_t order() const { return order_; }
    int identity() const { return identity_; }
    int mult(int a, int b) const;
    int inverse(int a) const;

    int embed(const VecI& m, int g) const;
    std::pair<VecI, int> unembed(int idx) const;
    std::string label(int idx) const;

    const GModule& module() const { return module_; }
    const Cocycle2& cocycle() const { return cocycle_; }
    const GroupTable& base() const { return *module_.group; }
    GroupRef base_ref() const { return module_.group; }

    bool realizable() const { return order_ <= kDenseTableCap; }
    const GroupTable& realized() const;  // throws beyond the dense cap

    /// Structural generators: module basis vectors over the identity plus
    /// (0, g) for every base group element. They generate the product.
    std::vector<int> structural_generators() const;

private:
    GModule module_;
    Cocycle2 cocycle_;
    std::int64_t order_ = 0;
    int identity_ = 0;
    std::vector<std::int64_t> stride_;
    mutable std::optional<GroupTable> realized_;

    std::int64_t module_index(const VecI& m) const;
    VecI module_vector(std::int64_t idx) const;
};

TwistedProduct twisted_product(GModule module, Cocycle2 psi,
                               std::int64_t order_cap = kTwistedOrderCap);

}  // namespace polgow

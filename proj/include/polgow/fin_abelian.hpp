#pragma once

#include "polgow/snf.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polgow {

/// Finitely generated finite abelian group in invariant-factor form:
/// d1 | d2 | ... | dr with every di >= 2. The empty list is the trivial group.
class FinAbelian {
public:
    FinAbelian() = default;

    /// Canonicalizes an arbitrary list of cyclic orders (>= 1) into the
    /// divisibility chain via primary decomposition.
    static FinAbelian from_factors(const std::vector<std::int64_t>& raw);

    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    std::int64_t order() const;
    int rank() const { return static_cast<int>(factors_.size()); }
    bool trivial() const { return factors_.empty(); }
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    VecI reduce(VecI coords) const;
    VecI zero() const { return VecI::Zero(rank()); }
    VecI add(const VecI& a, const VecI& b) const;
    VecI neg(const VecI& a) const;

    bool operator==(const FinAbelian& o) const { return factors_ == o.factors_; }
    std::string to_string() const;

private:
    std::vector<std::int64_t> factors_;
};

/// prime -> exponents (ascending) of the p-primary cyclic summands
std::map<std::int64_t, std::vector<int>> primary_decomposition(const FinAbelian& g);

FinAbelian tensor(const FinAbelian& a, const FinAbelian& b);

/// Symmetric square with explicit slot bookkeeping. Slot order: diagonal
/// pairs (i,i) for i = 0..r-1 first, then off-diagonal (i,j), i < j,
/// lexicographic. Slot (i,j) has modulus gcd(di, dj).
struct Sym2 {
    FinAbelian base;                            // the input group
    std::vector<std::pair<int, int>> slot_pairs;
    std::vector<std::int64_t> slot_moduli;
    FinAbelian group;                           // canonical view of the result

    int slot(int i, int j) const;
    /// bilinear symmetric product of two base elements, as a Sym^2 element
    VecI product(const VecI& x, const VecI& y) const;
    VecI reduce(VecI v) const;
};

Sym2 sym2(const FinAbelian& a);

}  // namespace polgow

#pragma once

#include "polgow/fin_abelian.hpp"

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polgow {

/// Anything with a finite element set indexed 0..order-1 and group operations.
/// Dense tables and structurally-multiplied groups both satisfy this.
template <class G>
concept FiniteGroupLike = requires(const G& g, int a, int b) {
    { g.order() } -> std::convertible_to<std::int64_t>;
    { g.mult(a, b) } -> std::convertible_to<int>;
    { g.inverse(a) } -> std::convertible_to<int>;
    { g.identity() } -> std::convertible_to<int>;
};

inline constexpr int kDenseTableCap = 4096;     // full Cayley tables beyond this are not materialized
inline constexpr int kExhaustiveAxiomCap = 256; // associativity checked on all triples up to here
inline constexpr int kBruteIsoCap = 128;
inline constexpr int kPermClosureCap = 10000;

/// A finite group as an explicit multiplication table, elements 0..n-1.
class GroupTable {
public:
    GroupTable() = default;
    static GroupTable from_table(int order, int identity, std::vector<std::int32_t> table,
                                 std::vector<std::string> labels = {});

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mult(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
    int inverse(int x) const { return inverse_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const GroupTable& o) const {
        return n_ == o.n_ && identity_ == o.identity_ && table_ == o.table_;
    }

private:
    int n_ = 0;
    int identity_ = 0;
    std::vector<std::int32_t> table_;
    std::vector<std::int32_t> inverse_;
    std::vector<std::string> labels_;
};

struct Subgroup {
    const GroupTable* parent = nullptr;
    std::vector<int> members;  // sorted
    bool contains(int x) const;
};

struct GroupFingerprint {
    std::int64_t order = 1;
    std::vector<std::int64_t> abelian_invariants;
    std::int64_t exponent = 1;
    std::int64_t center_order = 1;
    std::map<std::int64_t, std::int64_t> element_order_histogram;
    bool is_abelian = true;
    bool is_perfect = false;

    bool operator==(const GroupFingerprint&) const = default;
};

// constructions
GroupTable make_cyclic(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable perm_group(const std::vector<std::vector<int>>& generators, int degree,
                      int cap = kPermClosureCap);
GroupTable group_from_abelian(const std::vector<std::int64_t>& cyclic_orders);
std::vector<int> perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

// element helpers
int commutator(const GroupTable& g, int x, int y);                 // x^-1 y^-1 x y
int conjugate_by(const GroupTable& g, int x, int k);               // k^-1 x k
std::int64_t element_order(const GroupTable& g, int x);
bool fingerprint_is_abelian(const GroupTable& g);

// subgroup machinery
Subgroup normal_closure(const GroupTable& g, const std::vector<int>& seeds);

struct QuotientResult {
    GroupTable group;
    std::vector<int> projection;  // element -> coset index
};
QuotientResult quotient(const GroupTable& g, const Subgroup& n);

struct AbelianizationResult {
    FinAbelian group;
    std::vector<VecI> projection;  // element -> coordinates in invariant factors
    std::int64_t derived_order = 1;
};
AbelianizationResult abelianization(const GroupTable& g);

/// Invariant factors of a group already known to be abelian, plus the
/// element -> coordinate map (relation presentation over a greedy
/// generating set, reduced by the Smith machinery).
AbelianizationResult abelian_invariants_of(const GroupTable& g);

int commutator_width(const GroupTable& g);

GroupFingerprint fingerprint(const GroupTable& g);
bool brute_isomorphic(const GroupTable& g, const GroupTable& h);

}  // namespace polgow

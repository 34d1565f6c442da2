#pragma once

#include "polgow/gmodule.hpp"

#include <array>
#include <optional>

namespace polgow {

/// A total map between finite groups, as a value table over the source.
struct GroupMap {
    GroupRef source;
    GroupRef target;
    std::vector<int> values;

    int operator()(int g) const { return values[g]; }
    bool unital() const { return values[source->identity()] == target->identity(); }
};

GroupMap finite_difference(const GroupMap& phi, int k);  // g -> phi(kg) phi(g)^-1
GroupMap translate(const GroupMap& phi, int k);          // g -> phi(kg)
GroupMap beta(const GroupMap& phi, int k);  // g -> phi(k)^-1 phi(kg) phi(g)^-1
bool is_homomorphism(const GroupMap& phi);
bool is_constant(const GroupMap& phi);

/// Degree check per the finite-difference recursion, memoized over distinct
/// difference tables. degree <= -1 means identically 1.
bool degree_at_most(const GroupMap& phi, int d, std::int64_t op_budget = 1000000000);

struct DecomposeResult {
    GroupMap homomorphism;
    int constant;
};
/// phi = psi * c with psi a homomorphism and c = phi(1); errors with a
/// witness pair when phi is not of degree <= 1.
DecomposeResult decompose_degree_one(const GroupMap& phi);

struct TripleWitness {
    bool ok = true;
    std::array<int, 3> witness{-1, -1, -1};
};
/// phi(g1 g2 g3) = phi(g1 g2) phi(g2)^-1 phi(g1)^-1 phi(g1 g3) phi(g3)^-1 phi(g2 g3)
TripleWitness quad_relation_check(const GroupMap& phi);

/// g -> exp(2 pi i exponents(g) / N) on an abelian source.
struct PhaseMap {
    GroupRef source;
    std::int64_t modulus = 1;
    std::vector<std::int64_t> exponents;

    bool unital() const { return exponents[source->identity()] % modulus == 0; }
};

bool phase_is_quadratic(const PhaseMap& q);
bool phase_is_affine(const PhaseMap& q);

/// Brute-force classification of unital quadratic phases: solves the
/// third-difference system over Z/N.
struct QuadOracleResult {
    std::int64_t count = 1;
    FinAbelian structure;
    std::vector<PhaseMap> generators;
    std::vector<std::int64_t> generator_orders;
    std::int64_t modulus = 1;
    bool saturated = true;
};

std::int64_t quad_default_modulus(const FinAbelian& g);
QuadOracleResult enumerate_quad_phase(GroupRef g, std::int64_t modulus = 0);

/// Exhaustive second oracle: enumerates all exponent tables when
/// |G| * log2(N) is small and counts solutions directly.
std::int64_t enumerate_quad_phase_exhaustive(const GroupTable& g, std::int64_t modulus);

/// All elements of the Quad group spanned by oracle generators.
std::vector<PhaseMap> expand_quad_group(const QuadOracleResult& oracle);

}  // namespace polgow

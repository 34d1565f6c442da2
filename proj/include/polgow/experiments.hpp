#pragma once

#include "polgow/gowers.hpp"
#include "polgow/pol2.hpp"

namespace polgow {

struct MetricGroupSpec {
    enum class Kind { unitary_hs, finite_discrete } kind = Kind::unitary_hs;
    int dim = 1;
};

struct DefectSample {
    double value = 0;
    std::vector<int> tuple;
};

struct DefectMode {
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
};

/// max over (d+1)-tuples of the bi-invariant distance of the iterated
/// difference at the identity from the unit.
DefectSample uniform_defect(const MatFunc& phi, int d, const DefectMode& mode,
                            std::int64_t budget = 10000000);
DefectSample uniform_defect_discrete(const GroupMap& phi, int d, const DefectMode& mode,
                                     std::int64_t budget = 10000000);

struct DefectReport {
    int degree = 2;
    double epsilon_d = 0;
    double epsilon_1 = 0;
    double ratio = 0;
    bool exact = false;  // both defects are zero
    int commutator_width = 0;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
};

DefectReport run_stability(const GroupTable& g, const MatFunc& phi, int d,
                           const DefectMode& mode);

struct InverseReport {
    std::string group;
    int n = 1;
    int n_prime = 1;
    int k = 2;
    double norm_k = 0;
    double distance_to_hom = 0;
    double delta = 0;
    std::uint64_t seed = 0;
};

/// Builds phi = exp(delta X_g) rho(g) from a homomorphism rho, computes the
/// exact U^k norm and the squared distance from the unital correction of phi
/// back to rho (witness-based; no search over homomorphisms).
InverseReport run_inverse(const GroupTable& g, const MatFunc& rho, double delta, int k,
                          std::uint64_t seed, std::int64_t budget = kDefaultOpBudget);

/// Gaussian skew-Hermitian perturbation, exp via fixed-length series.
MatFunc perturb_homomorphism(const MatFunc& rho, double delta, std::uint64_t seed);
MatC expm_series(const MatC& x);

/// Homomorphism tables into U(n).
MatFunc identity_rep(GroupRef g);                       // g -> 1 (dim 1)
MatFunc sign_rep_z2(GroupRef z2);                       // Z/2 -> U(1)
MatFunc rotation_rep_cyclic(GroupRef zn, int harmonics);  // Z/n -> U(2) planar rotations

/// The 3-dimensional orthogonal representation of the alternating group on
/// five points, matched against the given table by generator search.
MatFunc icosahedral_rep(GroupRef a5);

bool is_unitary_rep(const MatFunc& rho, double tol = 1e-9);

}  // namespace polgow

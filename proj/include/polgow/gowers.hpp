#pragma once

#include "polgow/maps.hpp"

#include <Eigen/Dense>
#include <complex>
#include <span>

namespace polgow {

using Cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;

/// A total function G -> M_n(C) as dense complex matrices.
struct MatFunc {
    GroupRef group;
    int dim = 1;
    std::vector<MatC> values;

    const MatC& operator()(int g) const { return values[g]; }
};

MatFunc constant_matfunc(GroupRef g, const MatC& value);
MatFunc phase_to_matfunc(const PhaseMap& q);
/// h -> f(gh) f(h)^*
MatFunc delta(const MatFunc& f, int g);

/// Deterministic balanced-tree accumulator: feeding values in a fixed order
/// yields a bit-stable sum independent of chunking.
template <class T>
class PairwiseSum {
public:
    void add(T v) {
        int level = 0;
        while (level < static_cast<int>(filled_.size()) && filled_[level]) {
            v += stack_[level];
            filled_[level] = false;
            ++level;
        }
        if (level == static_cast<int>(filled_.size())) {
            stack_.push_back(v);
            filled_.push_back(true);
        } else {
            stack_[level] = v;
            filled_[level] = true;
        }
    }
    T total() const {
        T acc{};
        for (std::size_t i = 0; i < stack_.size(); ++i)
            if (filled_[i]) acc += stack_[i];
        return acc;
    }

private:
    std::vector<T> stack_;
    std::vector<char> filled_;
};

inline constexpr int kCubeCap = 6;

/// Cube word lists c_k: 2^k words, each a sequence of variable indices
/// (1-based) multiplied left to right.
struct CubeList {
    int k = 0;
    std::vector<std::vector<int>> words;
};
CubeList cube_words(int k);
std::vector<int> cube_eval(const CubeList& c, const GroupTable& g,
                           const std::vector<int>& gs, int g0);

/// Total assignments {1..2^k} -> {1..2^k} with the appendix transforms.
struct IndexAssignment {
    int k = 0;
    std::vector<int> map;  // 1-based values, index 0 unused slot dropped: map[i] for i in 0..2^k-1 holds a(i+1)

    int operator()(int i) const { return map[i - 1]; }
    static IndexAssignment identity_assignment(int k);
    bool operator==(const IndexAssignment&) const = default;
};
enum class IndexTransform { L, R, S, Bar };
IndexAssignment index_transform(const IndexAssignment& a, IndexTransform which);
bool self_barred(const IndexAssignment& a);  // a == bar-symmetric pairing

struct GowersReport {
    double norm = 0;
    double pow_value = 0;  // pre-root mean
    double imag_residual = 0;
    std::int64_t budget_used = 0;
};

inline constexpr std::int64_t kDefaultOpBudget = 1000000000;

GowersReport gowers_norm_exact_report(const MatFunc& f, int k,
                                      std::int64_t budget = kDefaultOpBudget);
double gowers_norm_exact(const MatFunc& f, int k, std::int64_t budget = kDefaultOpBudget);

Cplx gowers_inner(std::span<const MatFunc> fs, std::int64_t budget = kDefaultOpBudget);
Cplx gowers_inner_assigned(std::span<const MatFunc> fs, const IndexAssignment& a,
                           std::int64_t budget = kDefaultOpBudget);

struct McReport {
    double estimate = 0;       // signed 2^k-th root of the mean
    double mean = 0;           // pre-root sample mean
    double stderr_mean = 0;    // standard error of the pre-root mean
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};
McReport gowers_norm_mc(const MatFunc& f, int k, std::int64_t samples, std::uint64_t seed);

double u2_quadruple_form(const MatFunc& f, std::int64_t budget = kDefaultOpBudget);

/// Unitary polar factor; near-singular directions are completed so the
/// result acts like the identity on the degenerate complement.
MatC polar_unitarize(const MatC& v);

double hs_norm_sq(const MatC& a);                       // (1/n) sum |a_ij|^2
double hs_distance_sq(const MatFunc& f, const MatFunc& g);  // E_g, with (+) identity padding
MatFunc nearest_unital(const MatFunc& f);

}  // namespace polgow

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <vector>

namespace polgow {

// Exact integer scalar. All elimination steps in the Smith reduction run on
// arbitrary-precision values; results are converted back to machine words.
using Int = boost::multiprecision::cpp_int;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline bool vec_nonzero(const VecI& v) { return (v.array() != 0).any(); }

IntMatrix to_int_matrix(const MatI& m);
std::int64_t to_int64(const Int& v);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Exact determinant (fraction-free elimination).
Int det_exact(const IntMatrix& m);

/// Cokernel Z^k / rowspan(R) of an integer relation matrix (relations as rows).
/// `factors` lists the nontrivial cyclic orders in divisibility-chain order
/// (a factor 0 denotes a free summand). `project` maps a word over the k
/// original generators to coordinates in the factor decomposition.
class Cokernel {
public:
    Cokernel(std::vector<std::int64_t> factors, MatI v, std::vector<int> slots,
             int num_generators);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    VecI project(const VecI& word) const;
    int num_generators() const { return num_generators_; }

private:
    std::vector<std::int64_t> factors_;
    MatI v_;                  // column transform from SNF
    std::vector<int> slots_;  // columns of v_ carrying nontrivial factors
    int num_generators_;
};

Cokernel cokernel(const IntMatrix& relations, int num_generators);

/// Solution group {x in (Z/N)^k : A x == 0 mod N} described as an abstract
/// finite abelian group together with generator vectors mod N.
struct ModKernel {
    std::vector<std::int64_t> cyclic_orders;  // order of each generator (>= 1)
    std::vector<VecI> generators;             // one vector mod N per order > 1
    std::int64_t count() const;               // total number of solutions
};

ModKernel solve_linear_mod(const IntMatrix& a, std::int64_t n);

}  // namespace polgow

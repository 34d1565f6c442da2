#include "polgow/snf.hpp"

#include <limits>
#include <stdexcept>

namespace polgow {

IntMatrix to_int_matrix(const MatI& m) {
    IntMatrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Int(m(i, j));
    return r;
}

std::int64_t to_int64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer result does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// floor-free symmetric remainder keeps pivots small
Int round_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    Int hb = abs_int(b);
    if (2 * abs_int(r) > hb) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    SmithResult res;
    res.d = m;
    res.u = IntMatrix::Zero(rows, rows);
    res.v = IntMatrix::Zero(cols, cols);
    for (Eigen::Index i = 0; i < rows; ++i) res.u(i, i) = 1;
    for (Eigen::Index j = 0; j < cols; ++j) res.v(j, j) = 1;
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const Eigen::Index t_max = std::min(rows, cols);
    for (Eigen::Index t = 0; t < t_max; ++t) {
        // locate a pivot of minimal absolute value in the trailing block
        Eigen::Index pr = -1, pc = -1;
        Int best = 0;
        for (Eigen::Index i = t; i < rows; ++i)
            for (Eigen::Index j = t; j < cols; ++j) {
                if (d(i, j) == 0) continue;
                Int a = abs_int(d(i, j));
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // block is zero
        d.row(t).swap(d.row(pr));
        u.row(t).swap(u.row(pr));
        d.col(t).swap(d.col(pc));
        v.col(t).swap(v.col(pc));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = round_div(d(i, t), d(t, t));
                if (q != 0) {
                    d.row(i) -= q * d.row(t);
                    u.row(i) -= q * u.row(t);
                }
                if (d(i, t) != 0) {  // remainder smaller than pivot: swap up
                    d.row(t).swap(d.row(i));
                    u.row(t).swap(u.row(i));
                    clean = false;
                }
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = round_div(d(t, j), d(t, t));
                if (q != 0) {
                    d.col(j) -= q * d.col(t);
                    v.col(j) -= q * v.col(t);
                }
                if (d(t, j) != 0) {
                    d.col(t).swap(d.col(j));
                    v.col(t).swap(v.col(j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry; if not, fold the
            // offending row in and restart the reduction of this block
            for (Eigen::Index i = t + 1; i < rows && clean; ++i)
                for (Eigen::Index j = t + 1; j < cols && clean; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.row(t) += d.row(i);
                        u.row(t) += u.row(i);
                        clean = false;
                    }
        }
        if (d(t, t) < 0) {
            d.row(t) = -d.row(t);
            u.row(t) = -u.row(t);
        }
    }
    return res;
}

Int det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (Eigen::Index t = 0; t < n - 1; ++t) {
        if (a(t, t) == 0) {
            Eigen::Index p = -1;
            for (Eigen::Index i = t + 1; i < n; ++i)
                if (a(i, t) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.row(t).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = t + 1; i < n; ++i) {
            for (Eigen::Index j = t + 1; j < n; ++j)
                a(i, j) = (a(t, t) * a(i, j) - a(i, t) * a(t, j)) / prev;
            a(i, t) = 0;
        }
        prev = a(t, t);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Cokernel::Cokernel(std::vector<std::int64_t> factors, MatI v, std::vector<int> slots,
                   int num_generators)
    : factors_(std::move(factors)),
      v_(std::move(v)),
      slots_(std::move(slots)),
      num_generators_(num_generators) {}

VecI Cokernel::project(const VecI& word) const {
    if (word.size() != num_generators_)
        throw std::invalid_argument("word length does not match generator count");
    VecI out(static_cast<Eigen::Index>(slots_.size()));
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        std::int64_t acc = 0;
        const std::int64_t mod = factors_[s];
        for (Eigen::Index i = 0; i < word.size(); ++i) {
            std::int64_t a = ((word[i] % mod) + mod) % mod;
            std::int64_t b = ((v_(i, slots_[s]) % mod) + mod) % mod;
            acc = (acc + a * b) % mod;
        }
        out[static_cast<Eigen::Index>(s)] = acc;
    }
    return out;
}

Cokernel cokernel(const IntMatrix& relations, int num_generators) {
    if (relations.cols() != num_generators)
        throw std::invalid_argument("relation width does not match generator count");
    SmithResult snf = smith_normal_form(relations);
    std::vector<std::int64_t> factors;
    std::vector<int> slots;
    const Eigen::Index r = std::min(relations.rows(), relations.cols());
    for (Eigen::Index j = 0; j < num_generators; ++j) {
        Int dj = j < r ? snf.d(j, j) : Int(0);
        if (dj == 1) continue;
        if (dj == 0)
            throw std::domain_error("cokernel has a free summand; group is infinite");
        factors.push_back(to_int64(dj));
        slots.push_back(static_cast<int>(j));
    }
    MatI v(num_generators, num_generators);
    for (int i = 0; i < num_generators; ++i)
        for (int j = 0; j < num_generators; ++j) v(i, j) = to_int64(snf.v(i, j));
    return Cokernel(std::move(factors), std::move(v), std::move(slots), num_generators);
}

std::int64_t ModKernel::count() const {
    std::int64_t c = 1;
    for (std::int64_t o : cyclic_orders) c *= o;
    return c;
}

ModKernel solve_linear_mod(const IntMatrix& a, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("modulus must be >= 1");
    const Eigen::Index k = a.cols();
    SmithResult snf = smith_normal_form(a);
    const Eigen::Index r = std::min(a.rows(), a.cols());

    ModKernel out;
    for (Eigen::Index j = 0; j < k; ++j) {
        Int sj = j < r ? snf.d(j, j) : Int(0);
        Int g = sj == 0 ? Int(n) : boost::multiprecision::gcd(Int(sj), Int(n));
        std::int64_t order = to_int64(g);
        std::int64_t step = n / order;  // y_j must be a multiple of n/gcd
        if (order == 1) continue;
        VecI gen(k);
        for (Eigen::Index i = 0; i < k; ++i) {
            Int c = snf.v(i, j) * step;
            std::int64_t cv = to_int64(c % n);
            gen[i] = (cv % n + n) % n;
        }
        out.cyclic_orders.push_back(order);
        out.generators.push_back(std::move(gen));
    }
    return out;
}

}  // namespace polgow

#include "polgow/fin_abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polgow {

namespace {

std::map<std::int64_t, std::vector<int>> factor_prime_powers(
    const std::vector<std::int64_t>& raw) {
    std::map<std::int64_t, std::vector<int>> primary;
    for (std::int64_t d : raw) {
        if (d < 1) throw std::invalid_argument("cyclic order must be >= 1");
        std::int64_t rest = d;
        for (std::int64_t p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            primary[p].push_back(e);
        }
        if (rest > 1) primary[rest].push_back(1);
    }
    for (auto& [p, es] : primary) std::sort(es.begin(), es.end());
    return primary;
}

}  // namespace

FinAbelian FinAbelian::from_factors(const std::vector<std::int64_t>& raw) {
    auto primary = factor_prime_powers(raw);
    std::size_t chain_len = 0;
    for (auto& [p, es] : primary) chain_len = std::max(chain_len, es.size());
    FinAbelian out;
    out.factors_.assign(chain_len, 1);
    // largest prime powers multiply into the last factor, and so on down
    for (auto& [p, es] : primary)
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::int64_t pw = 1;
            for (int e = 0; e < es[es.size() - 1 - i]; ++e) pw *= p;
            out.factors_[chain_len - 1 - i] *= pw;
        }
    std::erase(out.factors_, 1);
    return out;
}

std::int64_t FinAbelian::order() const {
    std::int64_t o = 1;
    for (std::int64_t d : factors_) o *= d;
    return o;
}

VecI FinAbelian::reduce(VecI coords) const {
    if (coords.size() != rank()) throw std::invalid_argument("coordinate rank mismatch");
    for (int i = 0; i < rank(); ++i) {
        std::int64_t d = factors_[i];
        coords[i] = ((coords[i] % d) + d) % d;
    }
    return coords;
}

VecI FinAbelian::add(const VecI& a, const VecI& b) const { return reduce(a + b); }

VecI FinAbelian::neg(const VecI& a) const { return reduce(-a); }

std::string FinAbelian::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " + ";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

std::map<std::int64_t, std::vector<int>> primary_decomposition(const FinAbelian& g) {
    return factor_prime_powers(g.invariant_factors());
}

FinAbelian tensor(const FinAbelian& a, const FinAbelian& b) {
    std::vector<std::int64_t> parts;
    for (std::int64_t d : a.invariant_factors())
        for (std::int64_t e : b.invariant_factors())
            parts.push_back(std::gcd(d, e));
    return FinAbelian::from_factors(parts);
}

int Sym2::slot(int i, int j) const {
    const int r = base.rank();
    if (i > j) std::swap(i, j);
    if (i == j) return i;
    // off-diagonal block, lexicographic (i, j) with i < j
    int idx = r;
    for (int a = 0; a < i; ++a) idx += r - 1 - a;
    return idx + (j - i - 1);
}

VecI Sym2::reduce(VecI v) const {
    for (Eigen::Index s = 0; s < v.size(); ++s) {
        std::int64_t m = slot_moduli[s];
        v[s] = ((v[s] % m) + m) % m;
    }
    return v;
}

VecI Sym2::product(const VecI& x, const VecI& y) const {
    const int r = base.rank();
    VecI out = VecI::Zero(static_cast<Eigen::Index>(slot_moduli.size()));
    for (int i = 0; i < r; ++i) out[slot(i, i)] = x[i] * y[i];
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) out[slot(i, j)] = x[i] * y[j] + x[j] * y[i];
    return reduce(std::move(out));
}

Sym2 sym2(const FinAbelian& a) {
    Sym2 s;
    s.base = a;
    const auto& d = a.invariant_factors();
    const int r = a.rank();
    for (int i = 0; i < r; ++i) {
        s.slot_pairs.emplace_back(i, i);
        s.slot_moduli.push_back(d[i]);
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            s.slot_pairs.emplace_back(i, j);
            s.slot_moduli.push_back(std::gcd(d[i], d[j]));
        }
    s.group = FinAbelian::from_factors(s.slot_moduli);
    return s;
}

}  // namespace polgow

#include "polgow/free_word.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polgow {

namespace {

void push_reduced(std::vector<FreeWord::Letter>& out, FreeWord::Letter l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

FreeWord FreeWord::from_string(const std::string& s) {
    FreeWord w;
    for (char c : s) {
        if (c >= 'a' && c <= 'z')
            push_reduced(w.letters, {c - 'a', +1});
        else if (c >= 'A' && c <= 'Z')
            push_reduced(w.letters, {c - 'A', -1});
        else if (c != ' ')
            throw std::invalid_argument("bad word character");
    }
    return w;
}

std::string FreeWord::to_string() const {
    std::string s;
    for (const Letter& l : letters)
        s.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.gen));
    return s.empty() ? "1" : s;
}

FreeWord word_mul(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    for (const auto& l : b.letters) push_reduced(w.letters, l);
    return w;
}

FreeWord word_inv(const FreeWord& a) {
    FreeWord w;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
        w.letters.push_back({it->gen, -it->sign});
    return w;
}

FreeWord random_word(std::mt19937_64& rng, int num_gens, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, num_gens - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    FreeWord w;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) push_reduced(w.letters, {gen(rng), sgn(rng) ? +1 : -1});
    return w;
}

std::int64_t exotic_free_word_eval(const FreeWord& w) {
    // left-to-right scan; B tracks the signed count of b's seen so far
    std::int64_t b_sum = 0, value = 0;
    for (const auto& l : w.letters) {
        if (l.gen == 1)
            b_sum += l.sign;
        else if (l.gen == 0)
            value += l.sign * b_sum;
        else
            throw std::invalid_argument("the exotic map is defined on two generators");
    }
    return value;
}

Rat Rat::mod1(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    std::int64_t g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num %= den;
    if (num < 0) num += den;
    return Rat{num, den};
}

Rat Rat::operator+(const Rat& o) const {
    std::int64_t l = std::lcm(den, o.den);
    return mod1(num * (l / den) + o.num * (l / o.den), l);
}

Rat Rat::operator-(const Rat& o) const {
    std::int64_t l = std::lcm(den, o.den);
    return mod1(num * (l / den) - o.num * (l / o.den), l);
}

std::vector<std::vector<int>> TaylorQuadratic::index_set(int dim) {
    std::vector<std::vector<int>> idx;
    // |j| = 1 first, then |j| = 2, lexicographic within each block
    for (int i = 0; i < dim; ++i) {
        std::vector<int> j(dim, 0);
        j[i] = 1;
        idx.push_back(j);
    }
    for (int i = 0; i < dim; ++i) {
        std::vector<int> j(dim, 0);
        j[i] = 2;
        idx.push_back(j);
    }
    for (int i = 0; i < dim; ++i)
        for (int k = i + 1; k < dim; ++k) {
            std::vector<int> j(dim, 0);
            j[i] = 1;
            j[k] = 1;
            idx.push_back(j);
        }
    return idx;
}

TaylorQuadratic TaylorQuadratic::make(int dim, const std::vector<Rat>& coeffs) {
    TaylorQuadratic q;
    q.dim = dim;
    q.indices = index_set(dim);
    if (coeffs.size() != q.indices.size())
        throw std::invalid_argument("need (d^2+3d)/2 coefficients");
    q.coeffs = coeffs;
    return q;
}

namespace {

std::int64_t binom(std::int64_t n, int k) {
    if (k == 0) return 1;
    if (k == 1) return n;
    if (k == 2) return n * (n - 1) / 2;
    throw std::invalid_argument("only quadratic multi-indices are supported");
}

}  // namespace

Rat TaylorQuadratic::eval(const std::vector<std::int64_t>& n) const {
    if (static_cast<int>(n.size()) != dim) throw std::invalid_argument("dimension mismatch");
    Rat acc{0, 1};
    for (std::size_t t = 0; t < indices.size(); ++t) {
        std::int64_t b = 1;
        for (int i = 0; i < dim; ++i) b *= binom(n[i], indices[t][i]);
        std::int64_t bm = ((b % coeffs[t].den) + coeffs[t].den) % coeffs[t].den;
        acc = acc + Rat::mod1(coeffs[t].num * bm, coeffs[t].den);
    }
    return acc;
}

SampledDegreeReport sampled_degree_check_words(int d, int trials, std::uint64_t seed,
                                               int max_len) {
    std::mt19937_64 rng(seed);
    SampledDegreeReport rep;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        std::vector<FreeWord> shifts(d + 1);
        for (auto& w : shifts) w = random_word(rng, 2, max_len);
        FreeWord base = random_word(rng, 2, max_len);
        // (d+1)-fold difference of the Z-valued map at base
        std::int64_t total = 0;
        const int m = d + 1;
        for (int mask = 0; mask < (1 << m); ++mask) {
            FreeWord arg = base;
            int bits = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) {
                    arg = word_mul(shifts[i], arg);
                    ++bits;
                }
            std::int64_t sign = ((m - bits) % 2 == 0) ? 1 : -1;
            total += sign * exotic_free_word_eval(arg);
        }
        if (total != 0) {
            rep.ok = false;
            std::ostringstream os;
            os << "difference " << total << " at base " << base.to_string() << " shifts";
            for (const auto& w : shifts) os << " " << w.to_string();
            rep.witness = os.str();
            return rep;
        }
    }
    return rep;
}

SampledDegreeReport sampled_degree_check_taylor(const TaylorQuadratic& q, int d, int trials,
                                                std::uint64_t seed, int box) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-box, box);
    SampledDegreeReport rep;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        const int m = d + 1;
        std::vector<std::vector<std::int64_t>> shifts(m, std::vector<std::int64_t>(q.dim));
        std::vector<std::int64_t> base(q.dim);
        for (auto& s : shifts)
            for (auto& v : s) v = coord(rng);
        for (auto& v : base) v = coord(rng);
        Rat total{0, 1};
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<std::int64_t> arg = base;
            int bits = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) {
                    for (int j = 0; j < q.dim; ++j) arg[j] += shifts[i][j];
                    ++bits;
                }
            Rat v = q.eval(arg);
            total = ((m - bits) % 2 == 0) ? total + v : total - v;
        }
        if (!total.zero()) {
            std::ostringstream os;
            os << "difference " << total.num << "/" << total.den << " at trial " << t;
            rep.ok = false;
            rep.witness = os.str();
            return rep;
        }
    }
    return rep;
}

}  // namespace polgow

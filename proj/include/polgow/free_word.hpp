#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace polgow {

/// A reduced word in a free group: letters (generator index, sign).
struct FreeWord {
    struct Letter {
        int gen;
        int sign;  // +1 or -1
        bool operator==(const Letter&) const = default;
    };
    std::vector<Letter> letters;

    bool operator==(const FreeWord&) const = default;
    static FreeWord from_string(const std::string& s);  // e.g. "abA" with A = a^-1
    std::string to_string() const;
};

FreeWord word_mul(const FreeWord& a, const FreeWord& b);
FreeWord word_inv(const FreeWord& a);
FreeWord random_word(std::mt19937_64& rng, int num_gens, int max_len);

/// Counts b-letters to the left of a-letters with signs: the value of
/// sum_{i<j} m_i n_j on normal forms a^{n_1} b^{m_1} ... a^{n_k} b^{m_k}.
std::int64_t exotic_free_word_eval(const FreeWord& w);

/// Exact rational residue class mod 1.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rat mod1(std::int64_t num, std::int64_t den);
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    bool zero() const { return num == 0; }
    bool operator==(const Rat&) const = default;
};

/// Quadratic character exponents on Z^d: coefficients over the multi-index
/// set { j : 1 <= |j| <= 2 }, evaluated as sum_j c_j * prod_i binom(n_i, j_i).
struct TaylorQuadratic {
    int dim = 1;
    std::vector<std::vector<int>> indices;  // each of length dim
    std::vector<Rat> coeffs;

    static TaylorQuadratic make(int dim, const std::vector<Rat>& coeffs_in_index_order);
    static std::vector<std::vector<int>> index_set(int dim);
    Rat eval(const std::vector<std::int64_t>& n) const;
};

struct SampledDegreeReport {
    bool ok = true;
    std::string witness;
    std::uint64_t seed = 0;
};

/// Checks (d+1)-fold differences of the exotic map on random word tuples.
SampledDegreeReport sampled_degree_check_words(int d, int trials, std::uint64_t seed,
                                               int max_len = 8);

/// Same for a Taylor quadratic on Z^dim, arguments drawn from [-box, box].
SampledDegreeReport sampled_degree_check_taylor(const TaylorQuadratic& q, int d, int trials,
                                                std::uint64_t seed, int box = 20);

}  // namespace polgow

#include "polgow/group_table.hpp"
#include "polgow/group_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace polgow {

namespace {

void check_axioms(int n, int identity, const std::vector<std::int32_t>& table) {
    auto at = [&](int x, int y) { return table[static_cast<std::size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x)
        if (at(identity, x) != x || at(x, identity) != x)
            throw std::invalid_argument("identity axiom fails at element " + std::to_string(x));
    for (int x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n; ++y)
            if (at(x, y) == identity && at(y, x) == identity) {
                has_inverse = true;
                break;
            }
        if (!has_inverse)
            throw std::invalid_argument("no inverse for element " + std::to_string(x));
    }
    if (n <= kExhaustiveAxiomCap) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (at(at(x, y), z) != at(x, at(y, z)))
                        throw std::invalid_argument("associativity fails");
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 1000; ++t) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            if (at(at(x, y), z) != at(x, at(y, z)))
                throw std::invalid_argument("associativity fails (sampled)");
        }
    }
}

}  // namespace

GroupTable GroupTable::from_table(int order, int identity, std::vector<std::int32_t> table,
                                  std::vector<std::string> labels) {
    if (order < 1) throw std::invalid_argument("group order must be >= 1");
    if (table.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument("table size mismatch");
    for (std::int32_t v : table)
        if (v < 0 || v >= order) throw std::invalid_argument("table entry out of range");
    check_axioms(order, identity, table);
    GroupTable g;
    g.n_ = order;
    g.identity_ = identity;
    g.table_ = std::move(table);
    g.inverse_.resize(order);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            if (g.mult(x, y) == identity && g.mult(y, x) == identity) {
                g.inverse_[x] = y;
                break;
            }
    if (!labels.empty()) g.set_labels(std::move(labels));
    return g;
}

void GroupTable::set_labels(std::vector<std::string> labels) {
    if (labels.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("label count mismatch");
    labels_ = std::move(labels);
}

bool Subgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

GroupTable make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return GroupTable::from_table(n, 0, std::move(table), std::move(labels));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    const int na = a.order(), nb = b.order();
    const std::int64_t n = static_cast<std::int64_t>(na) * nb;
    if (n > kDenseTableCap)
        throw std::domain_error("direct product order exceeds the dense table cap");
    auto idx = [&](int x, int y) { return x * nb + y; };
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    table[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a.mult(x1, x2), b.mult(y1, y2));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    const bool have = !a.labels().empty() && !b.labels().empty();
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            labels[static_cast<std::size_t>(idx(x, y))] =
                have ? "(" + a.labels()[x] + "," + b.labels()[y] + ")"
                     : std::to_string(idx(x, y));
    return GroupTable::from_table(static_cast<int>(n), idx(a.identity(), b.identity()),
                                  std::move(table), std::move(labels));
}

GroupTable group_from_abelian(const std::vector<std::int64_t>& cyclic_orders) {
    GroupTable g = make_cyclic(1);
    for (std::int64_t d : cyclic_orders) g = direct_product(g, make_cyclic(static_cast<int>(d)));
    return g;
}

std::vector<int> perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

GroupTable perm_group(const std::vector<std::vector<int>>& generators, int degree, int cap) {
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw std::invalid_argument("generator degree mismatch");
        std::vector<char> hit(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || hit[v])
                throw std::invalid_argument("generator is not a bijection");
            hit[v] = 1;
        }
    }
    auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
        return r;
    };
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (const auto& gen : generators) {
            auto y = compose(elems[x], gen);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                if (static_cast<int>(elems.size()) >= cap)
                    throw std::domain_error("permutation closure exceeds cap of " +
                                            std::to_string(cap));
                elems.push_back(y);
                queue.push_back(static_cast<int>(elems.size()) - 1);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    if (n > kDenseTableCap)
        throw std::domain_error("permutation group order exceeds the dense table cap");
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i) * n + j] = index.at(compose(elems[i], elems[j]));
    return GroupTable::from_table(n, 0, std::move(table));
}

int commutator(const GroupTable& g, int x, int y) {
    return g.mult(g.mult(g.inverse(x), g.inverse(y)), g.mult(x, y));
}

bool fingerprint_is_abelian(const GroupTable& g) {
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (g.mult(x, y) != g.mult(y, x)) return false;
    return true;
}

int conjugate_by(const GroupTable& g, int x, int k) {
    return g.mult(g.inverse(k), g.mult(x, k));
}

std::int64_t element_order(const GroupTable& g, int x) { return element_order_of(g, x); }

namespace {

std::vector<int> all_elements(const GroupTable& g) {
    std::vector<int> v(g.order());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

Subgroup normal_closure(const GroupTable& g, const std::vector<int>& seeds) {
    Subgroup s;
    s.parent = &g;
    s.members = normal_closure_members(g, seeds, all_elements(g));
    return s;
}

QuotientResult quotient(const GroupTable& g, const Subgroup& n) {
    if (n.parent != &g) throw std::invalid_argument("subgroup belongs to another group");
    return quotient_by_members(g, n.members, all_elements(g));
}

AbelianizationResult abelian_invariants_of(const GroupTable& g) {
    // greedy generating set
    std::vector<int> gens;
    std::vector<int> span{g.identity()};
    while (static_cast<int>(span.size()) < g.order()) {
        int pick = -1;
        std::vector<char> in(g.order(), 0);
        for (int m : span) in[m] = 1;
        for (int x = 0; x < g.order(); ++x)
            if (!in[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        span = closure_subgroup(g, gens);
    }
    const int k = static_cast<int>(gens.size());

    // spanning words: one exponent vector per element, built by BFS
    std::vector<VecI> word(g.order(), VecI());
    word[g.identity()] = VecI::Zero(k);
    std::deque<int> queue{g.identity()};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int i = 0; i < k; ++i) {
            int y = g.mult(x, gens[i]);
            if (word[y].size() == 0 && y != g.identity()) {
                word[y] = word[x];
                word[y][i] += 1;
                queue.push_back(y);
            }
        }
    }

    // relation lattice: tree-edge relations word(x) + e_i - word(x * gen_i)
    IntMatrix rel(static_cast<Eigen::Index>(g.order()) * k, k);
    Eigen::Index row = 0;
    for (int x = 0; x < g.order(); ++x)
        for (int i = 0; i < k; ++i, ++row) {
            int y = g.mult(x, gens[i]);
            for (int j = 0; j < k; ++j)
                rel(row, j) = Int(word[x][j] - word[y][j] + (i == j ? 1 : 0));
        }
    Cokernel cok = cokernel(rel, k);

    AbelianizationResult out;
    out.group = FinAbelian::from_factors(cok.factors());
    out.derived_order = 1;
    out.projection.resize(g.order());
    for (int x = 0; x < g.order(); ++x) out.projection[x] = cok.project(word[x]);
    return out;
}

AbelianizationResult abelianization(const GroupTable& g) {
    std::vector<int> comms;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) comms.push_back(commutator(g, x, y));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Subgroup derived = normal_closure(g, comms);
    QuotientResult q = quotient(g, derived);
    AbelianizationResult ab = abelian_invariants_of(q.group);

    AbelianizationResult out;
    out.group = ab.group;
    out.derived_order = static_cast<std::int64_t>(derived.members.size());
    out.projection.resize(g.order());
    for (int x = 0; x < g.order(); ++x) out.projection[x] = ab.projection[q.projection[x]];
    return out;
}

int commutator_width(const GroupTable& g) {
    AbelianizationResult ab = abelianization(g);
    if (!ab.group.trivial())
        throw std::domain_error("commutator width requires a perfect group");
    if (g.order() == 1) return 0;

    std::vector<char> comm_set(g.order(), 0);
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) comm_set[commutator(g, x, y)] = 1;
    std::vector<int> comms;
    for (int x = 0; x < g.order(); ++x)
        if (comm_set[x]) comms.push_back(x);

    std::vector<char> reach = comm_set;
    int width = 1;
    auto full = [&](const std::vector<char>& v) {
        return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
    };
    while (!full(reach)) {
        std::vector<char> next(g.order(), 0);
        for (int x = 0; x < g.order(); ++x) {
            if (!reach[x]) continue;
            for (int c : comms) next[g.mult(x, c)] = 1;
        }
        reach = std::move(next);
        ++width;
        if (width > g.order()) throw std::logic_error("commutator width did not stabilize");
    }
    return width;
}

GroupFingerprint fingerprint(const GroupTable& g) {
    GroupFingerprint fp;
    fp.order = g.order();
    std::int64_t exponent = 1;
    for (int x = 0; x < g.order(); ++x) {
        std::int64_t o = element_order(g, x);
        fp.element_order_histogram[o] += 1;
        exponent = std::lcm(exponent, o);
    }
    fp.exponent = exponent;
    fp.center_order = 0;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            if (g.mult(x, y) != g.mult(y, x)) central = false;
        if (central) fp.center_order += 1;
    }
    fp.is_abelian = fp.center_order == g.order();
    AbelianizationResult ab = abelianization(g);
    fp.abelian_invariants = ab.group.invariant_factors();
    fp.is_perfect = ab.group.trivial();
    return fp;
}

namespace {

struct IsoSearch {
    const GroupTable& g;
    const GroupTable& h;
    std::vector<int> gens;
    std::vector<std::int64_t> g_orders;
    std::vector<std::int64_t> h_orders;

    // Extends the partial generator image; the span of the assigned
    // generators is rebuilt with its image map and every product is
    // cross-checked, so inconsistent branches die early.
    bool extend(std::size_t level, std::vector<int>& image) {
        if (!consistent(level, image)) return false;
        if (level == gens.size()) return true;
        for (int cand = 0; cand < h.order(); ++cand) {
            if (h_orders[cand] != g_orders[gens[level]]) continue;
            image[level] = cand;
            if (extend(level + 1, image)) return true;
        }
        return false;
    }

    bool consistent(std::size_t level, const std::vector<int>& image) const {
        std::vector<int> f(g.order(), -1);
        std::vector<char> hit(h.order(), 0);
        f[g.identity()] = h.identity();
        hit[h.identity()] = 1;
        std::vector<int> span{g.identity()};
        std::deque<int> queue{g.identity()};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < level; ++i) {
                int y = g.mult(x, gens[i]);
                int fy = h.mult(f[x], image[i]);
                if (f[y] < 0) {
                    if (hit[fy]) return false;  // not injective
                    f[y] = fy;
                    hit[fy] = 1;
                    span.push_back(y);
                    queue.push_back(y);
                } else if (f[y] != fy) {
                    return false;
                }
            }
        }
        for (int x : span)
            for (int y : span)
                if (f[g.mult(x, y)] < 0 || f[g.mult(x, y)] != h.mult(f[x], f[y])) return false;
        return true;
    }
};

}  // namespace

bool brute_isomorphic(const GroupTable& g, const GroupTable& h) {
    if (g.order() != h.order()) return false;
    if (g.order() > kBruteIsoCap)
        throw std::domain_error("brute isomorphism capped at order " +
                                std::to_string(kBruteIsoCap) + "; compare fingerprints instead");
    std::map<std::int64_t, std::int64_t> go, ho;
    std::vector<std::int64_t> g_orders(g.order()), h_orders(h.order());
    for (int x = 0; x < g.order(); ++x) go[g_orders[x] = element_order(g, x)] += 1;
    for (int x = 0; x < h.order(); ++x) ho[h_orders[x] = element_order(h, x)] += 1;
    if (go != ho) return false;

    const bool g_ab = fingerprint_is_abelian(g), h_ab = fingerprint_is_abelian(h);
    if (g_ab != h_ab) return false;
    if (g_ab)
        return abelian_invariants_of(g).group == abelian_invariants_of(h).group;

    IsoSearch search{g, h, {}, std::move(g_orders), std::move(h_orders)};
    std::vector<int> span{g.identity()};
    std::vector<char> have(g.order(), 0);
    have[g.identity()] = 1;
    while (static_cast<int>(span.size()) < g.order()) {
        int pick = -1;
        for (int x = 0; x < g.order(); ++x)
            if (!have[x]) {
                pick = x;
                break;
            }
        search.gens.push_back(pick);
        span = closure_subgroup(g, search.gens);
        std::fill(have.begin(), have.end(), 0);
        for (int x : span) have[x] = 1;
    }
    std::vector<int> image(search.gens.size());
    return search.extend(0, image);
}

}  // namespace polgow

#include "polgow/experiments.hpp"
#include "polgow/group_algorithms.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace polgow {

namespace {

// Delta_{g_1..g_m} phi(1) via the inclusion-exclusion cube product; phi is
// assumed unitary-valued so inverses are adjoints.
MatC iterated_difference_at_identity(const MatFunc& phi, const std::vector<int>& gs) {
    const int m = static_cast<int>(gs.size());
    CubeList cube = cube_words(m);
    const GroupTable& g = *phi.group;
    std::vector<int> elems = cube_eval(cube, g, gs, g.identity());
    MatC prod = MatC::Identity(phi.dim, phi.dim);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const MatC& v = phi(elems[i]);
        if (i % 2 == 0)
            prod *= v;
        else
            prod *= v.adjoint();
    }
    return prod;
}

int discrete_iterated_difference_at_identity(const GroupMap& phi, const std::vector<int>& gs) {
    const GroupTable& s = *phi.source;
    const GroupTable& t = *phi.target;
    CubeList cube = cube_words(static_cast<int>(gs.size()));
    std::vector<int> elems = cube_eval(cube, s, gs, s.identity());
    int prod = t.identity();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        int v = phi(elems[i]);
        prod = t.mult(prod, i % 2 == 0 ? v : t.inverse(v));
    }
    return prod;
}

template <class Eval>
DefectSample defect_scan(const GroupTable& g, int arity, const DefectMode& mode,
                         std::int64_t budget, Eval&& eval) {
    DefectSample best;
    best.tuple.assign(arity, g.identity());
    if (mode.exhaustive) {
        std::int64_t tuples = 1;
        for (int i = 0; i < arity; ++i) tuples *= g.order();
        if (tuples > budget) throw std::domain_error("exhaustive defect scan exceeds budget");
        std::vector<int> gs(arity, 0);
        for (;;) {
            double v = eval(gs);
            if (v > best.value) {
                best.value = v;
                best.tuple = gs;
            }
            int c = arity - 1;
            while (c >= 0 && ++gs[c] == g.order()) gs[c--] = 0;
            if (c < 0) break;
        }
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        std::vector<int> gs(arity);
        for (std::int64_t t = 0; t < mode.trials; ++t) {
            for (int& x : gs) x = pick(rng);
            double v = eval(gs);
            if (v > best.value) {
                best.value = v;
                best.tuple = gs;
            }
        }
    }
    return best;
}

}  // namespace

DefectSample uniform_defect(const MatFunc& phi, int d, const DefectMode& mode,
                            std::int64_t budget) {
    const GroupTable& g = *phi.group;
    const MatC id = MatC::Identity(phi.dim, phi.dim);
    return defect_scan(g, d + 1, mode, budget, [&](const std::vector<int>& gs) {
        return std::sqrt(hs_norm_sq(iterated_difference_at_identity(phi, gs) - id));
    });
}

DefectSample uniform_defect_discrete(const GroupMap& phi, int d, const DefectMode& mode,
                                     std::int64_t budget) {
    const GroupTable& s = *phi.source;
    const int id = phi.target->identity();
    return defect_scan(s, d + 1, mode, budget, [&](const std::vector<int>& gs) {
        return discrete_iterated_difference_at_identity(phi, gs) == id ? 0.0 : 1.0;
    });
}

DefectReport run_stability(const GroupTable& g, const MatFunc& phi, int d,
                           const DefectMode& mode) {
    DefectReport rep;
    rep.degree = d;
    rep.commutator_width = commutator_width(g);  // also enforces perfectness
    rep.seed = mode.seed;
    rep.samples = mode.exhaustive ? 0 : mode.trials;
    rep.epsilon_d = uniform_defect(phi, d, mode).value;
    rep.epsilon_1 = uniform_defect(phi, 1, mode).value;
    if (rep.epsilon_d == 0.0 && rep.epsilon_1 == 0.0) {
        rep.exact = true;
        rep.ratio = 0.0;
    } else if (rep.epsilon_d == 0.0) {
        rep.ratio = std::numeric_limits<double>::infinity();
    } else {
        rep.ratio = rep.epsilon_1 / rep.epsilon_d;
    }
    return rep;
}

MatC expm_series(const MatC& x) {
    const int n = static_cast<int>(x.rows());
    MatC acc = MatC::Identity(n, n);
    MatC term = MatC::Identity(n, n);
    for (int i = 1; i <= 24; ++i) {
        term = term * x / static_cast<double>(i);
        acc += term;
    }
    return acc;
}

MatFunc perturb_homomorphism(const MatFunc& rho, double delta, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatFunc out{rho.group, rho.dim, std::vector<MatC>(rho.group->order())};
    const int n = rho.dim;
    for (int g = 0; g < rho.group->order(); ++g) {
        MatC a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = Cplx(gauss(rng), gauss(rng));
        MatC herm = (a + a.adjoint()) / 2.0;
        MatC skew = Cplx(0, 1) * herm;
        double norm = std::sqrt(hs_norm_sq(skew));
        if (norm > 0) skew /= norm;
        out.values[g] = expm_series(delta * skew) * rho(g);
    }
    return out;
}

InverseReport run_inverse(const GroupTable& g, const MatFunc& rho, double delta, int k,
                          std::uint64_t seed, std::int64_t budget) {
    AbelianizationResult ab = abelianization(g);
    if (!ab.group.trivial())
        throw std::domain_error("the inverse experiment expects a perfect group");
    InverseReport rep;
    rep.n = rho.dim;
    rep.n_prime = rho.dim;
    rep.k = k;
    rep.delta = delta;
    rep.seed = seed;
    MatFunc phi = delta == 0.0 ? rho : perturb_homomorphism(rho, delta, seed);
    rep.norm_k = gowers_norm_exact(phi, k, budget);
    rep.distance_to_hom = hs_distance_sq(nearest_unital(phi), rho);
    return rep;
}

MatFunc identity_rep(GroupRef g) { return constant_matfunc(std::move(g), MatC::Identity(1, 1)); }

MatFunc sign_rep_z2(GroupRef z2) {
    if (z2->order() != 2) throw std::invalid_argument("sign rep needs Z/2");
    MatFunc f{z2, 1, std::vector<MatC>(2)};
    f.values[z2->identity()] = MatC::Identity(1, 1);
    f.values[1 - z2->identity()] = -MatC::Identity(1, 1);
    return f;
}

MatFunc rotation_rep_cyclic(GroupRef zn, int harmonics) {
    const int n = zn->order();
    MatFunc f{zn, 2, std::vector<MatC>(n)};
    for (int x = 0; x < n; ++x) {
        double t = 2.0 * M_PI * harmonics * x / static_cast<double>(n);
        MatC m(2, 2);
        m << Cplx(std::cos(t), 0), Cplx(-std::sin(t), 0), Cplx(std::sin(t), 0),
            Cplx(std::cos(t), 0);
        f.values[x] = m;
    }
    return f;
}

bool is_unitary_rep(const MatFunc& rho, double tol) {
    const GroupTable& g = *rho.group;
    const MatC id = MatC::Identity(rho.dim, rho.dim);
    for (int x = 0; x < g.order(); ++x)
        if ((rho(x) * rho(x).adjoint() - id).cwiseAbs().maxCoeff() > tol) return false;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            if ((rho(g.mult(x, y)) - rho(x) * rho(y)).cwiseAbs().maxCoeff() > tol) return false;
    return true;
}

namespace {

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& axis, double angle) {
    Eigen::Vector3d u = axis.normalized();
    Eigen::Matrix3d k;
    k << 0, -u.z(), u.y(),
        u.z(), 0, -u.x(),
        -u.y(), u.x(), 0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k +
           (1 - std::cos(angle)) * (k * k);
}

std::vector<Eigen::Matrix3d> icosahedral_rotations() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    Eigen::Matrix3d r5 = rodrigues(Eigen::Vector3d(0, 1, phi), 2.0 * M_PI / 5.0);
    Eigen::Matrix3d r3 = rodrigues(Eigen::Vector3d(1, 1, 1), 2.0 * M_PI / 3.0);
    std::vector<Eigen::Matrix3d> elems{Eigen::Matrix3d::Identity()};
    auto find = [&](const Eigen::Matrix3d& m) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if ((elems[i] - m).cwiseAbs().maxCoeff() < 1e-8) return static_cast<int>(i);
        return -1;
    };
    std::size_t head = 0;
    while (head < elems.size()) {
        for (const Eigen::Matrix3d& gen : {r5, r3}) {
            Eigen::Matrix3d next = elems[head] * gen;
            if (find(next) < 0) elems.push_back(next);
        }
        ++head;
    }
    if (elems.size() != 60) throw std::logic_error("icosahedral closure has wrong size");
    return elems;
}

int rotation_order(const Eigen::Matrix3d& m) {
    Eigen::Matrix3d acc = m;
    for (int k = 1; k <= 6; ++k) {
        if ((acc - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-8) return k;
        acc *= m;
    }
    return 0;
}

}  // namespace

MatFunc icosahedral_rep(GroupRef a5) {
    const GroupTable& g = *a5;
    if (g.order() != 60) throw std::invalid_argument("expected a group of order 60");

    // generating pair of the table
    std::vector<int> gens;
    {
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
            gens.push_back(pick);
            span = closure_subgroup(g, gens);
            std::fill(have.begin(), have.end(), 0);
            for (int x : span) have[x] = 1;
        }
    }

    std::vector<Eigen::Matrix3d> rot = icosahedral_rotations();
    std::vector<std::int64_t> rot_order(rot.size());
    for (std::size_t i = 0; i < rot.size(); ++i) rot_order[i] = rotation_order(rot[i]);

    std::vector<std::int64_t> gen_order(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) gen_order[i] = element_order(g, gens[i]);

    // search generator images; extend via BFS words and check the table
    std::vector<int> image(gens.size(), -1);
    std::vector<Eigen::Matrix3d> rep(g.order());
    std::vector<char> assigned(g.order(), 0);

    auto try_images = [&]() {
        std::fill(assigned.begin(), assigned.end(), 0);
        rep[g.identity()] = Eigen::Matrix3d::Identity();
        assigned[g.identity()] = 1;
        std::vector<int> queue{g.identity()};
        std::size_t head = 0;
        while (head < queue.size()) {
            int x = queue[head++];
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int y = g.mult(x, gens[i]);
                Eigen::Matrix3d m = rep[x] * rot[image[i]];
                if (!assigned[y]) {
                    rep[y] = m;
                    assigned[y] = 1;
                    queue.push_back(y);
                } else if ((rep[y] - m).cwiseAbs().maxCoeff() > 1e-8) {
                    return false;
                }
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t level) {
        if (level == gens.size()) return try_images();
        for (std::size_t c = 0; c < rot.size(); ++c) {
            if (rot_order[c] != gen_order[level]) continue;
            image[level] = static_cast<int>(c);
            if (search(level + 1)) return true;
        }
        return false;
    };
    if (!search(0)) throw std::logic_error("no icosahedral matching found");

    MatFunc f{a5, 3, std::vector<MatC>(g.order())};
    for (int x = 0; x < g.order(); ++x) f.values[x] = rep[x].cast<Cplx>();
    return f;
}

}  // namespace polgow

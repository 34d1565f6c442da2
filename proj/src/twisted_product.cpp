#include "polgow/twisted_product.hpp"
#include "polgow/group_algorithms.hpp"

#include <sstream>
#include <stdexcept>

namespace polgow {

TwistedProduct::TwistedProduct(GModule module, Cocycle2 psi, std::int64_t order_cap)
    : module_(std::move(module)), cocycle_(std::move(psi)) {
    cocycle_.module = &module_;
    const std::int64_t msize = module_.size();
    order_ = msize * module_.group->order();
    if (order_ > order_cap)
        throw std::domain_error("twisted product order " + std::to_string(order_) +
                                " exceeds cap " + std::to_string(order_cap));
    if (!cocycle_.normalized())
        throw std::invalid_argument("cocycle must be normalized before realization");
    stride_.resize(module_.rank());
    std::int64_t s = 1;
    for (int i = module_.rank() - 1; i >= 0; --i) {
        stride_[i] = s;
        s *= module_.moduli[i];
    }
    identity_ = embed(module_.zero(), module_.group->identity());
}

std::int64_t TwistedProduct::module_index(const VecI& m) const {
    std::int64_t idx = 0;
    for (int i = 0; i < module_.rank(); ++i) idx += m[i] * stride_[i];
    return idx;
}

VecI TwistedProduct::module_vector(std::int64_t idx) const {
    VecI m(module_.rank());
    for (int i = 0; i < module_.rank(); ++i) {
        m[i] = (idx / stride_[i]) % module_.moduli[i];
    }
    return m;
}

int TwistedProduct::embed(const VecI& m, int g) const {
    return static_cast<int>(module_index(m) * module_.group->order() + g);
}

std::pair<VecI, int> TwistedProduct::unembed(int idx) const {
    const int n = module_.group->order();
    return {module_vector(idx / n), idx % n};
}

int TwistedProduct::mult(int a, int b) const {
    auto [m1, g1] = unembed(a);
    auto [m2, g2] = unembed(b);
    VecI m = module_.reduce(m1 + module_.act(g1, m2) + cocycle_.at(g1, g2));
    return embed(m, module_.group->mult(g1, g2));
}

int TwistedProduct::inverse(int a) const {
    auto [m, g] = unembed(a);
    const int gi = module_.group->inverse(g);
    VecI mi = module_.reduce(-module_.act(gi, m) - cocycle_.at(gi, g));
    return embed(mi, gi);
}

std::string TwistedProduct::label(int idx) const {
    auto [m, g] = unembed(idx);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << m[i];
    }
    os << "|";
    const auto& labels = module_.group->labels();
    if (!labels.empty())
        os << labels[g];
    else
        os << g;
    os << ")";
    return os.str();
}

const GroupTable& TwistedProduct::realized() const {
    if (realized_) return *realized_;
    if (!realizable())
        throw std::domain_error("twisted product of order " + std::to_string(order_) +
                                " exceeds the dense table cap");
    const int n = static_cast<int>(order_);
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = mult(a, b);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) labels[a] = label(a);
    realized_ = GroupTable::from_table(n, identity_, std::move(table), std::move(labels));
    return *realized_;
}

std::vector<int> TwistedProduct::structural_generators() const {
    std::vector<int> gens;
    for (int i = 0; i < module_.rank(); ++i) {
        VecI e = module_.zero();
        e[i] = 1;
        gens.push_back(embed(e, module_.group->identity()));
    }
    for (int g = 0; g < module_.group->order(); ++g) {
        if (g == module_.group->identity()) continue;
        gens.push_back(embed(module_.zero(), g));
    }
    return gens;
}

TwistedProduct twisted_product(GModule module, Cocycle2 psi, std::int64_t order_cap) {
    psi.module = &module;  // rebind in case the caller moved the module
    CocycleCheck check = validate_cocycle(psi);
    if (!check.ok)
        throw std::invalid_argument("not a 2-cocycle; identity fails at triple (" +
                                    std::to_string(check.violation[0]) + "," +
                                    std::to_string(check.violation[1]) + "," +
                                    std::to_string(check.violation[2]) + ")");
    if (!psi.normalized()) psi = normalize_cocycle(psi);
    return TwistedProduct(std::move(module), std::move(psi), order_cap);
}

}  // namespace polgow

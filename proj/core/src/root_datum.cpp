#include "parahoric/root_datum.hpp"
#include "parahoric/error.hpp"
#include "parahoric/rational.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace parahoric {

namespace {

constexpr std::size_t kClosureCap = 10000;

IntVec axpy(const IntVec& x, std::int64_t a, const IntVec& y) {
    IntVec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * y[i];
    return r;
}

} // namespace

std::int64_t pairing(const IntVec& chi, const IntVec& mu) {
    if (chi.size() != mu.size()) {
        throw DimensionError("pairing: length " + std::to_string(chi.size()) + " vs " +
                             std::to_string(mu.size()));
    }
    return std::inner_product(chi.begin(), chi.end(), mu.begin(), std::int64_t{0});
}

std::int64_t pairing(const Weight& lambda, const Cocharacter& mu) {
    return pairing(lambda.coords, mu.coords);
}

RootDatum::RootDatum(std::string name, int rank, std::vector<IntVec> simple_roots,
                     std::vector<IntVec> coroots)
    : name_(std::move(name)), rank_(rank), simple_(std::move(simple_roots)),
      coroots_(std::move(coroots)) {
    if (rank_ <= 0) throw ValidationError("rank must be positive");
    if (simple_.size() != coroots_.size()) {
        throw ValidationError("simple roots and coroots differ in number");
    }
    for (std::size_t i = 0; i < simple_.size(); ++i) {
        if (simple_[i].size() != static_cast<std::size_t>(rank_) ||
            coroots_[i].size() != static_cast<std::size_t>(rank_)) {
            throw ValidationError("root vector length does not match rank");
        }
    }
    for (std::size_t i = 0; i < simple_.size(); ++i) {
        if (cartan(i, i) != 2) {
            throw ValidationError("<alpha_" + std::to_string(i) + ", coroot> != 2");
        }
        for (std::size_t j = 0; j < simple_.size(); ++j) {
            if (i != j && cartan(i, j) > 0) {
                throw ValidationError("positive off-diagonal Cartan entry at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    close_positive_roots();
}

void RootDatum::close_positive_roots() {
    const std::size_t r = simple_.size();
    std::map<IntVec, std::size_t> seen;
    std::deque<std::size_t> queue;
    auto add = [&](IntVec coeffs, IntVec root, IntVec coroot) {
        if (seen.count(coeffs)) return;
        if (positive_.size() >= kClosureCap) {
            throw ValidationError("positive-root closure exceeded " + std::to_string(kClosureCap) +
                                  " roots; Cartan data is not of finite type");
        }
        seen.emplace(coeffs, positive_.size());
        queue.push_back(positive_.size());
        positive_coeffs_.push_back(std::move(coeffs));
        positive_.push_back(std::move(root));
        positive_coroots_.push_back(std::move(coroot));
    };
    for (std::size_t i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        add(e, simple_[i], coroots_[i]);
    }
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < r; ++i) {
            IntVec coeffs = positive_coeffs_[idx];
            IntVec unit(r, 0);
            unit[i] = 1;
            if (coeffs == unit) continue;
            const std::int64_t c = pairing(positive_[idx], coroots_[i]);
            IntVec next = coeffs;
            next[i] -= c;
            if (std::any_of(next.begin(), next.end(), [](std::int64_t v) { return v < 0; })) {
                throw ValidationError("reflection produced a root of mixed sign; Cartan data is malformed");
            }
            IntVec root = axpy(positive_[idx], -c, simple_[i]);
            IntVec coroot = axpy(positive_coroots_[idx], -pairing(simple_[i], positive_coroots_[idx]),
                                 coroots_[i]);
            add(std::move(next), std::move(root), std::move(coroot));
        }
    }
    two_rho_.assign(rank_, 0);
    for (const auto& b : positive_) {
        for (int k = 0; k < rank_; ++k) two_rho_[k] += b[k];
    }
}

std::shared_ptr<const RootDatum> RootDatum::gl(int n) {
    if (n < 1) throw ArgumentError("GL(n) needs n >= 1");
    std::vector<IntVec> simple;
    for (int i = 0; i + 1 < n; ++i) {
        IntVec a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        simple.push_back(a);
    }
    if (simple.empty()) {
        // GL(1) has no roots; keep the torus.
        return std::make_shared<RootDatum>("GL(1)", 1, std::vector<IntVec>{}, std::vector<IntVec>{});
    }
    return std::make_shared<RootDatum>("GL(" + std::to_string(n) + ")", n, simple, simple);
}

std::shared_ptr<const RootDatum> RootDatum::gsp4() {
    std::vector<IntVec> simple{{1, -1, 0}, {0, 2, -1}};
    std::vector<IntVec> coroots{{1, -1, 0}, {0, 1, 0}};
    return std::make_shared<RootDatum>("GSp(4)", 3, simple, coroots);
}

const IntVec& RootDatum::simple_root(std::size_t i) const {
    check_index(i);
    return simple_[i];
}

const IntVec& RootDatum::coroot(std::size_t i) const {
    check_index(i);
    return coroots_[i];
}

std::int64_t RootDatum::cartan(std::size_t i, std::size_t j) const {
    return pairing(simple_.at(i), coroots_.at(j));
}

void RootDatum::check_index(std::size_t i) const {
    if (i >= simple_.size()) {
        throw ArgumentError("simple root index " + std::to_string(i) + " out of range for " + name_);
    }
}

void RootDatum::check_weight(const Weight& lambda) const {
    if (lambda.coords.size() != static_cast<std::size_t>(rank_)) {
        throw DimensionError("weight has length " + std::to_string(lambda.coords.size()) +
                             ", rank is " + std::to_string(rank_));
    }
}

void RootDatum::check_cocharacter(const Cocharacter& mu) const {
    if (mu.coords.size() != static_cast<std::size_t>(rank_)) {
        throw DimensionError("cocharacter has length " + std::to_string(mu.coords.size()) +
                             ", rank is " + std::to_string(rank_));
    }
}

Weight RootDatum::weyl_star(std::size_t i, const Weight& lambda) const {
    check_index(i);
    check_weight(lambda);
    const std::int64_t m = pairing(lambda.coords, coroots_[i]) + 1;
    return Weight{axpy(lambda.coords, -m, simple_[i])};
}

bool RootDatum::is_dominant(const Weight& lambda) const {
    check_weight(lambda);
    return std::all_of(coroots_.begin(), coroots_.end(),
                       [&](const IntVec& c) { return pairing(lambda.coords, c) >= 0; });
}

bool RootDatum::is_regular(const Weight& lambda) const {
    check_weight(lambda);
    return std::all_of(coroots_.begin(), coroots_.end(),
                       [&](const IntVec& c) { return pairing(lambda.coords, c) > 0; });
}

Weight weyl_star_via_rho(const RootDatum& datum, std::size_t i, const Weight& lambda) {
    datum.check_index(i);
    datum.check_weight(lambda);
    const IntVec& two_rho = datum.two_rho();
    IntVec x(lambda.coords.size());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = 2 * lambda.coords[k] + two_rho[k];
    // reflect x in alpha_i, then subtract 2 rho and halve
    const std::int64_t c = pairing(x, datum.coroot(i));
    IntVec y = axpy(x, -c, datum.simple_root(i));
    Weight out;
    out.coords.resize(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        const std::int64_t v = y[k] - two_rho[k];
        if (v % 2 != 0) throw ConsistencyError("(lambda+rho)^w - rho is not integral");
        out.coords[k] = v / 2;
    }
    return out;
}

std::int64_t weyl_dimension(const RootDatum& datum, const Weight& lambda) {
    datum.check_weight(lambda);
    Rational dim = 1;
    for (std::size_t r = 0; r < datum.positive_roots().size(); ++r) {
        const IntVec& cor = datum.positive_coroot(r);
        const std::int64_t num = 2 * pairing(lambda.coords, cor) + pairing(datum.two_rho(), cor);
        const std::int64_t den = pairing(datum.two_rho(), cor);
        dim *= Rational(num) / den;
    }
    if (dim.get_den() != 1) throw ConsistencyError("Weyl dimension is not integral");
    return dim.get_num().get_si();
}

ParabolicType::ParabolicType(DatumPtr datum, std::vector<std::size_t> subset)
    : datum_(std::move(datum)), subset_(std::move(subset)) {
    if (!datum_) throw ArgumentError("parabolic without a root datum");
    std::sort(subset_.begin(), subset_.end());
    subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
    for (auto i : subset_) datum_->check_index(i);
}

ParabolicType ParabolicType::full(DatumPtr datum) {
    std::vector<std::size_t> all(datum->num_simple());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return ParabolicType(std::move(datum), all);
}

bool ParabolicType::contains(std::size_t i) const {
    return std::binary_search(subset_.begin(), subset_.end(), i);
}

std::vector<std::size_t> ParabolicType::missing() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < datum_->num_simple(); ++i) {
        if (!contains(i)) out.push_back(i);
    }
    return out;
}

bool ParabolicType::subset_of(const ParabolicType& other) const {
    return std::includes(other.subset_.begin(), other.subset_.end(), subset_.begin(), subset_.end());
}

std::vector<std::size_t> ParabolicType::restricted_positive_root_indices() const {
    std::vector<std::size_t> out;
    const auto& coeffs = datum_->positive_root_coefficients();
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        bool inside = true;
        for (std::size_t i = 0; i < coeffs[r].size(); ++i) {
            if (coeffs[r][i] != 0 && !contains(i)) inside = false;
        }
        if (inside) out.push_back(r);
    }
    return out;
}

std::vector<IntVec> ParabolicType::restricted_positive_roots() const {
    std::vector<IntVec> out;
    for (auto r : restricted_positive_root_indices()) out.push_back(datum_->positive_roots()[r]);
    return out;
}

bool ParabolicType::operator==(const ParabolicType& other) const {
    return datum_ == other.datum_ && subset_ == other.subset_;
}

ParabolicChain make_chain(const ParabolicType& q, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> expect = q.missing();
    std::vector<std::size_t> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expect) {
        throw ArgumentError("chain order must be a permutation of the simple roots missing from Q");
    }
    ParabolicChain chain;
    chain.steps.push_back(q);
    std::vector<std::size_t> current = q.subset();
    for (auto i : order) {
        current.push_back(i);
        chain.steps.emplace_back(q.datum(), current);
        chain.added_roots.push_back(i);
    }
    return chain;
}

std::vector<ParabolicChain> parabolic_chains(const ParabolicType& q) {
    std::vector<std::size_t> order = q.missing();
    std::vector<ParabolicChain> out;
    do {
        out.push_back(make_chain(q, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::int64_t weight_space_dim(const ParabolicType& q, std::int64_t center_dim) {
    const std::int64_t ab = q.datum()->rank() - static_cast<std::int64_t>(q.subset().size());
    if (center_dim < 0 || center_dim > ab) {
        throw ArgumentError("center_dim must lie in [0, " + std::to_string(ab) + "]");
    }
    return ab - center_dim;
}

} // namespace parahoric

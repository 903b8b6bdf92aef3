#include "parahoric/manin.hpp"
#include "parahoric/error.hpp"
#include "parahoric/matrix.hpp"
#include "parahoric/rational.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace parahoric {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

} // namespace

P1List::P1List(std::int64_t modulus) : m_(modulus) {
    if (m_ < 1) throw ArgumentError("P^1(Z/M) needs M >= 1");
    if (m_ > 5000) throw ArgumentError("level too large for the P^1 table");
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u <= m_; ++u)
        if (std::gcd(u, m_) == 1) units.push_back(u % m_);
    const std::size_t area = static_cast<std::size_t>(m_ * m_);
    std::vector<std::int64_t> canon(area, -1);
    for (std::int64_t c = 0; c < m_; ++c) {
        for (std::int64_t d = 0; d < m_; ++d) {
            if (std::gcd(std::gcd(c, d), m_) != 1) continue;
            std::int64_t best = -1;
            for (auto u : units) {
                const std::int64_t key = mod(u * c, m_) * m_ + mod(u * d, m_);
                if (best < 0 || key < best) best = key;
            }
            canon[c * m_ + d] = best;
        }
    }
    std::vector<std::int64_t> reps;
    for (std::size_t i = 0; i < area; ++i)
        if (canon[i] == static_cast<std::int64_t>(i)) reps.push_back(static_cast<std::int64_t>(i));
    table_.assign(area, -1);
    for (std::size_t r = 0; r < reps.size(); ++r) points_.emplace_back(reps[r] / m_, reps[r] % m_);
    for (std::size_t i = 0; i < area; ++i) {
        if (canon[i] < 0) continue;
        const auto it = std::lower_bound(reps.begin(), reps.end(), canon[i]);
        table_[i] = it - reps.begin();
    }
}

std::size_t P1List::index(std::int64_t c, std::int64_t d) const {
    const std::int64_t v = table_[mod(c, m_) * m_ + mod(d, m_)];
    if (v < 0) throw ArgumentError("not a point of P^1(Z/M)");
    return static_cast<std::size_t>(v);
}

Mat2 P1List::lift(std::size_t i) const {
    auto [c, d] = points_.at(i);
    if (m_ == 1) return Mat2::identity();
    // find a representative (c, d + tM) with gcd(c, d + tM) = 1, then complete the row
    if (c == 0) c = m_;
    for (std::int64_t t = 0; t < 10000; ++t) {
        const std::int64_t dd = d + t * m_;
        if (std::gcd(c, dd) != 1) continue;
        // a dd - b c = 1
        std::int64_t old_r = dd, r = c, old_s = 1, s = 0;
        while (r != 0) {
            const std::int64_t q = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        }
        // old_s * dd + t' * c = 1
        const std::int64_t a = old_s;
        const std::int64_t b = -((1 - a * dd) / c);
        Mat2 h{a, b, c, dd};
        if (h.det() != 1) throw ConsistencyError("coset lift is not unimodular");
        return h;
    }
    throw ConsistencyError("no coset lift found");
}

std::int64_t gamma0_index(std::int64_t m) {
    std::int64_t out = m, x = m;
    for (std::int64_t l = 2; l * l <= x; ++l) {
        if (x % l != 0) continue;
        while (x % l == 0) x /= l;
        out = out / l * (l + 1);
    }
    if (x > 1) out = out / x * (x + 1);
    return out;
}

ManinBasis::ManinBasis(std::int64_t N, std::int64_t p) : n_(N), p_(p), p1_((N < 1 || p < 1) ? 1 : N * p) {
    if (N < 1 || p < 1) throw ArgumentError("level must be positive");
    if (!is_prime(p)) throw ArgumentError("p must be prime");
    if (std::gcd(N, p) != 1) throw ArgumentError("N must be coprime to p");
    const std::size_t n = p1_.size();
    s_map_.resize(n);
    tau_map_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto [c, d] = p1_.point(x);
        s_map_[x] = p1_.index(d, -c);
        tau_map_[x] = p1_.index(d, -c - d);
    }
    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        seen[x] = seen[s_map_[x]] = true;
        rel2_.emplace_back(std::min(x, s_map_[x]), std::max(x, s_map_[x]));
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        const std::size_t y = tau_map_[x], z = tau_map_[y];
        seen[x] = seen[y] = seen[z] = true;
        rel3_.push_back({x, y, z});
    }
    build_tree();
}

void ManinBasis::build_tree() {
    const std::size_t n = p1_.size();
    const Mat2 I = Mat2::identity(), S = Mat2::S(), T = Mat2::tau();
    const Mat2 T2 = T * T;
    edges_.assign(n, I);
    std::vector<bool> has_edge(n, false);
    std::vector<bool> in_tree(n, false);  // indexed by coset, marks its triangle
    auto mark_triangle = [&](std::size_t x) {
        in_tree[x] = in_tree[tau_map_[x]] = in_tree[tau_map_[tau_map_[x]]] = true;
    };
    auto assign = [&](std::size_t x, const Mat2& h) {
        if (has_edge[x]) throw ConsistencyError("coset assigned twice in the spanning tree");
        edges_[x] = h;
        has_edge[x] = true;
    };

    const std::size_t xi = p1_.coset(I);
    tau_coset_ = p1_.coset(T);
    tau2_coset_ = p1_.coset(T2);
    if (n < 3 || xi == tau_coset_) throw UnsupportedError("level too small for the polygon presentation");
    assign(xi, I);
    assign(tau_coset_, T);
    assign(tau2_coset_, T2);
    mark_triangle(xi);
    gens_.push_back({GeneratorKind::Vertical, I, xi, I});

    struct Child {
        std::size_t parent;   // coset of the parent edge
        std::size_t entry;    // coset of the child's entry edge
        bool fixed;           // tau-fixed triangle
    };
    std::vector<Child> children;
    std::vector<bool> interior(n, false);
    interior[xi] = interior[tau2_coset_] = true;

    std::deque<std::size_t> queue{tau_coset_};
    std::vector<std::size_t> order;  // boundary candidates in discovery order
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        const Mat2 h = edges_[x];
        const std::size_t y = s_map_[x];
        if (y == x || in_tree[y]) {
            order.push_back(x);
            continue;
        }
        const Mat2 hs = h * S;
        mark_triangle(y);
        interior[x] = interior[y] = true;
        if (tau_map_[y] == y) {
            assign(y, hs);
            const Mat2 g = (hs * T) * hs.inverse();
            gens_.push_back({GeneratorKind::ThreeTorsion, hs, y, g});
            children.push_back({x, y, true});
        } else {
            assign(y, hs);
            assign(tau_map_[y], hs * T);
            assign(tau_map_[tau_map_[y]], hs * T2);
            children.push_back({x, y, false});
            queue.push_back(tau_map_[y]);
            queue.push_back(tau_map_[tau_map_[y]]);
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!has_edge[x]) throw ConsistencyError("spanning tree does not reach every coset");

    std::vector<PlanStep> partner_steps;
    std::vector<bool> paired(n, false);
    for (std::size_t x : order) {
        if (interior[x] || paired[x]) continue;
        const std::size_t y = s_map_[x];
        const Mat2& e = edges_[x];
        if (y == x) {
            const Mat2 g = e * S * e.inverse();
            gens_.push_back({GeneratorKind::TwoTorsion, e, x, g});
            paired[x] = true;
            continue;
        }
        if (interior[y] || paired[y]) throw ConsistencyError("boundary edge without a boundary partner");
        const Mat2 g = e * S * edges_[y].inverse();
        if (g.det() != 1 || g.c % level() != 0) throw ConsistencyError("pairing element outside Gamma0(M)");
        gens_.push_back({GeneratorKind::Free, e, x, g});
        partner_steps.push_back({PlanStep::Op::NegAct, y, x, 0, g});
        paired[x] = paired[y] = true;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!interior[x] && !paired[x] && tau_map_[x] != x)
            throw ConsistencyError("unpaired boundary edge");

    // copies first, then the vertical partner, then free partners, then the tree bottom-up
    for (std::size_t g = 0; g < gens_.size(); ++g) plan_.push_back({PlanStep::Op::Copy, gens_[g].coset, g, 0, I});
    const Mat2 delta_inv{1, -1, 0, 1};
    plan_.push_back({PlanStep::Op::NegAct, tau2_coset_, xi, 0, delta_inv});
    plan_.insert(plan_.end(), partner_steps.begin(), partner_steps.end());
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
        if (!it->fixed) {
            const std::size_t y = it->entry;
            plan_.push_back({PlanStep::Op::NegSum, y, tau_map_[y], tau_map_[tau_map_[y]], I});
        }
        plan_.push_back({PlanStep::Op::Neg, it->parent, it->entry, 0, I});
    }
}

std::size_t ManinBasis::num_free() const {
    return std::count_if(gens_.begin(), gens_.end(), [](const auto& g) { return g.kind == GeneratorKind::Free; });
}
std::size_t ManinBasis::num_two_torsion() const {
    return std::count_if(gens_.begin(), gens_.end(), [](const auto& g) { return g.kind == GeneratorKind::TwoTorsion; });
}
std::size_t ManinBasis::num_three_torsion() const {
    return std::count_if(gens_.begin(), gens_.end(),
                         [](const auto& g) { return g.kind == GeneratorKind::ThreeTorsion; });
}

std::size_t ManinBasis::scalar_relation_rank() const {
    const std::size_t n = num_cosets();
    RationalMatrix rel(rel2_.size() + rel3_.size(), n);
    std::size_t r = 0;
    for (auto [x, y] : rel2_) {
        rel(r, x) += 1;
        rel(r, y) += 1;
        ++r;
    }
    for (const auto& t : rel3_) {
        for (auto x : t) rel(r, x) += 1;
        ++r;
    }
    return rank(rel);
}

ManinBasis build_manin(std::int64_t N, std::int64_t p) { return ManinBasis(N, p); }

} // namespace parahoric

#pragma once

// Brute-force ground truth for small general graphs. Everything here works on
// vertex subsets encoded as bitmasks of the input graph, so memo tables are
// plain arrays indexed by mask.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "cokl/error.hpp"
#include "cokl/graph.hpp"
#include "cokl/partition_sequence.hpp"

namespace cokl {

struct OracleBudget {
    int max_vertices = 12;
    std::uint64_t max_cliques_enumerated = 50'000'000;
};

namespace detail {

using Mask = std::uint32_t;
constexpr int oracle_hard_limit = 20;

inline Mask bit(int v) { return Mask{1} << v; }
inline int lowest(Mask m) { return std::countr_zero(m); }

inline void check_budget(const Graph& g, const OracleBudget& b) {
    if (b.max_vertices < 1) throw precondition_error("oracle budget must allow at least one vertex");
    if (g.order() > std::min(b.max_vertices, oracle_hard_limit))
        throw budget_exceeded("oracle limited to " + std::to_string(std::min(b.max_vertices, oracle_hard_limit)) +
                              " vertices, graph has " + std::to_string(g.order()));
}

/// Adjacency as masks; with `co` set, the masks describe the complement.
inline std::vector<Mask> neighbour_masks(const Graph& g, bool co) {
    const int n = g.order();
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v) != co) adj[static_cast<std::size_t>(u)] |= bit(v);
    return adj;
}

/// Exact chromatic number of every induced subgraph (in the orientation
/// given by `adj`): chi[mask] = 1 + min over independent I containing the
/// lowest vertex of chi[mask \ I]. O(3^n).
inline std::vector<int> chromatic_table(const std::vector<Mask>& adj) {
    const int n = static_cast<int>(adj.size());
    const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    std::vector<char> independent(std::size_t{full} + 1, 0);
    independent[0] = 1;
    for (Mask m = 1; m <= full && m != 0; ++m) {
        const int v = lowest(m);
        const Mask rest = m & (m - 1);
        independent[m] = independent[rest] && (adj[static_cast<std::size_t>(v)] & rest) == 0;
        if (m == full) break;
    }
    std::vector<int> chi(std::size_t{full} + 1, 0);
    for (Mask m = 1; m <= full && m != 0; ++m) {
        const Mask low = m & (~m + 1);
        const Mask rest = m ^ low;
        int best = std::numeric_limits<int>::max();
        // Submasks of rest, each extended by the lowest vertex.
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask part = sub | low;
            if (independent[part]) best = std::min(best, 1 + chi[m ^ part]);
            if (sub == 0) break;
        }
        chi[m] = best;
        if (m == full) break;
    }
    return chi;
}

/// Calls f on every maximal clique of adj restricted to `within`
/// (Bron-Kerbosch with Tomita pivoting).
class CliqueEnumerator {
public:
    CliqueEnumerator(const std::vector<Mask>& adj, std::uint64_t& counter, std::uint64_t limit)
        : adj_(adj), counter_(counter), limit_(limit) {}

    void maximal(Mask within, const std::function<void(Mask)>& f) { expand(0, within, 0, f); }

    /// Every nonempty clique inside `within`, maximal or not.
    void all(Mask within, const std::function<void(Mask)>& f) { extend(0, within, f); }

private:
    void tick() {
        if (++counter_ > limit_) throw budget_exceeded("clique enumeration budget exhausted");
    }

    void expand(Mask r, Mask p, Mask x, const std::function<void(Mask)>& f) {
        if (p == 0 && x == 0) {
            if (r != 0) {
                tick();
                f(r);
            }
            return;
        }
        const Mask px = p | x;
        int pivot = lowest(px);
        int best = -1;
        for (Mask m = px; m; m &= m - 1) {
            const int u = lowest(m);
            const int c = std::popcount(p & adj_[static_cast<std::size_t>(u)]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (Mask cand = p & ~adj_[static_cast<std::size_t>(pivot)]; cand; cand &= cand - 1) {
            const int v = lowest(cand);
            const Mask nv = adj_[static_cast<std::size_t>(v)];
            expand(r | bit(v), p & nv, x & nv, f);
            p &= ~bit(v);
            x |= bit(v);
        }
    }

    void extend(Mask r, Mask p, const std::function<void(Mask)>& f) {
        for (Mask cand = p; cand; cand &= cand - 1) {
            const int v = lowest(cand);
            const Mask next = r | bit(v);
            tick();
            f(next);
            // Only higher-numbered candidates, so each clique appears once.
            const Mask higher = p & ~((bit(v) << 1) - 1);
            extend(next, higher & adj_[static_cast<std::size_t>(v)], f);
        }
    }

    const std::vector<Mask>& adj_;
    std::uint64_t& counter_;
    std::uint64_t limit_;
};

/// kappa_l for every mask and l, where "parts" are cliques of adj. Run on the
/// complement orientation it yields lambda_k.
class KappaEngine {
public:
    KappaEngine(const Graph& g, const OracleBudget& b, bool co, bool all_cliques)
        : adj_(neighbour_masks(g, co)), chi_(chromatic_table(adj_)), budget_(b), all_cliques_(all_cliques) {
        const int n = g.order();
        full_ = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    }

    Mask full() const { return full_; }

    int kappa(int l, Mask m) {
        if (m == 0) return 0;
        if (l == 0) return chi_[m];
        auto& table = level(l);
        if (table[m] >= 0) return table[m];
        int best = kappa(l - 1, m);
        CliqueEnumerator cliques(adj_, counter_, budget_.max_cliques_enumerated);
        std::vector<Mask> found;
        auto collect = [&](Mask c) { found.push_back(c); };
        if (all_cliques_) cliques.all(m, collect);
        else cliques.maximal(m, collect);
        for (Mask c : found) best = std::min(best, kappa(l - 1, m & ~c));
        table[m] = best;
        return best;
    }

    PartitionSequence sequence() {
        std::vector<int> out;
        for (int l = 0;; ++l) {
            const int v = kappa(l, full_);
            if (v == 0) break;
            out.push_back(v);
        }
        return PartitionSequence(std::move(out));
    }

private:
    std::vector<int>& level(int l) {
        if (static_cast<std::size_t>(l) >= memo_.size()) memo_.resize(static_cast<std::size_t>(l) + 1);
        auto& t = memo_[static_cast<std::size_t>(l)];
        if (t.empty()) t.assign(std::size_t{full_} + 1, -1);
        return t;
    }

    std::vector<Mask> adj_;
    std::vector<int> chi_;
    OracleBudget budget_;
    bool all_cliques_;
    Mask full_ = 0;
    std::uint64_t counter_ = 0;
    std::vector<std::vector<int>> memo_;
};

} // namespace detail

inline int chromatic_number_exact(const Graph& g, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    if (g.order() == 0) return 0;
    return detail::chromatic_table(detail::neighbour_masks(g, false)).back();
}

/// Clique cover number theta(G) = chi of the complement.
inline int clique_cover_number_exact(const Graph& g, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    if (g.order() == 0) return 0;
    return detail::chromatic_table(detail::neighbour_masks(g, true)).back();
}

/// kappa_l(G): fewest independent sets that, with l cliques, partition V(G).
inline int kappa_oracle(const Graph& g, std::size_t l, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    detail::KappaEngine e(g, b, false, false);
    return e.kappa(static_cast<int>(std::min<std::size_t>(l, static_cast<std::size_t>(g.order()))), e.full());
}

inline PartitionSequence kappa_hat_oracle(const Graph& g, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    return detail::KappaEngine(g, b, false, false).sequence();
}

/// Same recursion, but removing every clique rather than maximal ones only.
inline PartitionSequence kappa_hat_oracle_all_cliques(const Graph& g, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    return detail::KappaEngine(g, b, false, true).sequence();
}

/// lambda-hat by removing maximal independent sets directly.
inline PartitionSequence lambda_hat_oracle(const Graph& g, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    return detail::KappaEngine(g, b, true, false).sequence();
}

/// lambda-hat as kappa-hat of the complement graph.
inline PartitionSequence lambda_hat_oracle_via_complement(const Graph& g, const OracleBudget& b = {}) {
    return kappa_hat_oracle(complement(g), b);
}

inline bool is_kl_colourable_oracle(const Graph& g, std::size_t k, std::size_t l, const OracleBudget& b = {}) {
    return static_cast<std::size_t>(kappa_oracle(g, l, b)) <= k;
}

/// Backtracking search for a partition into k independent sets and l
/// cliques. Exponential; intended for n <= 8.
inline bool is_kl_colourable_exhaustive(const Graph& g, std::size_t k, std::size_t l) {
    const int n = g.order();
    if (n > 10) throw budget_exceeded("exhaustive partition search limited to 10 vertices");
    const auto adj = detail::neighbour_masks(g, false);
    std::vector<detail::Mask> indep, cliq;
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        const detail::Mask nv = adj[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < indep.size(); ++i)
            if ((indep[i] & nv) == 0) {
                indep[i] |= detail::bit(v);
                if (place(v + 1)) return true;
                indep[i] &= ~detail::bit(v);
            }
        if (indep.size() < k) {
            indep.push_back(detail::bit(v));
            if (place(v + 1)) return true;
            indep.pop_back();
        }
        for (std::size_t i = 0; i < cliq.size(); ++i)
            if ((cliq[i] & ~nv) == 0) {
                cliq[i] |= detail::bit(v);
                if (place(v + 1)) return true;
                cliq[i] &= ~detail::bit(v);
            }
        if (cliq.size() < l) {
            cliq.push_back(detail::bit(v));
            if (place(v + 1)) return true;
            cliq.pop_back();
        }
        return false;
    };
    return place(0);
}

namespace detail {

/// Membership in the class generated from K1 by complementation and by
/// disjoint union of two members with equal chromatic number.
class BoxClassOracle {
public:
    explicit BoxClassOracle(const Graph& g)
        : adj_{neighbour_masks(g, false), neighbour_masks(g, true)},
          chi_{chromatic_table(adj_[0]), chromatic_table(adj_[1])} {}

    bool member(Mask m, bool co) {
        if (std::popcount(m) == 1) return true;
        const std::uint64_t key = (std::uint64_t{m} << 1) | (co ? 1u : 0u);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = false;
        auto comps = components_of(m, co);
        if (comps.size() >= 2) {
            result = split_search(comps, co);
        } else if (components_of(m, !co).size() >= 2) {
            result = member(m, !co);
        }
        memo_[key] = result;
        return result;
    }

    int chi(Mask m, bool co) const { return chi_[co ? 1 : 0][m]; }

private:
    std::vector<Mask> components_of(Mask m, bool co) const {
        const auto& adj = adj_[co ? 1 : 0];
        std::vector<Mask> out;
        while (m) {
            Mask comp = bit(lowest(m));
            Mask frontier = comp;
            while (frontier) {
                const int v = lowest(frontier);
                frontier &= frontier - 1;
                const Mask fresh = adj[static_cast<std::size_t>(v)] & m & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push_back(comp);
            m &= ~comp;
        }
        return out;
    }

    /// Every split of the components into two nonempty groups; the first
    /// component always goes to group A so each split is tried once.
    bool split_search(const std::vector<Mask>& comps, bool co) {
        const std::size_t c = comps.size();
        const std::uint64_t splits = std::uint64_t{1} << (c - 1);
        for (std::uint64_t sel = 0; sel + 1 < splits; ++sel) {
            Mask a = comps[0], b = 0;
            for (std::size_t i = 1; i < c; ++i) {
                if (sel >> (i - 1) & 1u) a |= comps[i];
                else b |= comps[i];
            }
            if (chi(a, co) != chi(b, co)) continue;
            if (member(a, co) && member(b, co)) return true;
        }
        return false;
    }

    std::vector<Mask> adj_[2];
    std::vector<int> chi_[2];
    std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace detail

/// True iff g is a box cograph with chi(g) = k and theta(g) = l.
inline bool is_box_cograph_oracle(const Graph& g, std::size_t k, std::size_t l, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    if (g.order() == 0) return false;
    detail::BoxClassOracle o(g);
    const auto full = static_cast<detail::Mask>((std::uint64_t{1} << g.order()) - 1);
    if (!o.member(full, false)) return false;
    return static_cast<std::size_t>(o.chi(full, false)) == k && static_cast<std::size_t>(o.chi(full, true)) == l;
}

/// Membership in the box cograph class, any dimension.
inline bool is_box_cograph_oracle(const Graph& g, const OracleBudget& b = {}) {
    detail::check_budget(g, b);
    if (g.order() == 0) return false;
    const auto full = static_cast<detail::Mask>((std::uint64_t{1} << g.order()) - 1);
    return detail::BoxClassOracle(g).member(full, false);
}

} // namespace cokl

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cokl/cotree.hpp"
#include "cokl/error.hpp"
#include "cokl/graph.hpp"

namespace cokl {

struct RandomCotreeOptions {
    int max_children = 4; ///< branching is uniform on [2, max_children]
};

/// Random canonical cotree on n leaves. Built top-down: every node with
/// m >= 2 leaves picks a child count t and a random composition of m into
/// t positive parts; labels alternate from a random root label. Vertex ids
/// are assigned by a random permutation.
template <class Rng>
Cotree random_cotree(int n, Rng& rng, const RandomCotreeOptions& opt = {}) {
    if (n < 1) throw precondition_error("random cotree needs at least one leaf");
    if (opt.max_children < 2) throw precondition_error("max_children must be at least 2");
    std::vector<vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);

    RawTree raw;
    raw.nodes.reserve(2 * static_cast<std::size_t>(n));
    std::size_t next_id = 0;
    const NodeKind root_kind = std::bernoulli_distribution(0.5)(rng) ? NodeKind::join_node : NodeKind::union_node;

    struct Pending {
        int size;
        NodeKind kind;
    };
    // A parent is created before its children, so each pending entry
    // remembers which child slot of which parent it fills.
    std::vector<Pending> stack{{n, root_kind}};
    std::vector<std::pair<int, std::size_t>> where{{-1, 0}};
    while (!stack.empty()) {
        const Pending p = stack.back();
        stack.pop_back();
        const auto [parent, pos] = where.back();
        where.pop_back();
        int id;
        if (p.size == 1) {
            id = raw.add_leaf(ids[next_id++]);
        } else {
            const int t = std::uniform_int_distribution<int>(2, std::min(opt.max_children, p.size))(rng);
            // t-1 distinct cut points in 1..size-1.
            std::vector<int> cuts;
            if (p.size - 1 <= 4 * t) {
                std::vector<int> all(static_cast<std::size_t>(p.size - 1));
                std::iota(all.begin(), all.end(), 1);
                std::shuffle(all.begin(), all.end(), rng);
                cuts.assign(all.begin(), all.begin() + (t - 1));
            } else {
                std::uniform_int_distribution<int> pick(1, p.size - 1);
                while (static_cast<int>(cuts.size()) < t - 1) {
                    const int c = pick(rng);
                    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
                }
            }
            std::sort(cuts.begin(), cuts.end());
            id = raw.add_internal(p.kind, std::vector<int>(static_cast<std::size_t>(t), -1));
            int prev = 0;
            for (int i = 0; i < t; ++i) {
                const int end = i + 1 < t ? cuts[static_cast<std::size_t>(i)] : p.size;
                stack.push_back({end - prev, flip(p.kind)});
                where.emplace_back(id, static_cast<std::size_t>(i));
                prev = end;
            }
        }
        if (parent < 0) raw.root = id;
        else raw.nodes[static_cast<std::size_t>(parent)].children[pos] = id;
    }
    return Cotree::from_raw(std::move(raw));
}

/// Caterpillar of stars: a spine of `spine` nodes with alternating labels,
/// each spine node also holding a star of `arms` leaves under the opposite
/// label (a clique under a union spine node, an independent set under a join
/// spine node). The sequences along the spine grow by one entry every two
/// levels, which is the quadratic case for per-node rebuilding.
inline Cotree star_of_stars(int spine, int arms) {
    if (spine < 1 || arms < 2) throw precondition_error("star_of_stars needs spine >= 1 and arms >= 2");
    RawTree raw;
    vertex next = 0;
    auto star = [&](NodeKind kind) {
        std::vector<int> leaves;
        for (int i = 0; i < arms; ++i) leaves.push_back(raw.add_leaf(next++));
        return raw.add_internal(kind, std::move(leaves));
    };
    // Bottom spine node is a bare star; every level above adds one more.
    int below = star(NodeKind::join_node);
    NodeKind kind = NodeKind::union_node;
    for (int i = 1; i < spine; ++i) {
        const int s = star(flip(kind));
        below = raw.add_internal(kind, {below, s});
        kind = flip(kind);
    }
    raw.root = below;
    return Cotree::from_raw(std::move(raw));
}

/// Star-of-stars with about n leaves. Two arms per star gives the longest
/// spine for a given n.
inline Cotree star_of_stars_with_order(int n, int arms = 2) { return star_of_stars(std::max(1, n / arms), arms); }

/// G(n, p) random graph.
template <class Rng>
Graph random_graph(int n, double p, Rng& rng) {
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

} // namespace cokl

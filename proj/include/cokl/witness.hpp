#pragma once

#include <cstddef>
#include <vector>

#include "cokl/graph.hpp"

namespace cokl {

/// A partition of V(G) into at most k independent sets and at most l cliques.
struct KLColouring {
    std::size_t k = 0;
    std::size_t l = 0;
    std::vector<std::vector<vertex>> independent_sets;
    std::vector<std::vector<vertex>> cliques;

    friend bool operator==(const KLColouring&, const KLColouring&) = default;
};

/// Vertex set inducing a box cograph of dimension k times l.
struct BoxCertificate {
    std::size_t k = 0;
    std::size_t l = 0;
    std::vector<vertex> vertices;

    friend bool operator==(const BoxCertificate&, const BoxCertificate&) = default;
};

/// Checks the colouring against g: part counts within (k, l), parts
/// pairwise disjoint and covering V(g), each part of the right kind.
inline bool is_valid_colouring(const Graph& g, const KLColouring& c) {
    if (c.independent_sets.size() > c.k || c.cliques.size() > c.l) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::size_t covered = 0;
    auto claim = [&](const std::vector<vertex>& part) {
        for (vertex v : part) {
            if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
            ++covered;
        }
        return true;
    };
    for (const auto& s : c.independent_sets)
        if (!claim(s) || !is_independent_set(g, VertexSet(s))) return false;
    for (const auto& q : c.cliques)
        if (!claim(q) || !is_clique(g, VertexSet(q))) return false;
    return covered == static_cast<std::size_t>(g.order());
}

} // namespace cokl

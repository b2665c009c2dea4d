#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cokl.hpp"

namespace fixtures {

using cokl::Graph;
using cokl::GraphBuilder;

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

inline Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph empty(int n) { return GraphBuilder(n).build(); }

/// l disjoint copies of K_k.
inline Graph cliques(int k, int l) {
    Graph g = complete(k);
    for (int i = 1; i < l; ++i) g = cokl::disjoint_union(g, complete(k));
    return g;
}

/// Seven-vertex non-cograph with kappa-hat (3,3,1) and lambda-hat (3,2,2);
/// in 1-indexed form its edges are 12,13,23,36,37,45,46,47,56,57.
inline Graph seven_vertex_example() {
    return from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
}

/// Eleven-vertex cograph whose cotree has a join root with three children.
inline cokl::Cotree eleven_vertex_cotree() {
    return cokl::parse_cotree_text("1(0(1(a,b,c),d),0(1(e,f),1(g,h)),0(i,j,k))");
}

/// K3 + K2 + K2 and K4 + K2 + K1, whose union exercises the column merge.
inline cokl::Cotree merge_example() {
    return cokl::parse_cotree_text("0(1(a,b,c),1(d,e),1(f,g),1(h,i,j,k),1(l,m),n)");
}

/// Split graph: clique {0,1,2} with pendant vertices 3, 4 on vertex 0.
inline Graph split_example() { return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}); }

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                ok = a.adjacent(u, v) == b.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Random cographs with n drawn uniformly from [lo, hi].
inline std::vector<cokl::Cotree> random_cotrees(std::size_t count, int lo, int hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(lo, hi);
    std::vector<cokl::Cotree> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(cokl::random_cotree(size(rng), rng));
    return out;
}

} // namespace fixtures

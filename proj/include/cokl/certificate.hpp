#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cokl/colouring.hpp"
#include "cokl/cotree.hpp"
#include "cokl/kappa.hpp"
#include "cokl/witness.hpp"

namespace cokl {

/// BOX COGRAPH: top-down, each node receives a constant sequence [r]^s with
/// kappa_{s-1}(node) >= r. A union node splits s among its children, a join
/// node splits r; children that receive nothing are skipped. Leaves reached
/// with [1]^1 form the certificate.
///
/// Greedy first-fit: child i takes as much as it can carry. At a union node
/// child i carries s_i = #{entries >= r of its kappa-hat}; at a join node
/// r_i = kappa_{s-1}(child). Both add up to the parent's capacity, so the
/// greedy split never runs short.
template <TreeLike Tree>
BoxCertificate find_box_cograph(const Tree& t, const KappaAnnotations& ann, std::size_t k, std::size_t l) {
    if (k < 1 || l < 1) throw precondition_error("box dimensions must be at least 1");
    if (ann.size() != t.node_count()) throw precondition_error("annotations do not match the tree");
    if (t.node_count() == 0 || static_cast<std::size_t>(kappa_at(ann.back(), l - 1)) < k)
        throw precondition_error("graph is (" + std::to_string(k - 1) + "," + std::to_string(l - 1) +
                                 ")-colourable; no box cograph of dimension " + std::to_string(k) + "x" +
                                 std::to_string(l) + " exists");

    struct Item {
        int node;
        int r, s;
    };
    BoxCertificate out;
    out.k = k;
    out.l = l;
    std::vector<Item> stack{{t.root(), static_cast<int>(k), static_cast<int>(l)}};
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const auto& nd = t.node(it.node);
        if (nd.is_leaf()) {
            if (it.r != 1 || it.s != 1) throw std::logic_error("box cograph split reached a leaf with a non-unit share");
            out.vertices.push_back(nd.v);
            continue;
        }
        int rem = nd.kind == NodeKind::union_node ? it.s : it.r;
        for (int c : nd.children) {
            if (rem == 0) break;
            const auto& kc = ann[static_cast<std::size_t>(c)];
            if (nd.kind == NodeKind::union_node) {
                const int share = std::min(rem, static_cast<int>(kc.count_at_least(it.r)));
                if (share > 0) stack.push_back({c, it.r, share});
                rem -= share;
            } else {
                const int share = std::min(rem, kappa_at(kc, static_cast<std::size_t>(it.s - 1)));
                if (share > 0) stack.push_back({c, share, it.s});
                rem -= share;
            }
        }
        if (rem != 0) throw std::logic_error("box cograph split left a remainder");
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

template <TreeLike Tree>
BoxCertificate find_box_cograph(const Tree& t, std::size_t k, std::size_t l) {
    return find_box_cograph(t, kappa_annotations(t), k, l);
}

enum class BoxCheck {
    ok,
    size_mismatch,  ///< |vertices| != k*l
    invalid_vertex, ///< out of range or repeated
    not_cograph,    ///< induced subgraph contains a P4
    kappa_mismatch, ///< kappa-hat of the induced subgraph is not [k]^l
};

inline std::string_view describe(BoxCheck c) {
    switch (c) {
    case BoxCheck::ok: return "ok";
    case BoxCheck::size_mismatch: return "vertex count differs from k*l";
    case BoxCheck::invalid_vertex: return "vertex out of range or repeated";
    case BoxCheck::not_cograph: return "induced subgraph is not a cograph";
    case BoxCheck::kappa_mismatch: return "kappa-hat of the induced subgraph is not [k]^l";
    }
    return "unknown";
}

inline BoxCheck check_box_cograph(const Graph& g, const BoxCertificate& cert) {
    if (cert.k == 0 || cert.l == 0 || cert.vertices.size() != cert.k * cert.l) return BoxCheck::size_mismatch;
    std::vector<vertex> sorted = cert.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return BoxCheck::invalid_vertex;
    if (sorted.front() < 0 || sorted.back() >= g.order()) return BoxCheck::invalid_vertex;
    auto built = build_cotree(induced_subgraph(g, VertexSet(sorted)));
    const auto* tree = std::get_if<Cotree>(&built);
    if (!tree) return BoxCheck::not_cograph;
    if (kappa_hat(*tree) != PartitionSequence::box(static_cast<int>(cert.k), static_cast<int>(cert.l)))
        return BoxCheck::kappa_mismatch;
    return BoxCheck::ok;
}

inline bool verify_box_cograph(const Graph& g, const BoxCertificate& cert) {
    return check_box_cograph(g, cert) == BoxCheck::ok;
}

using ColourabilityAnswer = std::variant<KLColouring, BoxCertificate>;

/// A (k,l)-colouring if one exists, otherwise an induced box cograph of
/// dimension (k+1) x (l+1).
template <TreeLike Tree>
ColourabilityAnswer certify_non_colourable(const Tree& t, std::size_t k, std::size_t l) {
    auto ann = kappa_annotations(t);
    if (!ann.empty() && is_kl_colourable(ann.back(), k, l)) return read_colouring(build_ferrers(t), k, l);
    return find_box_cograph(t, ann, k + 1, l + 1);
}

} // namespace cokl

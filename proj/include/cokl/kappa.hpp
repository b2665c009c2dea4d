#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cokl/cotree.hpp"
#include "cokl/partition_sequence.hpp"

namespace cokl {

/// kappa-hat of every node, indexed like tree.nodes().
using KappaAnnotations = std::vector<PartitionSequence>;

/// Bottom-up KAPPA on plain arrays: leaves get (1), union nodes fold their
/// children with *, join nodes with entrywise +. O(n^2) in the worst case.
template <TreeLike Tree>
KappaAnnotations kappa_annotations(const Tree& t) {
    KappaAnnotations out(t.node_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            out[i] = PartitionSequence{1};
            continue;
        }
        PartitionSequence acc = out[static_cast<std::size_t>(nd.children[0])];
        for (std::size_t c = 1; c < nd.children.size(); ++c) {
            const auto& child = out[static_cast<std::size_t>(nd.children[c])];
            acc = nd.kind == NodeKind::union_node ? star_merge(acc, child) : entrywise_add(acc, child);
        }
        out[i] = std::move(acc);
    }
    return out;
}

/// Root value of kappa_annotations, releasing each child once consumed.
template <TreeLike Tree>
PartitionSequence kappa_hat_naive(const Tree& t) {
    if (t.node_count() == 0) return {};
    std::vector<PartitionSequence> val(t.node_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            val[i] = PartitionSequence{1};
            continue;
        }
        PartitionSequence acc = std::move(val[static_cast<std::size_t>(nd.children[0])]);
        for (std::size_t c = 1; c < nd.children.size(); ++c) {
            auto& child = val[static_cast<std::size_t>(nd.children[c])];
            acc = nd.kind == NodeKind::union_node ? star_merge(acc, child) : entrywise_add(acc, child);
            child = {};
        }
        val[i] = std::move(acc);
    }
    return std::move(val.back());
}

/// lambda-hat with the operators swapped: union nodes add, join nodes merge.
template <TreeLike Tree>
PartitionSequence lambda_hat(const Tree& t) {
    if (t.node_count() == 0) return {};
    std::vector<PartitionSequence> val(t.node_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            val[i] = PartitionSequence{1};
            continue;
        }
        PartitionSequence acc = std::move(val[static_cast<std::size_t>(nd.children[0])]);
        for (std::size_t c = 1; c < nd.children.size(); ++c) {
            auto& child = val[static_cast<std::size_t>(nd.children[c])];
            acc = nd.kind == NodeKind::join_node ? star_merge(acc, child) : entrywise_add(acc, child);
            child = {};
        }
        val[i] = std::move(acc);
    }
    return std::move(val.back());
}

/// lambda-hat as the conjugate of kappa-hat.
template <TreeLike Tree>
PartitionSequence lambda_hat_via_conjugate(const Tree& t) {
    return conjugate(kappa_hat_naive(t));
}

namespace detail {

/// kappa-hat in run-length form, largest value first.
using RunMap = std::map<int, int, std::greater<>>;

/// Merges `small` into `big` as multisets (union node). O(|runs(small)| log).
inline void star_into(RunMap& big, const RunMap& small) {
    for (auto [value, mult] : small) big[value] += mult;
}

/// Adds `small` entrywise onto the prefix of `big` (join node).
/// Touches O(|small|) runs of `big`; new values exceed every untouched one,
/// so they are inserted at the front with a hint.
inline void add_into(RunMap& big, const RunMap& small) {
    std::vector<std::pair<int, int>> sums;
    auto push = [&](int value, int mult) {
        if (!sums.empty() && sums.back().first == value) sums.back().second += mult;
        else sums.emplace_back(value, mult);
    };
    auto it = big.begin();
    for (auto [sv, sm] : small) {
        while (sm > 0) {
            if (it == big.end()) {
                push(sv, sm);
                break;
            }
            const int take = std::min(sm, it->second);
            push(sv + it->first, take);
            sm -= take;
            it->second -= take;
            if (it->second == 0) it = big.erase(it);
        }
    }
    for (auto r = sums.rbegin(); r != sums.rend(); ++r) big.emplace_hint(big.begin(), r->first, r->second);
}

} // namespace detail

/// KAPPA on a pseudocotree with run-length sequences, merging the child with
/// fewer leaves into the other. O(n log n) overall.
inline PartitionSequence kappa_hat_fast(const Pseudocotree& t) {
    if (t.node_count() == 0) return {};
    std::vector<detail::RunMap> val(t.node_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            val[i].emplace(1, 1);
            continue;
        }
        auto a = static_cast<std::size_t>(nd.children[0]);
        auto b = static_cast<std::size_t>(nd.children[1]);
        if (t.node(nd.children[0]).leaves > t.node(nd.children[1]).leaves) std::swap(a, b);
        detail::RunMap big = std::move(val[b]);
        if (nd.kind == NodeKind::union_node) detail::star_into(big, val[a]);
        else detail::add_into(big, val[a]);
        detail::RunMap().swap(val[a]);
        val[i] = std::move(big);
    }
    std::vector<PartitionSequence::Run> runs(val.back().begin(), val.back().end());
    return PartitionSequence::from_runs(runs);
}

inline PartitionSequence kappa_hat_fast(const Cotree& t) { return kappa_hat_fast(binarize(t)); }

/// Default kappa-hat: the run-length variant.
template <TreeLike Tree>
PartitionSequence kappa_hat(const Tree& t) {
    return kappa_hat_fast(t);
}

/// Chromatic number chi = kappa_0 and clique cover number theta = |kappa-hat|.
struct ColouringParameters {
    int chi = 0;
    int theta = 0;
    int bichromatic = 0;
    int cochromatic = 0;
    friend bool operator==(const ColouringParameters&, const ColouringParameters&) = default;
};

inline ColouringParameters parameters_from_kappa(const PartitionSequence& kappa) {
    if (kappa.empty()) return {};
    return {kappa[0], static_cast<int>(kappa.size()), bichromatic_number(kappa), cochromatic_number(kappa)};
}

} // namespace cokl

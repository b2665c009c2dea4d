#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "cokl/error.hpp"
#include "cokl/graph.hpp"

namespace cokl {

enum class NodeKind : std::uint8_t {
    leaf,
    union_node, ///< label 0: disjoint union of the children
    join_node,  ///< label 1: join of the children
};

inline int label_of(NodeKind k) { return k == NodeKind::join_node ? 1 : 0; }
inline NodeKind flip(NodeKind k) {
    switch (k) {
    case NodeKind::union_node: return NodeKind::join_node;
    case NodeKind::join_node: return NodeKind::union_node;
    default: return k;
    }
}

struct CotreeNode {
    NodeKind kind = NodeKind::leaf;
    vertex v = -1;              ///< leaves only
    std::vector<int> children;  ///< internal nodes only
    int leaves = 1;             ///< number of descendant leaves
    vertex min_vertex = -1;     ///< smallest descendant vertex id

    bool is_leaf() const noexcept { return kind == NodeKind::leaf; }
};

/// Unvalidated tree used while building, parsing, or transforming.
struct RawTree {
    std::vector<CotreeNode> nodes;
    int root = -1;
    std::vector<std::string> names;

    int add_leaf(vertex v) {
        CotreeNode n;
        n.v = v;
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
    int add_internal(NodeKind kind, std::vector<int> children) {
        CotreeNode n;
        n.kind = kind;
        n.children = std::move(children);
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
};

namespace detail {

/// Shared storage of Cotree and Pseudocotree.
///
/// Nodes are stored in post-order: every child index is smaller than its
/// parent's, and the root is the last node. Bottom-up passes are therefore a
/// forward loop and top-down passes a backward loop.
class TreeStorage {
public:
    const std::vector<CotreeNode>& nodes() const noexcept { return nodes_; }
    const CotreeNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    int root() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
    int order() const noexcept { return static_cast<int>(leaf_of_.size()); }
    int leaf_of(vertex v) const { return leaf_of_[static_cast<std::size_t>(v)]; }

    bool has_names() const noexcept { return !names_.empty(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::string name(vertex v) const { return names_.empty() ? std::to_string(v) : names_[static_cast<std::size_t>(v)]; }

protected:
    /// Renumbers `raw` into post-order starting at raw.root, recomputes the
    /// per-node summaries and checks that leaves biject with 0..n-1.
    void adopt(RawTree raw, bool canonical_order) {
        if (raw.root < 0 || raw.root >= static_cast<int>(raw.nodes.size()))
            throw precondition_error("tree has no root");
        auto& in = raw.nodes;

        // Post-order of the reachable part, computed iteratively.
        std::vector<int> order;
        order.reserve(in.size());
        std::vector<std::pair<int, std::size_t>> stack{{raw.root, 0}};
        while (!stack.empty()) {
            auto& [id, next] = stack.back();
            auto& nd = in[static_cast<std::size_t>(id)];
            if (next < nd.children.size()) {
                const int child = nd.children[next++];
                if (child < 0 || child >= static_cast<int>(in.size()))
                    throw precondition_error("child index out of range");
                stack.emplace_back(child, 0);
                if (stack.size() > in.size()) throw precondition_error("tree contains a cycle");
            } else {
                order.push_back(id);
                stack.pop_back();
                if (order.size() > in.size()) throw precondition_error("tree contains a cycle or shared node");
            }
        }

        // Summaries, then optional canonical child order, then renumbering.
        for (int id : order) {
            auto& nd = in[static_cast<std::size_t>(id)];
            if (nd.is_leaf()) {
                if (!nd.children.empty()) throw precondition_error("leaf with children");
                nd.leaves = 1;
                nd.min_vertex = nd.v;
            } else {
                if (nd.children.empty()) throw precondition_error("internal node without children");
                nd.leaves = 0;
                nd.min_vertex = -1;
                for (int c : nd.children) {
                    const auto& ch = in[static_cast<std::size_t>(c)];
                    nd.leaves += ch.leaves;
                    if (nd.min_vertex < 0 || ch.min_vertex < nd.min_vertex) nd.min_vertex = ch.min_vertex;
                }
            }
        }
        if (canonical_order) {
            for (int id : order) {
                auto& ch = in[static_cast<std::size_t>(id)].children;
                std::sort(ch.begin(), ch.end(), [&](int a, int b) {
                    const auto& x = in[static_cast<std::size_t>(a)];
                    const auto& y = in[static_cast<std::size_t>(b)];
                    return std::tie(x.leaves, x.min_vertex) < std::tie(y.leaves, y.min_vertex);
                });
            }
            // Child order changed, so the post-order must be recomputed.
            order.clear();
            stack.assign(1, {raw.root, 0});
            while (!stack.empty()) {
                auto& [id, next] = stack.back();
                auto& nd = in[static_cast<std::size_t>(id)];
                if (next < nd.children.size()) {
                    stack.emplace_back(nd.children[next++], 0);
                } else {
                    order.push_back(id);
                    stack.pop_back();
                }
            }
        }

        std::vector<int> renumber(in.size(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) renumber[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        nodes_.clear();
        nodes_.reserve(order.size());
        int n = 0;
        for (int id : order) {
            CotreeNode nd = std::move(in[static_cast<std::size_t>(id)]);
            for (int& c : nd.children) c = renumber[static_cast<std::size_t>(c)];
            if (nd.is_leaf()) ++n;
            nodes_.push_back(std::move(nd));
        }

        leaf_of_.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const auto& nd = nodes_[i];
            if (!nd.is_leaf()) continue;
            if (nd.v < 0 || nd.v >= n) throw precondition_error("leaf vertex ids must be exactly 0..n-1");
            if (leaf_of_[static_cast<std::size_t>(nd.v)] != -1)
                throw precondition_error("vertex " + std::to_string(nd.v) + " appears on two leaves");
            leaf_of_[static_cast<std::size_t>(nd.v)] = static_cast<int>(i);
        }
        if (!raw.names.empty() && raw.names.size() != static_cast<std::size_t>(n))
            throw precondition_error("name count does not match leaf count");
        names_ = std::move(raw.names);
    }

    RawTree raw_copy() const {
        RawTree raw;
        raw.nodes = nodes_;
        raw.root = root();
        raw.names = names_;
        return raw;
    }

    std::vector<CotreeNode> nodes_;
    std::vector<int> leaf_of_;
    std::vector<std::string> names_;
};

} // namespace detail

class Pseudocotree;

/// Anything with the TreeStorage read interface.
template <class T>
concept TreeLike = std::derived_from<T, detail::TreeStorage>;

/// Canonical cotree: labels alternate along every root path, every internal
/// node has at least two children, and children are ordered by
/// (leaf count, smallest descendant vertex id).
class Cotree : public detail::TreeStorage {
public:
    /// Normalises any union/join tree into the canonical cotree of the graph
    /// it represents: same-label parent/child pairs are merged and
    /// single-child internal nodes are spliced out.
    static Cotree from_raw(RawTree raw) {
        RawTree flat;
        flat.names = std::move(raw.names);
        if (raw.root < 0) throw precondition_error("tree has no root");
        // Iterative rebuild: (raw id, output parent or -1).
        std::vector<std::pair<int, int>> stack{{raw.root, -1}};
        std::vector<std::vector<int>> kids;
        std::size_t guard = 0;
        while (!stack.empty()) {
            auto [id, parent] = stack.back();
            stack.pop_back();
            if (++guard > 4 * raw.nodes.size() + 4) throw precondition_error("tree contains a cycle");
            if (id < 0 || id >= static_cast<int>(raw.nodes.size())) throw precondition_error("child index out of range");
            const auto& nd = raw.nodes[static_cast<std::size_t>(id)];
            int out = -1;
            if (nd.is_leaf()) {
                out = flat.add_leaf(nd.v);
            } else if (nd.children.size() == 1) {
                stack.emplace_back(nd.children.front(), parent);
                continue;
            } else if (parent >= 0 && flat.nodes[static_cast<std::size_t>(parent)].kind == nd.kind) {
                for (int c : nd.children) stack.emplace_back(c, parent);
                continue;
            } else {
                if (nd.children.empty()) throw precondition_error("internal node without children");
                out = flat.add_internal(nd.kind, {});
                for (int c : nd.children) stack.emplace_back(c, out);
            }
            kids.emplace_back();
            if (parent >= 0) kids[static_cast<std::size_t>(parent)].push_back(out);
            else flat.root = out;
        }
        for (std::size_t i = 0; i < flat.nodes.size(); ++i) flat.nodes[i].children = std::move(kids[i]);
        Cotree t;
        t.adopt(std::move(flat), true);
        return t;
    }

    /// The cotree of the complement graph: every label flipped.
    Cotree flipped() const {
        Cotree t = *this;
        for (auto& nd : t.nodes_) nd.kind = flip(nd.kind);
        return t;
    }

    /// Structural invariants: alternation, >= 2 children, canonical order.
    bool valid() const {
        for (const auto& nd : nodes_) {
            if (nd.is_leaf()) continue;
            if (nd.children.size() < 2) return false;
            for (std::size_t i = 0; i < nd.children.size(); ++i) {
                const auto& ch = node(nd.children[i]);
                if (ch.kind == nd.kind) return false;
                if (i > 0) {
                    const auto& prev = node(nd.children[i - 1]);
                    if (std::tie(prev.leaves, prev.min_vertex) > std::tie(ch.leaves, ch.min_vertex)) return false;
                }
            }
        }
        return true;
    }

    Cotree with_names(std::vector<std::string> names) const {
        if (!names.empty() && names.size() != leaf_of_.size()) throw precondition_error("name count does not match leaf count");
        Cotree t = *this;
        t.names_ = std::move(names);
        return t;
    }

    friend bool operator==(const Cotree& a, const Cotree& b) {
        if (a.nodes_.size() != b.nodes_.size()) return false;
        for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
            const auto& x = a.nodes_[i];
            const auto& y = b.nodes_[i];
            if (x.kind != y.kind || x.v != y.v || x.children != y.children) return false;
        }
        return true;
    }

private:
    friend Pseudocotree binarize(const Cotree&);
    friend Cotree to_cotree(const Pseudocotree&);
};

/// Binary union/join tree; labels may repeat along a root path.
class Pseudocotree : public detail::TreeStorage {
public:
    static Pseudocotree from_raw(RawTree raw) {
        Pseudocotree t;
        t.adopt(std::move(raw), false);
        for (const auto& nd : t.nodes_)
            if (!nd.is_leaf() && nd.children.size() != 2) throw precondition_error("pseudocotree node without exactly two children");
        return t;
    }

    bool valid() const {
        return std::all_of(nodes_.begin(), nodes_.end(),
                           [](const CotreeNode& nd) { return nd.is_leaf() || nd.children.size() == 2; });
    }

private:
    friend Pseudocotree binarize(const Cotree&);
    friend Cotree to_cotree(const Pseudocotree&);
};

/// Expands each t-ary node into t-1 same-label binary nodes, left-deep:
/// op(c1..ct) becomes op(...op(op(c1,c2),c3)...,ct).
inline Pseudocotree binarize(const Cotree& t) {
    RawTree raw;
    raw.names = t.names();
    raw.nodes.reserve(2 * static_cast<std::size_t>(t.order()));
    std::vector<int> image(t.node_count(), -1);
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            image[i] = raw.add_leaf(nd.v);
            continue;
        }
        int acc = image[static_cast<std::size_t>(nd.children[0])];
        for (std::size_t c = 1; c < nd.children.size(); ++c)
            acc = raw.add_internal(nd.kind, {acc, image[static_cast<std::size_t>(nd.children[c])]});
        image[i] = acc;
    }
    raw.root = image.back();
    Pseudocotree p;
    p.adopt(std::move(raw), false);
    return p;
}

/// Canonical cotree of the graph a pseudocotree represents.
inline Cotree to_cotree(const Pseudocotree& p) { return Cotree::from_raw(p.raw_copy()); }

/// Graph represented by a (pseudo)cotree: u ~ v iff the lowest common
/// ancestor of their leaves is a join node. Runs in O(n + m).
template <TreeLike Tree>
Graph evaluate_cotree(const Tree& t) {
    const int n = t.order();
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    // Leaves of each subtree as a contiguous range of `leaf_seq`.
    std::vector<vertex> leaf_seq;
    leaf_seq.reserve(static_cast<std::size_t>(n));
    std::vector<int> first(t.node_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            first[i] = static_cast<int>(leaf_seq.size());
            leaf_seq.push_back(nd.v);
        } else {
            first[i] = first[static_cast<std::size_t>(nd.children.front())];
            if (nd.kind != NodeKind::join_node) continue;
            for (std::size_t a = 0; a < nd.children.size(); ++a) {
                const auto& ca = t.node(nd.children[a]);
                const int fa = first[static_cast<std::size_t>(nd.children[a])];
                for (std::size_t b = a + 1; b < nd.children.size(); ++b) {
                    const auto& cb = t.node(nd.children[b]);
                    const int fb = first[static_cast<std::size_t>(nd.children[b])];
                    for (int x = fa; x < fa + ca.leaves; ++x)
                        for (int y = fb; y < fb + cb.leaves; ++y) {
                            const auto u = static_cast<std::size_t>(leaf_seq[static_cast<std::size_t>(x)]);
                            const auto w = static_cast<std::size_t>(leaf_seq[static_cast<std::size_t>(y)]);
                            rows[u].set(w);
                            rows[w].set(u);
                        }
                }
            }
        }
    }
    GraphBuilder b(n);
    for (vertex v = 0; v < n; ++v) b.set_row(v, rows[static_cast<std::size_t>(v)]);
    b.labels(t.names());
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Recognition

struct P4Witness {
    std::array<vertex, 4> path{}; ///< path[0]-path[1]-path[2]-path[3]
    friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

/// The six adjacency constraints of an induced path a-b-c-d.
inline bool is_induced_p4(const Graph& g, const P4Witness& w) {
    const auto [a, b, c, d] = w.path;
    for (vertex x : w.path)
        if (x < 0 || x >= g.order()) return false;
    if (a == b || a == c || a == d || b == c || b == d || c == d) return false;
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) && !g.adjacent(a, d) &&
           !g.adjacent(b, d);
}

namespace detail {

inline vertex first_in(const Bitset& s) { return static_cast<vertex>(s.find_first()); }

/// Finds an induced P4 inside `s`, where g[s] and its complement are both
/// connected. Deletes vertices until the rest splits, then reads the path
/// off the split.
inline P4Witness p4_in_prime_part(const Graph& g, Bitset s) {
    for (auto v = s.find_first(); v != Bitset::npos; v = s.find_first()) {
        const auto vx = static_cast<vertex>(v);
        Bitset rest = s;
        rest.reset(v);
        const Bitset& nv = g.row(vx);

        auto comps = components(g, rest);
        if (comps.size() > 1) {
            // v has neighbours in every component and a non-neighbour in one;
            // inside that component some neighbour a of v sees a non-neighbour m.
            for (std::size_t i = 0; i < comps.size(); ++i) {
                Bitset non = comps[i] - nv;
                if (non.none()) continue;
                Bitset nbr = comps[i] & nv;
                for (auto a = nbr.find_first(); a != Bitset::npos; a = nbr.find_next(a)) {
                    Bitset hit = non & g.row(static_cast<vertex>(a));
                    if (hit.none()) continue;
                    const std::size_t j = i == 0 ? 1 : 0;
                    const vertex b = first_in(comps[j] & nv);
                    return {{b, vx, static_cast<vertex>(a), first_in(hit)}};
                }
            }
            throw precondition_error("internal: no P4 found in disconnected split");
        }

        auto cocomps = co_components(g, rest);
        if (cocomps.size() > 1) {
            // Mirror image in the complement: inside one co-component a
            // non-neighbour a of v misses a neighbour m of v.
            for (std::size_t i = 0; i < cocomps.size(); ++i) {
                Bitset nbr = cocomps[i] & nv;
                if (nbr.none()) continue;
                Bitset non = cocomps[i] - nv;
                for (auto a = non.find_first(); a != Bitset::npos; a = non.find_next(a)) {
                    Bitset hit = nbr - g.row(static_cast<vertex>(a));
                    if (hit.none()) continue;
                    const std::size_t j = i == 0 ? 1 : 0;
                    const vertex b = first_in(cocomps[j] - nv);
                    return {{static_cast<vertex>(a), b, first_in(hit), vx}};
                }
            }
            throw precondition_error("internal: no P4 found in co-disconnected split");
        }
        s = std::move(rest);
    }
    throw precondition_error("internal: prime part exhausted without a P4");
}

struct Decomposition {
    RawTree tree;
    std::optional<P4Witness> p4;
};

/// Recursion on components (union node) or co-components (join node).
inline Decomposition decompose(const Graph& g) {
    Decomposition out;
    auto& raw = out.tree;
    struct Item {
        Bitset set;
        int parent;
    };
    std::vector<Item> stack;
    stack.push_back({all_vertices(g), -1});
    std::vector<std::vector<int>> kids;
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        int id = -1;
        if (item.set.count() == 1) {
            id = raw.add_leaf(first_in(item.set));
        } else {
            auto parts = components(g, item.set);
            NodeKind kind = NodeKind::union_node;
            if (parts.size() == 1) {
                parts = co_components(g, item.set);
                kind = NodeKind::join_node;
            }
            if (parts.size() == 1) {
                out.p4 = p4_in_prime_part(g, std::move(item.set));
                return out;
            }
            id = raw.add_internal(kind, {});
            for (auto& p : parts) stack.push_back({std::move(p), id});
        }
        kids.emplace_back();
        if (item.parent >= 0) kids[static_cast<std::size_t>(item.parent)].push_back(id);
        else raw.root = id;
    }
    for (std::size_t i = 0; i < raw.nodes.size(); ++i) raw.nodes[i].children = std::move(kids[i]);
    return out;
}

} // namespace detail

/// Canonical cotree of g, or an induced P4 proving g is not a cograph.
inline std::variant<Cotree, P4Witness> build_cotree(const Graph& g) {
    if (g.order() == 0) throw precondition_error("cotree of the empty graph is undefined");
    auto d = detail::decompose(g);
    if (d.p4) return *d.p4;
    d.tree.names = g.labels();
    return Cotree::from_raw(std::move(d.tree));
}

inline bool is_cograph(const Graph& g) {
    return g.order() == 0 || std::holds_alternative<Cotree>(build_cotree(g));
}

/// An induced P4 of a non-cograph.
inline P4Witness find_p4(const Graph& g) {
    if (g.order() == 0) throw precondition_error("the empty graph is a cograph");
    auto d = detail::decompose(g);
    if (!d.p4) throw precondition_error("graph is a cograph; it has no induced P4");
    return *d.p4;
}

// ---------------------------------------------------------------------------
// Text form: leaf names, internal nodes "0(...)" / "1(...)".

template <TreeLike Tree>
std::string to_text(const Tree& t) {
    std::string out;
    std::vector<std::pair<int, std::size_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        const auto& nd = t.node(id);
        if (nd.is_leaf()) {
            out += t.name(nd.v);
            stack.pop_back();
            continue;
        }
        if (next == 0) {
            out += nd.kind == NodeKind::join_node ? "1(" : "0(";
        } else if (next == nd.children.size()) {
            out += ')';
            stack.pop_back();
            continue;
        } else {
            out += ',';
        }
        stack.emplace_back(nd.children[next++], 0);
    }
    return out;
}

/// Parses the nested text form into a RawTree. Leaf tokens that are all
/// naturals forming {0..n-1} are used as vertex ids; otherwise leaves get
/// ids in order of appearance and the tokens are kept as names.
inline RawTree parse_tree_text(std::string_view text) {
    RawTree raw;
    std::vector<std::string> tokens;
    std::vector<int> token_leaf;
    std::vector<std::pair<int, std::vector<int>>> open; // node id, children
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto is_name_char = [](char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',';
    };
    auto attach = [&](int id) {
        if (open.empty()) {
            if (raw.root != -1) throw parse_error("text contains more than one tree");
            raw.root = id;
        } else {
            open.back().second.push_back(id);
        }
    };
    bool expect_item = true;
    skip_ws();
    while (i < text.size()) {
        if (expect_item) {
            std::size_t j = i;
            while (j < text.size() && is_name_char(text[j])) ++j;
            if (j == i) throw parse_error("expected a node at offset " + std::to_string(i));
            std::string tok(text.substr(i, j - i));
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == '(') {
                if (tok != "0" && tok != "1") throw parse_error("internal node label must be 0 or 1, got '" + tok + "'");
                const int id = raw.add_internal(tok == "1" ? NodeKind::join_node : NodeKind::union_node, {});
                open.emplace_back(id, std::vector<int>{});
                ++i;
                skip_ws();
                continue;
            }
            const int id = raw.add_leaf(-1);
            tokens.push_back(std::move(tok));
            token_leaf.push_back(id);
            attach(id);
            expect_item = false;
        } else if (text[i] == ',') {
            if (open.empty()) throw parse_error("unexpected ','");
            ++i;
            expect_item = true;
        } else if (text[i] == ')') {
            if (open.empty()) throw parse_error("unbalanced ')'");
            auto [id, ch] = std::move(open.back());
            open.pop_back();
            if (ch.empty()) throw parse_error("internal node without children");
            raw.nodes[static_cast<std::size_t>(id)].children = std::move(ch);
            attach(id);
            ++i;
        } else {
            throw parse_error("unexpected character '" + std::string(1, text[i]) + "'");
        }
        skip_ws();
    }
    if (!open.empty() || expect_item || raw.root == -1) throw parse_error("incomplete tree text");

    const std::size_t n = tokens.size();
    std::vector<int> ids(n, -1);
    std::vector<bool> seen(n, false);
    bool numeric = true;
    for (std::size_t k = 0; k < n && numeric; ++k) {
        auto v = detail::parse_natural(tokens[k]);
        if (!v || *v >= static_cast<long long>(n) || seen[static_cast<std::size_t>(*v)]) numeric = false;
        else {
            seen[static_cast<std::size_t>(*v)] = true;
            ids[k] = static_cast<int>(*v);
        }
    }
    if (!numeric) {
        std::unordered_map<std::string, int> by_name;
        for (std::size_t k = 0; k < n; ++k) {
            if (!by_name.emplace(tokens[k], static_cast<int>(k)).second)
                throw parse_error("leaf name '" + tokens[k] + "' appears twice");
            ids[k] = static_cast<int>(k);
        }
        raw.names = tokens;
    }
    for (std::size_t k = 0; k < n; ++k) raw.nodes[static_cast<std::size_t>(token_leaf[k])].v = ids[k];
    return raw;
}

inline Cotree parse_cotree_text(std::string_view text) { return Cotree::from_raw(parse_tree_text(text)); }

} // namespace cokl

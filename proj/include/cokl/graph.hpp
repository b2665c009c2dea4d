#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cokl/error.hpp"

namespace cokl {

using vertex = int;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Ordered set of distinct vertex identifiers. Order is kept because
/// induced_subgraph relabels members in the order given.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<vertex> members) : VertexSet(std::vector<vertex>(members)) {}
    explicit VertexSet(std::vector<vertex> members) : members_(std::move(members)) {
        std::vector<vertex> sorted = members_;
        std::sort(sorted.begin(), sorted.end());
        if (!sorted.empty() && sorted.front() < 0)
            throw precondition_error("vertex set contains a negative id");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw precondition_error("vertex set contains duplicates");
    }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    vertex operator[](std::size_t i) const { return members_[i]; }
    const std::vector<vertex>& members() const noexcept { return members_; }

    bool valid_for(int order) const noexcept {
        return std::all_of(members_.begin(), members_.end(), [order](vertex v) { return v < order; });
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held twice: a bit matrix for constant-time edge queries and
/// set algebra, and sorted neighbour lists for O(deg) iteration.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : rows_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))),
                            offsets_(static_cast<std::size_t>(n) + 1, 0) {}

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    bool adjacent(vertex u, vertex v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
    const Bitset& row(vertex v) const { return rows_[v]; }
    std::span<const vertex> neighbours(vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    std::string label(vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Same adjacency, new display names (one per vertex, or none).
    Graph with_labels(std::vector<std::string> labels) const {
        if (!labels.empty() && labels.size() != rows_.size())
            throw precondition_error("label count does not match vertex count");
        Graph g = *this;
        g.labels_ = std::move(labels);
        return g;
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<vertex, vertex>> edges() const {
        std::vector<std::pair<vertex, vertex>> out;
        out.reserve(edge_count());
        for (vertex u = 0; u < order(); ++u)
            for (vertex v : neighbours(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Adjacency equality; display labels are not compared.
    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;

    std::vector<Bitset> rows_;
    std::vector<int> offsets_{0};
    std::vector<vertex> targets_;
    std::vector<std::string> labels_;
};

/// Accumulates edges, then freezes them into a Graph. Duplicate edges collapse.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : rows_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {
        if (n < 0) throw precondition_error("negative vertex count");
    }

    int order() const noexcept { return static_cast<int>(rows_.size()); }

    GraphBuilder& add_edge(vertex u, vertex v) {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw precondition_error("edge endpoint out of range");
        if (u == v) throw precondition_error("self-loop on vertex " + std::to_string(u));
        rows_[u].set(static_cast<std::size_t>(v));
        rows_[v].set(static_cast<std::size_t>(u));
        return *this;
    }

    GraphBuilder& set_row(vertex u, const Bitset& row) {
        rows_[u] = row;
        return *this;
    }

    GraphBuilder& labels(std::vector<std::string> names) {
        labels_ = std::move(names);
        return *this;
    }

    Graph build() && {
        Graph g;
        const std::size_t n = rows_.size();
        g.offsets_.assign(n + 1, 0);
        for (std::size_t u = 0; u < n; ++u) {
            rows_[u].reset(u);
            g.offsets_[u + 1] = g.offsets_[u] + static_cast<int>(rows_[u].count());
        }
        g.targets_.resize(static_cast<std::size_t>(g.offsets_[n]));
        for (std::size_t u = 0; u < n; ++u) {
            auto out = g.targets_.begin() + g.offsets_[u];
            for (auto v = rows_[u].find_first(); v != Bitset::npos; v = rows_[u].find_next(v))
                *out++ = static_cast<vertex>(v);
        }
        g.rows_ = std::move(rows_);
        if (!labels_.empty() && labels_.size() != n)
            throw precondition_error("label count does not match vertex count");
        g.labels_ = std::move(labels_);
        return g;
    }

private:
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Input formats

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<long long> parse_natural(std::string_view tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) return std::nullopt;
    return value;
}

inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace detail

/// Parses "u v" lines with an optional leading vertex-count line.
/// Blank lines and '#' comments are ignored.
inline Graph parse_edge_list(std::string_view text) {
    std::optional<long long> declared;
    std::vector<std::pair<long long, long long>> edges;
    long long max_id = -1;
    bool seen_content = false;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() == 1 && !seen_content) {
            declared = detail::parse_natural(toks[0]);
            if (!declared) throw parse_error("malformed vertex count '" + std::string(toks[0]) + "'", line_no);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if (toks.size() != 2) throw parse_error("expected two vertex ids", line_no);
        auto u = detail::parse_natural(toks[0]);
        auto v = detail::parse_natural(toks[1]);
        if (!u || !v) throw parse_error("malformed vertex id", line_no);
        if (*u == *v) throw parse_error("self-loop on vertex " + std::to_string(*u), line_no);
        if (declared && (*u >= *declared || *v >= *declared))
            throw parse_error("vertex id exceeds declared count " + std::to_string(*declared), line_no);
        max_id = std::max({max_id, *u, *v});
        edges.emplace_back(*u, *v);
    }

    const long long n = declared ? *declared : max_id + 1;
    if (n > (1LL << 24)) throw parse_error("vertex count too large");
    GraphBuilder b(static_cast<int>(n));
    for (auto [u, v] : edges) b.add_edge(static_cast<vertex>(u), static_cast<vertex>(v));
    return std::move(b).build();
}

/// Decodes one graph6 string (optional ">>graph6<<" header, surrounding
/// whitespace tolerated).
inline Graph parse_graph6(std::string_view text) {
    text = detail::trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    for (char c : text)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw parse_error("graph6 byte outside printable range 63-126");
    if (text.empty()) throw parse_error("empty graph6 string");

    auto six = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - 63); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (six(0) < 63) {
        n = six(0);
        pos = 1;
    } else if (text.size() >= 2 && six(1) < 63) {
        if (text.size() < 4) throw parse_error("truncated graph6 size header");
        n = (six(1) << 12) | (six(2) << 6) | six(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw parse_error("truncated graph6 size header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | six(i);
        pos = 8;
    }
    if (n > (1ULL << 20)) throw parse_error("graph6 vertex count too large");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw parse_error("invalid graph6 length: expected " + std::to_string(bytes) + " data bytes, got " +
                          std::to_string(text.size() - pos));

    GraphBuilder b(static_cast<int>(n));
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            const std::uint64_t byte = six(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1U) b.add_edge(static_cast<vertex>(i), static_cast<vertex>(j));
        }
    return std::move(b).build();
}

inline std::string encode_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<vertex>(i), static_cast<vertex>(j)) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// Graph operations

inline Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    for (vertex u = 0; u < n; ++u) {
        Bitset row = ~g.row(u);
        row.reset(static_cast<std::size_t>(u));
        b.set_row(u, row);
    }
    b.labels(g.labels());
    return std::move(b).build();
}

namespace detail {

inline std::vector<std::string> combined_labels(const Graph& g, const Graph& h) {
    if (!g.has_labels() && !h.has_labels()) return {};
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(g.order() + h.order()));
    for (vertex v = 0; v < g.order(); ++v) out.push_back(g.label(v));
    for (vertex v = 0; v < h.order(); ++v) out.push_back(h.label(v));
    return out;
}

inline Graph combine(const Graph& g, const Graph& h, bool cross) {
    const int n = g.order() + h.order();
    GraphBuilder b(n);
    for (vertex u = 0; u < g.order(); ++u) {
        for (vertex v : g.neighbours(u))
            if (u < v) b.add_edge(u, v);
        if (cross)
            for (vertex w = 0; w < h.order(); ++w) b.add_edge(u, g.order() + w);
    }
    for (vertex u = 0; u < h.order(); ++u)
        for (vertex v : h.neighbours(u))
            if (u < v) b.add_edge(g.order() + u, g.order() + v);
    b.labels(combined_labels(g, h));
    return std::move(b).build();
}

} // namespace detail

/// G + H: h's ids are shifted by g.order(); no cross edges.
inline Graph disjoint_union(const Graph& g, const Graph& h) { return detail::combine(g, h, false); }

/// G ∨ H: disjoint union plus every cross edge.
inline Graph join(const Graph& g, const Graph& h) { return detail::combine(g, h, true); }

/// Members of s become 0..|s|-1 in the order given; each new vertex is
/// labelled with its label in g.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.valid_for(g.order())) throw precondition_error("vertex set out of range for graph");
    const int k = static_cast<int>(s.size());
    GraphBuilder b(k);
    std::vector<std::string> names;
    names.reserve(s.size());
    for (int i = 0; i < k; ++i) {
        names.push_back(g.label(s[static_cast<std::size_t>(i)]));
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)])) b.add_edge(i, j);
    }
    b.labels(std::move(names));
    return std::move(b).build();
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Connectivity restricted to a vertex subset

namespace detail {

template <bool InComplement>
std::vector<Bitset> components_within(const Graph& g, const Bitset& within) {
    std::vector<Bitset> out;
    Bitset unvisited = within;
    std::vector<std::size_t> queue;
    while (unvisited.any()) {
        Bitset comp(within.size());
        const auto start = unvisited.find_first();
        unvisited.reset(start);
        comp.set(start);
        queue.assign(1, start);
        while (!queue.empty()) {
            const auto u = queue.back();
            queue.pop_back();
            Bitset next = InComplement ? (unvisited - g.row(static_cast<vertex>(u)))
                                       : (unvisited & g.row(static_cast<vertex>(u)));
            for (auto w = next.find_first(); w != Bitset::npos; w = next.find_next(w)) {
                queue.push_back(w);
                comp.set(w);
            }
            unvisited -= next;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace detail

/// Connected components of g restricted to `within`.
inline std::vector<Bitset> components(const Graph& g, const Bitset& within) {
    return detail::components_within<false>(g, within);
}

/// Connected components of the complement of g restricted to `within`,
/// found without materialising the complement.
inline std::vector<Bitset> co_components(const Graph& g, const Bitset& within) {
    return detail::components_within<true>(g, within);
}

inline Bitset all_vertices(const Graph& g) {
    Bitset all(static_cast<std::size_t>(g.order()));
    all.set();
    return all;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g, all_vertices(g)).size() == 1; }

} // namespace cokl

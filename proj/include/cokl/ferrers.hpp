#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cokl/cotree.hpp"
#include "cokl/error.hpp"
#include "cokl/partition_sequence.hpp"
#include "cokl/witness.hpp"

namespace cokl {

/// Vertices placed on a Ferrers shape: each row an independent set, each
/// column a clique. Row lengths are non-increasing top to bottom, so column
/// j consists of rows[i][j] for every row i longer than j.
class FerrersRepresentation {
public:
    FerrersRepresentation() = default;
    explicit FerrersRepresentation(std::vector<std::vector<vertex>> rows) : rows_(std::move(rows)) {}

    const std::vector<std::vector<vertex>>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t column_count() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }

    std::size_t cell_count() const noexcept {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    /// True when row lengths are positive and non-increasing.
    bool has_ferrers_shape() const noexcept {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].empty()) return false;
            if (i > 0 && rows_[i].size() > rows_[i - 1].size()) return false;
        }
        return true;
    }

    std::size_t column_height(std::size_t j) const {
        std::size_t h = 0;
        while (h < rows_.size() && rows_[h].size() > j) ++h;
        return h;
    }

    std::vector<vertex> column(std::size_t j) const {
        std::vector<vertex> out;
        for (const auto& r : rows_) {
            if (r.size() <= j) break;
            out.push_back(r[j]);
        }
        return out;
    }

    /// Row lengths; equals lambda-hat for a valid representation of a cograph.
    PartitionSequence row_lengths() const {
        std::vector<int> out;
        for (const auto& r : rows_) out.push_back(static_cast<int>(r.size()));
        return PartitionSequence(std::move(out));
    }

    /// Column heights; equals kappa-hat for a valid representation of a cograph.
    PartitionSequence column_heights() const { return conjugate(row_lengths()); }

    friend bool operator==(const FerrersRepresentation&, const FerrersRepresentation&) = default;

private:
    std::vector<std::vector<vertex>> rows_;
};

// ---------------------------------------------------------------------------
// Naive FERRERS DIAGRAM: every node rebuilds its whole grid.

namespace detail {

using Grid = std::vector<std::vector<vertex>>;

inline Grid columns_of(const Grid& rows) {
    Grid cols(rows.empty() ? 0 : rows.front().size());
    for (const auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    return cols;
}

} // namespace detail

template <TreeLike Tree>
FerrersRepresentation build_ferrers_naive(const Tree& t) {
    using detail::Grid;
    if (t.node_count() == 0) return {};
    std::vector<Grid> rep(t.node_count());
    auto longer = [](const std::vector<vertex>& a, const std::vector<vertex>& b) { return a.size() > b.size(); };
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            rep[i] = Grid{{nd.v}};
            continue;
        }
        Grid lines;
        for (int c : nd.children) {
            Grid& child = rep[static_cast<std::size_t>(c)];
            Grid part = nd.kind == NodeKind::union_node ? detail::columns_of(child) : std::move(child);
            for (auto& line : part) lines.push_back(std::move(line));
            Grid().swap(child);
        }
        std::stable_sort(lines.begin(), lines.end(), longer);
        rep[i] = nd.kind == NodeKind::union_node ? detail::columns_of(lines) : std::move(lines);
    }
    return FerrersRepresentation(std::move(rep.back()));
}

// ---------------------------------------------------------------------------
// Fast FERRERS DIAGRAM on a pseudocotree.
//
// Rows and columns are objects kept in linked lists (the "bottom" and
// "right" neighbour links), grouped by size in an ordered map so that the
// insertion point of a row or column is found without walking the list.
// At a union node the smaller side's columns are spliced into the larger
// side's column list and rows are merged pairwise by index; at a join node
// the roles of rows and columns swap. Merged rows/columns are tracked with
// union-find, and final coordinates are read off once at the end. Every
// step costs O(min(|A1|, |A2|) log n).

namespace detail {

struct SizeGroup {
    int count = 0;
    int last = -1; ///< last object of this size in list order
};
using GroupMap = std::map<int, SizeGroup, std::greater<>>;

/// One axis (rows or columns) of the whole build: per-object state indexed
/// by object id; ids are vertex ids of the leaves that created them.
struct Axis {
    std::vector<int> parent, next, size;

    explicit Axis(std::size_t n) : parent(n), next(n, -1), size(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
};

/// A representation's view of one axis: its list and size groups.
struct AxisList {
    int head = -1;
    int tail = -1;
    int count = 0;
    GroupMap groups;
};

struct Representation {
    AxisList rows;
    AxisList cols;
};

/// Splices the objects of `small` into `big`, keeping sizes non-increasing.
/// Equal sizes keep left-to-right child order.
inline void splice_by_size(Axis& ax, AxisList& big, const AxisList& small, bool small_is_left) {
    int prev = -1;
    for (int x = small.head; x != -1;) {
        const int next_small = ax.next[static_cast<std::size_t>(x)];
        const int h = ax.size[static_cast<std::size_t>(x)];
        int pred = -1;
        if (small_is_left && prev != -1 && ax.size[static_cast<std::size_t>(prev)] == h) {
            pred = prev;
        } else {
            auto it = small_is_left ? big.groups.lower_bound(h) : big.groups.upper_bound(h);
            if (it != big.groups.begin()) pred = std::prev(it)->second.last;
        }
        if (pred == -1) {
            ax.next[static_cast<std::size_t>(x)] = big.head;
            big.head = x;
        } else {
            ax.next[static_cast<std::size_t>(x)] = ax.next[static_cast<std::size_t>(pred)];
            ax.next[static_cast<std::size_t>(pred)] = x;
            if (big.tail == pred) big.tail = x;
        }
        auto [g, fresh] = big.groups.try_emplace(h, SizeGroup{1, x});
        if (!fresh) {
            ++g->second.count;
            if (g->second.last == pred) g->second.last = x;
        }
        ++big.count;
        prev = x;
        x = next_small;
    }
}

/// Merges the i-th object of `small` into the i-th object of `big`; any
/// surplus objects of `small` are appended. Regroups the affected prefix.
inline void merge_by_index(Axis& ax, AxisList& big, const AxisList& small) {
    int b = big.head;
    int s = small.head;
    int merged = 0;
    while (b != -1 && s != -1) {
        ax.parent[static_cast<std::size_t>(s)] = b;
        ax.size[static_cast<std::size_t>(b)] += ax.size[static_cast<std::size_t>(s)];
        b = ax.next[static_cast<std::size_t>(b)];
        s = ax.next[static_cast<std::size_t>(s)];
        ++merged;
    }
    int touched = merged;
    if (s != -1) {
        ax.next[static_cast<std::size_t>(big.tail)] = s;
        big.tail = small.tail;
        touched += small.count - merged;
        big.count += small.count - merged;
    }

    // Drop groups that lie inside the first `merged` objects; trim the one
    // straddling the boundary. Its remainder keeps the smaller size.
    int seen = 0;
    for (auto it = big.groups.begin(); it != big.groups.end() && seen < merged;) {
        const int c = it->second.count;
        if (seen + c <= merged) {
            seen += c;
            it = big.groups.erase(it);
        } else {
            it->second.count -= merged - seen;
            seen = merged;
        }
    }
    // Regroup the touched prefix; all its sizes exceed the remainder's.
    int x = big.head;
    for (int i = 0; i < touched; ++i) {
        const int h = ax.size[static_cast<std::size_t>(x)];
        auto& g = big.groups[h];
        ++g.count;
        g.last = x;
        x = ax.next[static_cast<std::size_t>(x)];
    }
}

} // namespace detail

inline FerrersRepresentation build_ferrers_fast(const Pseudocotree& t) {
    using namespace detail;
    const auto n = static_cast<std::size_t>(t.order());
    if (n == 0) return {};
    Axis rows(n), cols(n);
    std::vector<Representation> rep(t.node_count());

    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            const int v = nd.v;
            for (AxisList* a : {&rep[i].rows, &rep[i].cols}) {
                a->head = a->tail = v;
                a->count = 1;
                a->groups.emplace(1, SizeGroup{1, v});
            }
            continue;
        }
        auto left = static_cast<std::size_t>(nd.children[0]);
        auto right = static_cast<std::size_t>(nd.children[1]);
        const bool small_is_left = t.node(nd.children[0]).leaves <= t.node(nd.children[1]).leaves;
        const std::size_t small = small_is_left ? left : right;
        const std::size_t big = small_is_left ? right : left;

        Representation r = std::move(rep[big]);
        const Representation& s = rep[small];
        if (nd.kind == NodeKind::union_node) {
            splice_by_size(cols, r.cols, s.cols, small_is_left);
            merge_by_index(rows, r.rows, s.rows);
        } else {
            splice_by_size(rows, r.rows, s.rows, small_is_left);
            merge_by_index(cols, r.cols, s.cols);
        }
        rep[small] = Representation{};
        rep[i] = std::move(r);
    }

    const Representation& top = rep.back();
    std::vector<int> row_index(n, -1), col_index(n, -1);
    std::vector<std::vector<vertex>> grid;
    grid.reserve(static_cast<std::size_t>(top.rows.count));
    for (int x = top.rows.head, i = 0; x != -1; x = rows.next[static_cast<std::size_t>(x)], ++i) {
        row_index[static_cast<std::size_t>(x)] = i;
        grid.emplace_back(static_cast<std::size_t>(rows.size[static_cast<std::size_t>(x)]), -1);
    }
    for (int x = top.cols.head, j = 0; x != -1; x = cols.next[static_cast<std::size_t>(x)], ++j)
        col_index[static_cast<std::size_t>(x)] = j;
    for (vertex v = 0; v < static_cast<vertex>(n); ++v) {
        const int r = row_index[static_cast<std::size_t>(rows.find(v))];
        const int c = col_index[static_cast<std::size_t>(cols.find(v))];
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    }
    return FerrersRepresentation(std::move(grid));
}

inline FerrersRepresentation build_ferrers_fast(const Cotree& t) { return build_ferrers_fast(binarize(t)); }

/// Default builder: the O(n log n) variant.
template <TreeLike Tree>
FerrersRepresentation build_ferrers(const Tree& t) {
    return build_ferrers_fast(t);
}

/// Checks shape, vertex coverage, independent rows and clique columns.
inline bool validate_ferrers(const Graph& g, const FerrersRepresentation& f) {
    if (!f.has_ferrers_shape()) return false;
    if (f.cell_count() != static_cast<std::size_t>(g.order())) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (const auto& r : f.rows())
        for (vertex v : r) {
            if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    for (const auto& r : f.rows())
        if (!is_independent_set(g, VertexSet(r))) return false;
    for (std::size_t j = 0; j < f.column_count(); ++j)
        if (!is_clique(g, VertexSet(f.column(j)))) return false;
    return true;
}

/// Number of columns taller than k, i.e. lambda_k.
inline std::size_t columns_taller_than(const FerrersRepresentation& f, std::size_t k) {
    return k < f.row_count() ? f.rows()[k].size() : 0;
}

/// The columns taller than k become cliques; rows 0..k-1 of the remaining
/// columns become independent sets.
inline KLColouring read_colouring(const FerrersRepresentation& f, std::size_t k, std::size_t l) {
    const std::size_t tall = columns_taller_than(f, k);
    if (tall > l)
        throw precondition_error("not (" + std::to_string(k) + "," + std::to_string(l) + ")-colourable: " +
                                 std::to_string(tall) + " columns are taller than " + std::to_string(k));
    KLColouring out;
    out.k = k;
    out.l = l;
    for (std::size_t j = 0; j < tall; ++j) out.cliques.push_back(f.column(j));
    for (std::size_t i = 0; i < std::min(k, f.row_count()); ++i) {
        const auto& r = f.rows()[i];
        if (r.size() > tall) out.independent_sets.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(tall), r.end());
    }
    return out;
}

/// Top k+1 cells of the first l+1 columns: an induced box cograph of
/// dimension (k+1) x (l+1).
inline BoxCertificate read_obstruction(const FerrersRepresentation& f, std::size_t k, std::size_t l) {
    if (columns_taller_than(f, k) <= l)
        throw precondition_error("graph is (" + std::to_string(k) + "," + std::to_string(l) + ")-colourable; no obstruction");
    BoxCertificate out;
    out.k = k + 1;
    out.l = l + 1;
    for (std::size_t j = 0; j <= l; ++j)
        for (std::size_t i = 0; i <= k; ++i) out.vertices.push_back(f.rows()[i][j]);
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::string cell_name(vertex v, const std::vector<std::string>& names) {
    return names.empty() ? std::to_string(v) : names[static_cast<std::size_t>(v)];
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace detail

/// One text line per row, cells right-aligned to a common width.
inline std::string render_ascii(const FerrersRepresentation& f, const std::vector<std::string>& names = {}) {
    std::size_t width = 1;
    for (const auto& r : f.rows())
        for (vertex v : r) width = std::max(width, detail::cell_name(v, names).size());
    std::string out;
    for (const auto& r : f.rows()) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) out += ' ';
            auto s = detail::cell_name(r[j], names);
            out.append(width - s.size(), ' ');
            out += s;
        }
        out += '\n';
    }
    return out;
}

/// SVG 1.1 document: one labelled dot per cell on a unit grid.
inline std::string render_svg(const FerrersRepresentation& f, const std::vector<std::string>& names = {}) {
    constexpr int unit = 40;
    constexpr int margin = 20;
    const auto w = static_cast<int>(f.column_count()) * unit + 2 * margin;
    const auto h = static_cast<int>(f.row_count()) * unit + 2 * margin;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n";
    for (std::size_t i = 0; i < f.row_count(); ++i) {
        const auto& r = f.rows()[i];
        for (std::size_t j = 0; j < r.size(); ++j) {
            const int cx = margin + static_cast<int>(j) * unit + unit / 2;
            const int cy = margin + static_cast<int>(i) * unit + unit / 2;
            out += "  <circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) + "\" r=\"6\" fill=\"black\"/>\n";
            out += "  <text x=\"" + std::to_string(cx + 8) + "\" y=\"" + std::to_string(cy - 8) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" + detail::xml_escape(detail::cell_name(r[j], names)) +
                   "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace cokl

#pragma once

// JSON forms of the library's values (schemas in docs/FORMATS.md).
// Vertices are written as their integer id, or as their display name when
// the graph or tree carries names.

#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cokl/certificate.hpp"
#include "cokl/cotree.hpp"
#include "cokl/ferrers.hpp"
#include "cokl/kappa.hpp"
#include "cokl/partition_sequence.hpp"
#include "cokl/witness.hpp"

namespace cokl {

using json = nlohmann::json;

/// Maps vertex ids to JSON labels and back.
class VertexLabels {
public:
    VertexLabels() = default;
    explicit VertexLabels(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], static_cast<vertex>(i));
    }

    json operator()(vertex v) const {
        if (names_.empty()) return v;
        return names_[static_cast<std::size_t>(v)];
    }

    vertex resolve(const json& j) const {
        if (j.is_number_integer()) return j.get<vertex>();
        if (j.is_string()) {
            auto it = index_.find(j.get<std::string>());
            if (it == index_.end()) throw parse_error("unknown vertex label '" + j.get<std::string>() + "'");
            return it->second;
        }
        throw parse_error("vertex must be an integer or a label string");
    }

    json list(const std::vector<vertex>& vs) const {
        json out = json::array();
        for (vertex v : vs) out.push_back((*this)(v));
        return out;
    }

    std::vector<vertex> resolve_list(const json& j) const {
        if (!j.is_array()) throw parse_error("expected an array of vertices");
        std::vector<vertex> out;
        for (const auto& e : j) out.push_back(resolve(e));
        return out;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, vertex> index_;
};

inline VertexLabels labels_of(const Graph& g) {
    if (!g.has_labels()) return {};
    std::vector<std::string> names;
    for (vertex v = 0; v < g.order(); ++v) names.push_back(g.label(v));
    return VertexLabels(std::move(names));
}

template <TreeLike Tree>
VertexLabels labels_of(const Tree& t) {
    return t.has_names() ? VertexLabels(t.names()) : VertexLabels();
}

// ---------------------------------------------------------------------------

inline json sequence_to_json(const PartitionSequence& s) { return s.entries(); }

inline PartitionSequence sequence_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("sequence must be a JSON array");
    std::vector<int> entries;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 1) throw parse_error("sequence entries must be positive integers");
        entries.push_back(e.get<int>());
    }
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] > entries[i - 1]) throw parse_error("sequence must be non-increasing");
    return PartitionSequence(std::move(entries));
}

/// {"label":0|1,"children":[...]} for internal nodes, {"leaf":id} for leaves
/// (plus "name" when the tree has names).
template <TreeLike Tree>
json cotree_to_json(const Tree& t) {
    if (t.node_count() == 0) return nullptr;
    std::vector<json> done(t.node_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<int>(i));
        if (nd.is_leaf()) {
            done[i] = {{"leaf", nd.v}};
            if (t.has_names()) done[i]["name"] = t.name(nd.v);
            continue;
        }
        json children = json::array();
        for (int c : nd.children) children.push_back(std::move(done[static_cast<std::size_t>(c)]));
        done[i] = {{"label", label_of(nd.kind)}, {"children", std::move(children)}};
    }
    return std::move(done.back());
}

inline RawTree raw_tree_from_json(const json& j) {
    RawTree raw;
    std::vector<std::string> names;
    bool named = false;
    // Explicit stack of (json node, parent index, child slot).
    struct Frame {
        const json* node;
        int parent;
        std::size_t slot;
    };
    std::vector<Frame> stack{{&j, -1, 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const json& n = *f.node;
        if (!n.is_object()) throw parse_error("cotree node must be a JSON object");
        int id;
        if (n.contains("leaf")) {
            if (!n["leaf"].is_number_integer() || n["leaf"].get<long long>() < 0)
                throw parse_error("leaf id must be a non-negative integer");
            const vertex v = n["leaf"].get<vertex>();
            id = raw.add_leaf(v);
            if (n.contains("name")) {
                if (!n["name"].is_string()) throw parse_error("leaf name must be a string");
                if (names.size() <= static_cast<std::size_t>(v)) names.resize(static_cast<std::size_t>(v) + 1);
                names[static_cast<std::size_t>(v)] = n["name"].get<std::string>();
                named = true;
            }
        } else {
            if (!n.contains("label") || !n["label"].is_number_integer()) throw parse_error("internal node needs a label");
            const int label = n["label"].get<int>();
            if (label != 0 && label != 1) throw parse_error("node label must be 0 or 1");
            if (!n.contains("children") || !n["children"].is_array() || n["children"].empty())
                throw parse_error("internal node needs a non-empty children array");
            const auto& ch = n["children"];
            id = raw.add_internal(label == 1 ? NodeKind::join_node : NodeKind::union_node,
                                  std::vector<int>(ch.size(), -1));
            for (std::size_t i = 0; i < ch.size(); ++i) stack.push_back({&ch[i], id, i});
        }
        if (f.parent < 0) raw.root = id;
        else raw.nodes[static_cast<std::size_t>(f.parent)].children[f.slot] = id;
    }
    if (named) raw.names = std::move(names);
    return raw;
}

inline Cotree cotree_from_json(const json& j) { return Cotree::from_raw(raw_tree_from_json(j)); }

inline json p4_to_json(const P4Witness& w, const VertexLabels& lab = {}) {
    return {{"p4", lab.list(std::vector<vertex>(w.path.begin(), w.path.end()))}};
}

inline json colouring_to_json(const KLColouring& c, const VertexLabels& lab = {}) {
    json ind = json::array(), cl = json::array();
    for (const auto& s : c.independent_sets) ind.push_back(lab.list(s));
    for (const auto& q : c.cliques) cl.push_back(lab.list(q));
    return {{"k", c.k}, {"l", c.l}, {"independent_sets", ind}, {"cliques", cl}};
}

inline KLColouring colouring_from_json(const json& j, const VertexLabels& lab = {}) {
    KLColouring c;
    try {
        c.k = j.at("k").get<std::size_t>();
        c.l = j.at("l").get<std::size_t>();
        for (const auto& s : j.at("independent_sets")) c.independent_sets.push_back(lab.resolve_list(s));
        for (const auto& q : j.at("cliques")) c.cliques.push_back(lab.resolve_list(q));
    } catch (const json::exception& e) {
        throw parse_error(std::string("colouring: ") + e.what());
    }
    return c;
}

inline json certificate_to_json(const BoxCertificate& c, const VertexLabels& lab = {}) {
    return {{"k", c.k}, {"l", c.l}, {"vertices", lab.list(c.vertices)}};
}

inline BoxCertificate certificate_from_json(const json& j, const VertexLabels& lab = {}) {
    BoxCertificate c;
    try {
        c.k = j.at("k").get<std::size_t>();
        c.l = j.at("l").get<std::size_t>();
        c.vertices = lab.resolve_list(j.at("vertices"));
    } catch (const json::exception& e) {
        throw parse_error(std::string("certificate: ") + e.what());
    }
    return c;
}

inline json ferrers_to_json(const FerrersRepresentation& f, const VertexLabels& lab = {}) {
    json out = json::array();
    for (const auto& r : f.rows()) out.push_back(lab.list(r));
    return out;
}

inline FerrersRepresentation ferrers_from_json(const json& j, const VertexLabels& lab = {}) {
    if (!j.is_array()) throw parse_error("Ferrers representation must be an array of rows");
    std::vector<std::vector<vertex>> rows;
    for (const auto& r : j) rows.push_back(lab.resolve_list(r));
    return FerrersRepresentation(std::move(rows));
}

inline json parameters_to_json(const ColouringParameters& p) {
    return {{"chi", p.chi}, {"theta", p.theta}, {"bichromatic", p.bichromatic}, {"cochromatic", p.cochromatic}};
}

} // namespace cokl

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cokl/error.hpp"
#include "cokl/graph.hpp"

namespace cokl {

/// Finite non-increasing sequence of positive integers: the shape of a
/// Ferrers diagram. Houses kappa-hat and lambda-hat.
class PartitionSequence {
public:
    using value_type = int;
    /// (value, multiplicity), values strictly decreasing.
    using Run = std::pair<int, int>;

    PartitionSequence() = default;
    PartitionSequence(std::initializer_list<int> entries) : PartitionSequence(std::vector<int>(entries)) {}
    explicit PartitionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 1) throw precondition_error("partition sequence entries must be positive");
            if (i > 0 && entries_[i] > entries_[i - 1]) throw precondition_error("partition sequence must be non-increasing");
        }
    }

    /// [r]^s: s entries equal to r.
    static PartitionSequence box(int r, int s) {
        if (r < 0 || s < 0) throw precondition_error("box dimensions must be natural");
        if (r == 0 || s == 0) return {};
        return PartitionSequence(std::vector<int>(static_cast<std::size_t>(s), r));
    }

    static PartitionSequence from_runs(const std::vector<Run>& runs) {
        std::vector<int> entries;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            auto [value, mult] = runs[i];
            if (mult < 1) throw precondition_error("run multiplicity must be positive");
            if (i > 0 && value >= runs[i - 1].first) throw precondition_error("run values must be strictly decreasing");
            entries.insert(entries.end(), static_cast<std::size_t>(mult), value);
        }
        return PartitionSequence(std::move(entries));
    }

    std::vector<Run> runs() const {
        std::vector<Run> out;
        for (int e : entries_) {
            if (!out.empty() && out.back().first == e) ++out.back().second;
            else out.emplace_back(e, 1);
        }
        return out;
    }

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// Entry i, or 0 past the end.
    int at_or_zero(std::size_t i) const noexcept { return i < entries_.size() ? entries_[i] : 0; }

    long long sum() const noexcept {
        long long s = 0;
        for (int e : entries_) s += e;
        return s;
    }

    /// Number of entries >= r.
    std::size_t count_at_least(int r) const {
        return static_cast<std::size_t>(
            std::partition_point(entries_.begin(), entries_.end(), [r](int e) { return e >= r; }) - entries_.begin());
    }

    friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;

private:
    std::vector<int> entries_;
};

/// Entrywise sum, the shorter operand padded with zeros.
inline PartitionSequence entrywise_add(const PartitionSequence& a, const PartitionSequence& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<int> out = big.entries();
    for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
    return PartitionSequence(std::move(out));
}

/// Concatenation sorted non-increasingly (the * operator).
inline PartitionSequence star_merge(const PartitionSequence& a, const PartitionSequence& b) {
    std::vector<int> out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), std::greater<>{});
    return PartitionSequence(std::move(out));
}

/// Reflection of the Ferrers diagram: result[j] = #{i : s[i] >= j+1}.
inline PartitionSequence conjugate(const PartitionSequence& s) {
    if (s.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(s[0]), 0);
    std::size_t rows = s.size();
    for (std::size_t col = 0; col < out.size(); ++col) {
        while (rows > 0 && static_cast<std::size_t>(s[rows - 1]) < col + 1) --rows;
        out[col] = static_cast<int>(rows);
    }
    return PartitionSequence(std::move(out));
}

/// kappa_l from kappa-hat; 0 once l reaches the clique cover number.
inline int kappa_at(const PartitionSequence& kappa, std::size_t l) { return kappa.at_or_zero(l); }

inline bool is_kl_colourable(const PartitionSequence& kappa, std::size_t k, std::size_t l) {
    return static_cast<std::size_t>(kappa_at(kappa, l)) <= k;
}

/// Least r such that every split k + l = r is colourable:
/// max over l < |kappa| of kappa_l + l.
inline int bichromatic_number(const PartitionSequence& kappa) {
    if (kappa.empty()) throw precondition_error("bichromatic number of an empty sequence");
    int best = 0;
    for (std::size_t l = 0; l < kappa.size(); ++l) best = std::max(best, kappa[l] + static_cast<int>(l));
    return best;
}

/// Least r such that some split k + l = r is colourable:
/// min over l <= |kappa| of kappa_l + l.
inline int cochromatic_number(const PartitionSequence& kappa) {
    if (kappa.empty()) throw precondition_error("cochromatic number of an empty sequence");
    int best = static_cast<int>(kappa.size());
    for (std::size_t l = 0; l < kappa.size(); ++l) best = std::min(best, kappa[l] + static_cast<int>(l));
    return best;
}

// ---------------------------------------------------------------------------
// Text forms: "3,3,1" and run-length "3^2,1^1" (mixing allowed).

inline std::string to_text(const PartitionSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

inline std::string to_run_text(const PartitionSequence& s) {
    std::string out;
    for (auto [value, mult] : s.runs()) {
        if (!out.empty()) out += ',';
        out += std::to_string(value) + '^' + std::to_string(mult);
    }
    return out;
}

inline PartitionSequence parse_sequence(std::string_view text) {
    text = detail::trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = detail::trim(text.substr(1, text.size() - 2));
    std::vector<int> entries;
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = detail::trim(text.substr(pos, comma - pos));
        long long value = 0, mult = 1;
        if (auto caret = item.find('^'); caret != std::string_view::npos) {
            auto v = detail::parse_natural(detail::trim(item.substr(0, caret)));
            auto m = detail::parse_natural(detail::trim(item.substr(caret + 1)));
            if (!v || !m) throw parse_error("malformed run '" + std::string(item) + "'");
            value = *v;
            mult = *m;
        } else {
            auto v = detail::parse_natural(item);
            if (!v) throw parse_error("malformed entry '" + std::string(item) + "'");
            value = *v;
        }
        if (value < 1) throw parse_error("sequence entries must be positive");
        if (mult < 1) throw parse_error("run multiplicity must be positive");
        if (mult > 10'000'000) throw parse_error("run multiplicity too large");
        entries.insert(entries.end(), static_cast<std::size_t>(mult), static_cast<int>(value));
        pos = comma + 1;
    }
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] > entries[i - 1]) throw parse_error("sequence must be non-increasing");
    return PartitionSequence(std::move(entries));
}

} // namespace cokl

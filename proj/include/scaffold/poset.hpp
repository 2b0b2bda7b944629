#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace scaffold {

using ElemId = std::uint32_t;

struct Edge {
    ElemId lower;
    ElemId upper;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Raised when an edge list contains a directed cycle.
class NotAPoset : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Square boolean matrix stored as packed 64-bit rows.
class RelationMatrix {
public:
    RelationMatrix() = default;
    explicit RelationMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool test(std::size_t a, std::size_t b) const noexcept {
        return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
    }
    void set(std::size_t a, std::size_t b) noexcept { bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
    void or_row(std::size_t dst, std::size_t src) noexcept {
        for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
    }
    RelationMatrix transpose() const;

    bool operator==(const RelationMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Reflexive-transitive closure of a DAG on n vertices. Throws NotAPoset on a cycle.
RelationMatrix transitive_closure(std::size_t n, const std::vector<Edge>& edges);

/// Finite poset with interned element names. Element indices follow the canonical
/// order: a topological order with ties broken by name, so a < b implies index(a) < index(b).
/// Immutable after construction.
class Poset {
public:
    Poset() = default;

    /// Builds from names and any DAG edge list (not necessarily covering); the Hasse
    /// diagram is recovered by transitive reduction.
    static Poset from_names(const std::vector<std::string>& names,
                            const std::vector<std::pair<std::string, std::string>>& edges);
    static Poset from_edges(std::size_t n, const std::vector<Edge>& edges,
                            std::vector<std::string> names = {});

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(ElemId e) const { return names_.at(e); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<ElemId> find(const std::string& name) const;
    ElemId index(const std::string& name) const;

    bool leq(ElemId a, ElemId b) const noexcept { return leq_.test(a, b); }
    bool less(ElemId a, ElemId b) const noexcept { return a != b && leq_.test(a, b); }
    bool comparable(ElemId a, ElemId b) const noexcept { return leq(a, b) || leq(b, a); }
    const RelationMatrix& relation_matrix() const noexcept { return leq_; }

    const std::vector<Edge>& hasse_edges() const noexcept { return hasse_; }
    const std::vector<ElemId>& covers(ElemId a) const { return up_adj_[a]; }     // elements covering a
    const std::vector<ElemId>& covered_by(ElemId a) const { return down_adj_[a]; }  // elements a covers

    std::vector<ElemId> open_downset(ElemId q) const;
    std::vector<ElemId> open_upset(ElemId q) const;
    std::vector<ElemId> minima() const;
    std::vector<ElemId> maxima() const;
    bool is_connected() const;

    /// Poset with the reversed order, same names, re-canonicalized.
    Poset opposite() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ElemId> by_name_;
    std::vector<Edge> hasse_;
    std::vector<std::vector<ElemId>> up_adj_;
    std::vector<std::vector<ElemId>> down_adj_;
    RelationMatrix leq_;
};

/// Connected components of the full subposet induced on `subset` (comparability graph).
/// Components are sorted by their smallest element; elements within are ascending.
std::vector<std::vector<ElemId>> components(const Poset& q, const std::vector<ElemId>& subset);

}  // namespace scaffold

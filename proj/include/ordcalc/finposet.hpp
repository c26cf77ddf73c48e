#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// Explicit finite strict partial order on elements 0..n-1, capped at 64
// elements so a row of the relation fits one machine word.
class FinPoset {
public:
    static constexpr int kMaxElements = 64;

    FinPoset() = default;
    static FinPoset chain(int n);
    static FinPoset antichain(int n);

    // Transitive closure of the given pairs; throws CycleError when the
    // closure is not irreflexive, carrying one offending cycle.
    static FinPoset from_relations(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }
    bool lt(int i, int j) const { return (lt_[static_cast<std::size_t>(i)] >> j) & 1u; }
    bool leq(int i, int j) const { return i == j || lt(i, j); }
    bool incomparable(int i, int j) const { return i != j && !lt(i, j) && !lt(j, i); }
    std::uint64_t row(int i) const { return lt_[static_cast<std::size_t>(i)]; }

    bool is_linear() const;
    // Size of a maximum antichain (0 for the empty poset).
    int width() const;

    std::vector<std::pair<int, int>> pairs() const;        // full strict relation
    std::vector<std::pair<int, int>> cover_pairs() const;  // transitive reduction

    bool operator==(const FinPoset& o) const { return n_ == o.n_ && lt_ == o.lt_; }

    std::string to_dot(const std::vector<std::string>& labels = {}) const;
    std::string to_json() const;

    // low-level constructor; rows must already be a strict order
    static FinPoset from_rows(int n, std::vector<std::uint64_t> rows);

private:
    int n_ = 0;
    std::vector<std::uint64_t> lt_;
};

FinPoset inverse(const FinPoset& p);

// Induced order on the subset S, elements relabeled in increasing order
// of their original labels.
FinPoset restrict_to(const FinPoset& p, const std::vector<int>& s);

// Lexicographic sum of family along the index order. Family length must
// equal the index size; empty summands are skipped.
FinPoset lex_sum(const FinPoset& index, const std::vector<FinPoset>& family);

// All non-empty antichains, as element bitmasks.
std::vector<std::uint64_t> antichains(const FinPoset& p);

// Well-founded rank of the poset of non-empty antichains under reverse
// inclusion. Rank of the empty poset is 0, of a linear order 1, of an
// n-antichain n. Always a finite ordinal.
CnfOrdinal antichain_rank_exact(const FinPoset& p);

enum class EmbedMode {
    OrderPreserving, // p < p'  =>  f(p) < f(p')
    Strict,          // additionally p ⊥ p'  =>  f(p) ⊥ f(p')
};

// Finds an injection of p into q by exhaustive backtracking.
std::optional<std::vector<int>> embeds(const FinPoset& p, const FinPoset& q,
                                       EmbedMode mode = EmbedMode::OrderPreserving);
std::uint64_t count_embeddings(const FinPoset& p, const FinPoset& q,
                               EmbedMode mode = EmbedMode::OrderPreserving);

// Cap on enumeration stream lengths (default 10^6), shared by the three
// generators below when no explicit cap is given.
void set_enum_cap(std::size_t cap);
std::size_t enum_cap();

// All partial orders on the same universe whose relation contains p's
// (includes p itself). Stops at cap; 0 means the configured default.
std::vector<FinPoset> augmentations(const FinPoset& p, std::size_t cap = 0);

// All transitive subrelations of p's relation (includes p itself).
std::vector<FinPoset> weakenings(const FinPoset& p, std::size_t cap = 0);

// All linear augmentations.
std::vector<FinPoset> linear_extensions(const FinPoset& p, std::size_t cap = 0);

// Open interval {x : a < x < b}.
std::vector<int> interval(const FinPoset& p, int a, int b);

// Isomorphism check by exhaustive relabeling; intended for small n.
bool isomorphic(const FinPoset& a, const FinPoset& b);

} // namespace ordcalc

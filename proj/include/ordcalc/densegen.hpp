#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/address.hpp"

namespace ordcalc {

// A finite total order under construction: elements carry stable ids, the
// round they were born in, and a rational label order-isomorphic to the
// order (certifying embeddability into the rationals).
struct StageOrder {
    struct Element {
        std::uint32_t id;
        int birth;
        Rational label;
    };
    std::vector<Element> elements; // sorted by label, i.e. by the order
    std::uint32_t next_id = 0;

    static StageOrder chain(int n, std::uint64_t seed = 0);
    static StageOrder empty();

    int size() const { return static_cast<int>(elements.size()); }
    int position_of(std::uint32_t id) const; // -1 when absent
    bool less(std::uint32_t a, std::uint32_t b) const;

    std::string to_json() const;
};

// A gap request: finite sets S < T (pointwise); either side may be empty,
// but not both. Met when some element lies strictly between them.
struct GapRequest {
    std::vector<std::uint32_t> s;
    std::vector<std::uint32_t> t;

    std::string str() const;
};

struct InsertionTrace {
    GapRequest request;
    std::uint32_t witness;
    Rational label;
    int round;
};

struct SaturationResult {
    StageOrder order;
    std::vector<InsertionTrace> trace;

    std::string to_json() const;
};

// Round by round, enumerates every gap request with sides of size at most
// `bound` over the elements existing at round start (canonical order: by
// total size, then lexicographically on the sorted id tuples) and inserts a
// fresh witness for each request still unmet at its turn.
SaturationResult saturate(const StageOrder& start, int rounds, int bound);

// All unmet requests with sides of size at most `bound`, drawn from
// elements born no later than `birth_cap` (default: all).
std::vector<GapRequest> check_star(const StageOrder& p, int bound, int birth_cap = -1);

struct BackAndForth {
    bool success = false;
    int rounds_completed = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> map;
    // failure certificate: the unfillable gap
    std::string failed_side;
    GapRequest unfillable;

    std::string to_json() const;
};

// Alternately extends the partial order-isomorphism by the order-least
// unmatched element of A, then of B, placing each image via gap lookup in
// the counterpart. Throws ValidationError when `pairs` is not order
// preserving.
BackAndForth back_and_forth(const StageOrder& a, const StageOrder& b,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                            int rounds);

struct DescendingReport {
    int plain_length = 0;                       // trivially the size
    std::vector<std::uint32_t> plain_chain;
    int stage_filtered_length = 0;              // descending with strictly increasing births
    std::vector<std::uint32_t> stage_filtered_chain;
};

DescendingReport longest_descending(const StageOrder& p);

} // namespace ordcalc

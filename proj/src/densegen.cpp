#include "ordcalc/densegen.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "ordcalc/error.hpp"
#include "ordcalc/sampler.hpp"

namespace ordcalc {

StageOrder StageOrder::chain(int n, std::uint64_t seed) {
    StageOrder s;
    std::vector<std::uint32_t> ids;
    if (seed == 0) {
        for (int i = 0; i < n; ++i) ids.push_back(static_cast<std::uint32_t>(i));
        s.next_id = static_cast<std::uint32_t>(n);
    } else {
        // permuted ids change the canonical enumeration order while keeping
        // the same structure
        SplitMix64 rng(seed);
        std::vector<std::uint32_t> pool;
        for (int i = 0; i < 4 * n + 4; ++i) pool.push_back(static_cast<std::uint32_t>(i));
        for (int i = 0; i < n; ++i) {
            std::size_t k = static_cast<std::size_t>(rng.below(pool.size()));
            ids.push_back(pool[k]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
        }
        s.next_id = static_cast<std::uint32_t>(4 * n + 4);
    }
    for (int i = 0; i < n; ++i)
        s.elements.push_back(Element{ids[static_cast<std::size_t>(i)], 0, Rational{i, 1}});
    return s;
}

StageOrder StageOrder::empty() { return StageOrder{}; }

int StageOrder::position_of(std::uint32_t id) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].id == id) return static_cast<int>(i);
    return -1;
}

bool StageOrder::less(std::uint32_t a, std::uint32_t b) const {
    return position_of(a) < position_of(b);
}

std::string StageOrder::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["elements"] = nlohmann::json::array();
    for (const auto& e : elements)
        j["elements"].push_back({{"id", e.id}, {"birth", e.birth}, {"label", e.label.str()}});
    return j.dump(2);
}

std::string GapRequest::str() const {
    auto side = [](const std::vector<std::uint32_t>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
        }
        return out + "}";
    };
    return "(" + side(s) + "," + side(t) + ")";
}

std::string SaturationResult::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["order"] = nlohmann::json::parse(order.to_json());
    j["trace"] = nlohmann::json::array();
    for (const auto& e : trace)
        j["trace"].push_back({{"round", e.round},
                              {"request", e.request.str()},
                              {"witness", e.witness},
                              {"label", e.label.str()}});
    return j.dump(2);
}

namespace {

// all subsets of `ids` (sorted by id) with size <= bound, in lexicographic
// order on the id tuples, the empty set first
void subsets_lex(const std::vector<std::uint32_t>& ids, std::size_t bound,
                 std::vector<std::vector<std::uint32_t>>& out) {
    std::vector<std::uint32_t> cur;
    out.push_back({});
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == bound) return;
        for (std::size_t i = start; i < ids.size(); ++i) {
            cur.push_back(ids[i]);
            out.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// position-by-id index for O(1) met checks
std::vector<int> position_index(const StageOrder& p) {
    std::uint32_t top = 0;
    for (const auto& e : p.elements) top = std::max(top, e.id + 1);
    std::vector<int> idx(top, -1);
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        idx[p.elements[i].id] = static_cast<int>(i);
    return idx;
}

} // namespace

SaturationResult saturate(const StageOrder& start, int rounds, int bound) {
    if (bound < 1) throw ValidationError("saturation bound must be at least 1");
    SaturationResult res;
    res.order = start;
    for (int round = 1; round <= rounds; ++round) {
        if (res.order.elements.empty()) {
            // degenerate seed: the empty-sides request places one witness
            StageOrder::Element w{res.order.next_id++, round, Rational{0, 1}};
            res.order.elements.push_back(w);
            res.trace.push_back(InsertionTrace{GapRequest{}, w.id, w.label, round});
            continue;
        }
        std::vector<std::uint32_t> ids;
        for (const auto& e : res.order.elements) ids.push_back(e.id);
        std::sort(ids.begin(), ids.end());
        std::vector<std::vector<std::uint32_t>> sides;
        subsets_lex(ids, static_cast<std::size_t>(bound), sides);
        if (sides.size() * sides.size() > 600000000ull)
            throw ValidationError("gap-request enumeration exceeds the work cap; "
                                  "lower the rounds or the bound");
        // size groups, each in lexicographic order (the emission order)
        std::vector<std::vector<std::size_t>> by_size(static_cast<std::size_t>(bound) + 1);
        for (std::size_t i = 0; i < sides.size(); ++i) by_size[sides[i].size()].push_back(i);
        std::vector<int> pos = position_index(res.order);
        // canonical order: total size, then S tuple, then T tuple; the sides
        // vector is already in S-lex order, so stream rather than materialize
        for (int total = 1; total <= 2 * bound; ++total) {
            for (std::size_t si = 0; si < sides.size(); ++si) {
                const auto& s = sides[si];
                int t_size = total - static_cast<int>(s.size());
                if (t_size < 0 || t_size > bound) continue;
                int max_s = -1;
                for (auto id : s) max_s = std::max(max_s, pos[id]);
                for (std::size_t ti : by_size[static_cast<std::size_t>(t_size)]) {
                    const auto& t = sides[ti];
                    if (s.empty() && t.empty()) continue;
                    int min_t = res.order.size();
                    for (auto id : t) min_t = std::min(min_t, pos[id]);
                    if (!s.empty() && !t.empty() && max_s >= min_t) continue; // not S < T
                    if (min_t - max_s > 1) continue;                          // met
                    // insert a fresh witness strictly between S and T
                    Rational label{0, 1};
                    if (s.empty() && t.empty()) {
                        label = Rational{0, 1};
                    } else if (s.empty()) {
                        const Rational& at = res.order.elements[static_cast<std::size_t>(min_t)].label;
                        label = Rational{at.num / at.den - 1, 1};
                    } else if (t.empty()) {
                        const Rational& at = res.order.elements[static_cast<std::size_t>(max_s)].label;
                        label = Rational{at.num / at.den + 1, 1};
                    } else {
                        label = midpoint(res.order.elements[static_cast<std::size_t>(max_s)].label,
                                         res.order.elements[static_cast<std::size_t>(min_t)].label);
                    }
                    StageOrder::Element w{res.order.next_id++, round, label};
                    auto at = std::upper_bound(
                        res.order.elements.begin(), res.order.elements.end(), label,
                        [](const Rational& l, const StageOrder::Element& e) { return l < e.label; });
                    res.order.elements.insert(at, w);
                    pos = position_index(res.order);
                    max_s = -1;
                    for (auto id : s) max_s = std::max(max_s, pos[id]);
                    GapRequest g;
                    g.s = s;
                    g.t = t;
                    res.trace.push_back(InsertionTrace{g, w.id, label, round});
                }
            }
        }
    }
    return res;
}

std::vector<GapRequest> check_star(const StageOrder& p, int bound, int birth_cap) {
    std::vector<std::uint32_t> ids;
    for (const auto& e : p.elements)
        if (birth_cap < 0 || e.birth <= birth_cap) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    std::vector<std::vector<std::uint32_t>> sides;
    subsets_lex(ids, static_cast<std::size_t>(bound), sides);
    std::vector<int> pos = position_index(p);
    std::vector<GapRequest> unmet;
    for (const auto& s : sides)
        for (const auto& t : sides) {
            if (s.empty() && t.empty()) continue;
            int max_s = -1, min_t = p.size();
            for (auto id : s) max_s = std::max(max_s, pos[id]);
            for (auto id : t) min_t = std::min(min_t, pos[id]);
            if (!s.empty() && !t.empty() && max_s >= min_t) continue; // not S < T
            if (min_t - max_s > 1) continue;                          // met
            GapRequest g;
            g.s = s;
            g.t = t;
            unmet.push_back(std::move(g));
        }
    return unmet;
}

std::string BackAndForth::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["success"] = success;
    j["rounds_completed"] = rounds_completed;
    j["map"] = nlohmann::json::array();
    for (auto [x, y] : map) j["map"].push_back({x, y});
    if (!success) {
        j["failed_side"] = failed_side;
        j["unfillable"] = unfillable.str();
    }
    return j.dump(2);
}

BackAndForth back_and_forth(const StageOrder& a, const StageOrder& b,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                            int rounds) {
    // validate: injective and order preserving both ways
    for (const auto& [x, y] : pairs) {
        if (a.position_of(x) < 0 || b.position_of(y) < 0)
            throw ValidationError("pair refers to a missing element");
        for (const auto& [x2, y2] : pairs) {
            if (x == x2 && y != y2) throw ValidationError("map is not a function");
            if (x != x2 && y == y2) throw ValidationError("map is not injective");
            if (x != x2 && (a.less(x, x2) != b.less(y, y2)))
                throw ValidationError("pairs are not order preserving");
        }
    }
    BackAndForth res;
    res.map = pairs;
    for (int round = 0; round < rounds; ++round) {
        bool from_a = round % 2 == 0;
        const StageOrder& src = from_a ? a : b;
        const StageOrder& dst = from_a ? b : a;
        // order-least unmatched element of the source
        std::optional<std::uint32_t> pick;
        for (const auto& e : src.elements) {
            bool matched = false;
            for (const auto& [x, y] : res.map)
                if ((from_a ? x : y) == e.id) matched = true;
            if (!matched) {
                pick = e.id;
                break;
            }
        }
        if (!pick) {
            res.rounds_completed = round;
            res.success = true; // nothing left to extend
            return res;
        }
        int ppos = src.position_of(*pick);
        // gap request in the counterpart
        GapRequest g;
        int lo = -1, hi = dst.size();
        int src_lo = -1, src_hi = src.size();
        for (const auto& [x, y] : res.map) {
            std::uint32_t s_id = from_a ? x : y;
            std::uint32_t d_id = from_a ? y : x;
            int spos = src.position_of(s_id);
            if (spos < ppos) {
                g.s.push_back(d_id);
                lo = std::max(lo, dst.position_of(d_id));
                src_lo = std::max(src_lo, spos);
            } else {
                g.t.push_back(d_id);
                hi = std::min(hi, dst.position_of(d_id));
                src_hi = std::min(src_hi, spos);
            }
        }
        std::sort(g.s.begin(), g.s.end());
        std::sort(g.t.begin(), g.t.end());
        // place the image at the proportional position within the gap; every
        // element strictly inside the gap is unmatched
        std::optional<std::uint32_t> image;
        if (hi - lo > 1) {
            double frac = static_cast<double>(ppos - src_lo) / static_cast<double>(src_hi - src_lo);
            int pos = lo + static_cast<int>(frac * static_cast<double>(hi - lo));
            pos = std::max(lo + 1, std::min(hi - 1, pos));
            image = dst.elements[static_cast<std::size_t>(pos)].id;
        }
        if (!image) {
            res.success = false;
            res.rounds_completed = round;
            res.failed_side = from_a ? "B" : "A";
            res.unfillable = g;
            return res;
        }
        if (from_a)
            res.map.emplace_back(*pick, *image);
        else
            res.map.emplace_back(*image, *pick);
    }
    res.rounds_completed = rounds;
    res.success = true;
    return res;
}

DescendingReport longest_descending(const StageOrder& p) {
    DescendingReport r;
    r.plain_length = p.size();
    for (auto it = p.elements.rbegin(); it != p.elements.rend(); ++it)
        r.plain_chain.push_back(it->id);
    // longest order-descending chain with strictly increasing births
    int n = p.size();
    std::vector<int> best(static_cast<std::size_t>(n), 1), prev(static_cast<std::size_t>(n), -1);
    int arg = n > 0 ? 0 : -1;
    for (int i = n - 1; i >= 0; --i) {
        for (int j = n - 1; j > i; --j) {
            // element j sits above i in the order; usable when born earlier
            if (p.elements[static_cast<std::size_t>(j)].birth <
                    p.elements[static_cast<std::size_t>(i)].birth &&
                best[static_cast<std::size_t>(j)] + 1 > best[static_cast<std::size_t>(i)]) {
                best[static_cast<std::size_t>(i)] = best[static_cast<std::size_t>(j)] + 1;
                prev[static_cast<std::size_t>(i)] = j;
            }
        }
        if (arg < 0 || best[static_cast<std::size_t>(i)] > best[static_cast<std::size_t>(arg)])
            arg = i;
    }
    if (arg >= 0) {
        r.stage_filtered_length = best[static_cast<std::size_t>(arg)];
        std::vector<std::uint32_t> chain;
        for (int v = arg; v != -1; v = prev[static_cast<std::size_t>(v)])
            chain.push_back(p.elements[static_cast<std::size_t>(v)].id);
        std::reverse(chain.begin(), chain.end());
        r.stage_filtered_chain = std::move(chain);
    }
    return r;
}

} // namespace ordcalc

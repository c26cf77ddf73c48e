#include "ordcalc/finposet.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

std::atomic<std::size_t> g_enum_cap{1000000};

void close_transitive(int n, std::vector<std::uint64_t>& rows) {
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((rows[static_cast<std::size_t>(i)] >> k) & 1u)
                rows[static_cast<std::size_t>(i)] |= rows[static_cast<std::size_t>(k)];
}

bool is_transitive(int n, const std::vector<std::uint64_t>& rows) {
    for (int i = 0; i < n; ++i) {
        std::uint64_t m = rows[static_cast<std::size_t>(i)];
        while (m) {
            int k = std::countr_zero(m);
            m &= m - 1;
            if (rows[static_cast<std::size_t>(k)] & ~rows[static_cast<std::size_t>(i)]) return false;
        }
    }
    return true;
}

struct RowsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

FinPoset FinPoset::from_rows(int n, std::vector<std::uint64_t> rows) {
    FinPoset p;
    p.n_ = n;
    p.lt_ = std::move(rows);
    return p;
}

FinPoset FinPoset::chain(int n) {
    if (n < 0 || n > kMaxElements) throw ValidationError("poset size out of range");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rows[static_cast<std::size_t>(i)] |= 1ull << j;
    return from_rows(n, std::move(rows));
}

FinPoset FinPoset::antichain(int n) {
    if (n < 0 || n > kMaxElements) throw ValidationError("poset size out of range");
    return from_rows(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
}

FinPoset FinPoset::from_relations(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0 || n > kMaxElements) throw ValidationError("poset size out of range");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ValidationError("relation pair out of range");
        rows[static_cast<std::size_t>(a)] |= 1ull << b;
    }
    std::vector<std::uint64_t> closed = rows;
    close_transitive(n, closed);
    for (int i = 0; i < n; ++i) {
        if (!((closed[static_cast<std::size_t>(i)] >> i) & 1u)) continue;
        // recover a concrete cycle through i over the original pairs via BFS
        std::vector<int> prev(static_cast<std::size_t>(n), -1);
        std::deque<int> queue{i};
        int back = -1;
        while (!queue.empty() && back == -1) {
            int v = queue.front();
            queue.pop_front();
            for (auto [a, b] : pairs) {
                if (a != v) continue;
                if (b == i) {
                    back = v;
                    break;
                }
                if (prev[static_cast<std::size_t>(b)] == -1) {
                    prev[static_cast<std::size_t>(b)] = v;
                    queue.push_back(b);
                }
            }
        }
        std::vector<int> path;
        for (int v = back; v != -1 && v != i; v = prev[static_cast<std::size_t>(v)])
            path.push_back(v);
        path.push_back(i);
        std::reverse(path.begin(), path.end());
        std::string desc = "cycle detected:";
        for (int x : path) desc += " " + std::to_string(x);
        throw CycleError(desc, path);
    }
    return from_rows(n, std::move(closed));
}

bool FinPoset::is_linear() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (incomparable(i, j)) return false;
    return true;
}

int FinPoset::width() const {
    if (n_ == 0) return 0;
    // exact max clique on the incomparability graph, branch and bound
    std::vector<std::uint64_t> inc(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (incomparable(i, j)) inc[static_cast<std::size_t>(i)] |= 1ull << j;
    int best = 1;
    std::uint64_t all = n_ == 64 ? ~0ull : (1ull << n_) - 1;
    std::vector<std::pair<std::uint64_t, int>> stack;
    stack.emplace_back(all, 0);
    while (!stack.empty()) {
        auto [cand, depth] = stack.back();
        stack.pop_back();
        if (depth + std::popcount(cand) <= best) continue;
        if (!cand) {
            best = std::max(best, depth);
            continue;
        }
        int v = std::countr_zero(cand);
        std::uint64_t rest = cand & ~(1ull << v);
        stack.emplace_back(rest, depth);                                        // skip v
        stack.emplace_back(rest & inc[static_cast<std::size_t>(v)], depth + 1); // take v
        best = std::max(best, depth + 1);
    }
    return best;
}

std::vector<std::pair<int, int>> FinPoset::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (lt(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> FinPoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!lt(i, j)) continue;
            bool covered = false;
            for (int k = 0; k < n_ && !covered; ++k)
                if (lt(i, k) && lt(k, j)) covered = true;
            if (!covered) out.emplace_back(i, j);
        }
    return out;
}

std::string FinPoset::to_dot(const std::vector<std::string>& labels) const {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int i = 0; i < n_; ++i) {
        std::string label = labels.empty() ? std::to_string(i) : labels[static_cast<std::size_t>(i)];
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (auto [a, b] : cover_pairs())
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

std::string FinPoset::to_json() const {
    std::string out = "{\"n\":" + std::to_string(n_) + ",\"pairs\":[";
    bool first = true;
    for (auto [a, b] : pairs()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
    out += "]}";
    return out;
}

FinPoset inverse(const FinPoset& p) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(p.size()), 0);
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.lt(i, j)) rows[static_cast<std::size_t>(j)] |= 1ull << i;
    return FinPoset::from_rows(p.size(), std::move(rows));
}

FinPoset restrict_to(const FinPoset& p, const std::vector<int>& s) {
    std::vector<int> sel = s;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    for (int x : sel)
        if (x < 0 || x >= p.size()) throw ValidationError("restriction element out of range");
    int m = static_cast<int>(sel.size());
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (p.lt(sel[static_cast<std::size_t>(i)], sel[static_cast<std::size_t>(j)]))
                rows[static_cast<std::size_t>(i)] |= 1ull << j;
    return FinPoset::from_rows(m, std::move(rows));
}

FinPoset lex_sum(const FinPoset& index, const std::vector<FinPoset>& family) {
    if (static_cast<int>(family.size()) != index.size())
        throw ValidationError("lex_sum family length must equal index size");
    std::vector<int> offset(family.size() + 1, 0);
    for (std::size_t i = 0; i < family.size(); ++i)
        offset[i + 1] = offset[i] + family[i].size();
    int total = offset.back();
    if (total > FinPoset::kMaxElements) throw ValidationError("lex_sum result too large");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(total), 0);
    for (std::size_t bi = 0; bi < family.size(); ++bi) {
        for (int i = 0; i < family[bi].size(); ++i) {
            std::size_t gi = static_cast<std::size_t>(offset[bi] + i);
            for (int j = 0; j < family[bi].size(); ++j)
                if (family[bi].lt(i, j)) rows[gi] |= 1ull << (offset[bi] + j);
            for (std::size_t bj = 0; bj < family.size(); ++bj)
                if (index.lt(static_cast<int>(bi), static_cast<int>(bj)))
                    for (int j = 0; j < family[bj].size(); ++j) rows[gi] |= 1ull << (offset[bj] + j);
        }
    }
    return FinPoset::from_rows(total, std::move(rows));
}

std::vector<std::uint64_t> antichains(const FinPoset& p) {
    int n = p.size();
    if (n > 24) throw ValidationError("antichain enumeration capped at 24 elements");
    std::vector<std::uint64_t> comp(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !p.incomparable(i, j)) comp[static_cast<std::size_t>(i)] |= 1ull << j;
    std::vector<std::uint64_t> out;
    std::uint64_t limit = 1ull << n;
    for (std::uint64_t m = 1; m < limit; ++m) {
        bool ok = true;
        std::uint64_t rest = m;
        while (rest && ok) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (comp[static_cast<std::size_t>(v)] & m) ok = false;
        }
        if (ok) out.push_back(m);
    }
    return out;
}

CnfOrdinal antichain_rank_exact(const FinPoset& p) {
    std::vector<std::uint64_t> acs = antichains(p);
    if (acs.empty()) return CnfOrdinal();
    // rank(A) = sup{rank(B)+1 : B a strict superset antichain}; process by
    // decreasing popcount so supersets are done first
    std::sort(acs.begin(), acs.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<std::uint64_t> rank(acs.size(), 0);
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < acs.size(); ++i) {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < i; ++j)
            if ((acs[i] & acs[j]) == acs[i] && acs[j] != acs[i]) r = std::max(r, rank[j] + 1);
        rank[i] = r;
        best = std::max(best, r + 1);
    }
    return CnfOrdinal::finite(best);
}

namespace {

bool embed_rec(const FinPoset& p, const FinPoset& q, EmbedMode mode, std::vector<int>& img,
               std::uint64_t& used, int next, std::uint64_t* count, std::vector<int>* first) {
    if (next == p.size()) {
        if (count) ++*count;
        if (first && first->empty()) *first = img;
        return count == nullptr;
    }
    for (int c = 0; c < q.size(); ++c) {
        if ((used >> c) & 1u) continue;
        bool ok = true;
        for (int j = 0; j < next && ok; ++j) {
            int cj = img[static_cast<std::size_t>(j)];
            if (p.lt(j, next) && !q.lt(cj, c)) ok = false;
            if (p.lt(next, j) && !q.lt(c, cj)) ok = false;
            if (mode == EmbedMode::Strict && p.incomparable(j, next) && !q.incomparable(cj, c))
                ok = false;
        }
        if (!ok) continue;
        img[static_cast<std::size_t>(next)] = c;
        used |= 1ull << c;
        if (embed_rec(p, q, mode, img, used, next + 1, count, first)) return true;
        used &= ~(1ull << c);
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> embeds(const FinPoset& p, const FinPoset& q, EmbedMode mode) {
    if (p.size() > q.size()) return std::nullopt;
    std::vector<int> img(static_cast<std::size_t>(p.size()), -1);
    std::uint64_t used = 0;
    if (embed_rec(p, q, mode, img, used, 0, nullptr, nullptr)) return img;
    return std::nullopt;
}

std::uint64_t count_embeddings(const FinPoset& p, const FinPoset& q, EmbedMode mode) {
    if (p.size() > q.size()) return 0;
    std::vector<int> img(static_cast<std::size_t>(p.size()), -1);
    std::uint64_t used = 0, count = 0;
    embed_rec(p, q, mode, img, used, 0, &count, nullptr);
    return count;
}

void set_enum_cap(std::size_t cap) { g_enum_cap.store(cap); }
std::size_t enum_cap() { return g_enum_cap.load(); }

std::vector<FinPoset> augmentations(const FinPoset& p, std::size_t cap) {
    if (cap == 0) cap = enum_cap();
    int n = p.size();
    std::vector<FinPoset> out;
    std::unordered_set<std::vector<std::uint64_t>, RowsHash> seen;
    std::deque<FinPoset> queue{p};
    std::vector<std::uint64_t> key(static_cast<std::size_t>(n));
    auto key_of = [&](const FinPoset& q) {
        for (int i = 0; i < n; ++i) key[static_cast<std::size_t>(i)] = q.row(i);
        return key;
    };
    seen.insert(key_of(p));
    while (!queue.empty() && out.size() < cap) {
        FinPoset cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !cur.incomparable(i, j)) continue;
                std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k) rows[static_cast<std::size_t>(k)] = cur.row(k);
                rows[static_cast<std::size_t>(i)] |= 1ull << j;
                close_transitive(n, rows);
                bool ok = true;
                for (int k = 0; k < n; ++k)
                    if ((rows[static_cast<std::size_t>(k)] >> k) & 1u) ok = false;
                if (!ok) continue;
                if (seen.insert(rows).second) queue.push_back(FinPoset::from_rows(n, rows));
            }
    }
    return out;
}

std::vector<FinPoset> weakenings(const FinPoset& p, std::size_t cap) {
    if (cap == 0) cap = enum_cap();
    int n = p.size();
    std::vector<FinPoset> out;
    std::unordered_set<std::vector<std::uint64_t>, RowsHash> seen;
    std::deque<FinPoset> queue{p};
    std::vector<std::uint64_t> key(static_cast<std::size_t>(n));
    auto key_of = [&](const FinPoset& q) {
        for (int i = 0; i < n; ++i) key[static_cast<std::size_t>(i)] = q.row(i);
        return key;
    };
    seen.insert(key_of(p));
    while (!queue.empty() && out.size() < cap) {
        FinPoset cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!cur.lt(i, j)) continue;
                std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k) rows[static_cast<std::size_t>(k)] = cur.row(k);
                rows[static_cast<std::size_t>(i)] &= ~(1ull << j);
                if (!is_transitive(n, rows)) continue;
                if (seen.insert(rows).second) queue.push_back(FinPoset::from_rows(n, rows));
            }
    }
    return out;
}

std::vector<FinPoset> linear_extensions(const FinPoset& p, std::size_t cap) {
    if (cap == 0) cap = enum_cap();
    int n = p.size();
    std::vector<FinPoset> out;
    std::vector<int> order;
    std::uint64_t used = 0;
    // backtracking over topological orders
    auto rec = [&](auto&& self) -> void {
        if (out.size() >= cap) return;
        if (static_cast<int>(order.size()) == n) {
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
            for (std::size_t a = 0; a < order.size(); ++a)
                for (std::size_t b = a + 1; b < order.size(); ++b)
                    rows[static_cast<std::size_t>(order[a])] |= 1ull << order[b];
            out.push_back(FinPoset::from_rows(n, std::move(rows)));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            bool minimal = true;
            for (int u = 0; u < n && minimal; ++u)
                if (!((used >> u) & 1u) && p.lt(u, v)) minimal = false;
            if (!minimal) continue;
            used |= 1ull << v;
            order.push_back(v);
            self(self);
            order.pop_back();
            used &= ~(1ull << v);
        }
    };
    rec(rec);
    return out;
}

std::vector<int> interval(const FinPoset& p, int a, int b) {
    std::vector<int> out;
    for (int x = 0; x < p.size(); ++x)
        if (p.lt(a, x) && p.lt(x, b)) out.push_back(x);
    return out;
}

bool isomorphic(const FinPoset& a, const FinPoset& b) {
    if (a.size() != b.size()) return false;
    int n = a.size();
    if (n > 8) throw ValidationError("isomorphism check capped at 8 elements");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (a.lt(i, j) != b.lt(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace ordcalc

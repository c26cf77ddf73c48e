#include "ordcalc/catalog.hpp"

#include <map>
#include <mutex>

#include "ordcalc/error.hpp"
#include "ordcalc/parser.hpp"

namespace ordcalc {

namespace {

const std::vector<std::pair<const char*, const char*>> kEntries = {
    // the running examples: sums of kappa copies along inverted omega, and
    // their direct limit
    {"L0", "sum(w*, k)"},
    {"L1", "sum(L0, L0)"},
    {"L2", "sum(L1, L0)"},
    {"L3", "sum(L2, L0)"},
    {"L", "limsum(L0, L0)"},
    // kappa next to a countable antichain: FAC fails, kappa-AC holds
    {"remark", "lsum(ac(2); k, ac(w))"},
    {"qsum", "sum(Q, k)"},
    {"kks", "sum(k, k*)"},
    {"qk", "Qk"},
    // linear stock
    {"omega", "w"},
    {"omegastar", "w*"},
    {"kappa", "k"},
    {"kappastar", "k*"},
    {"rats", "Q"},
    {"chain5", "5"},
    {"ord2", "ord(w^2)"},
    {"ord31", "ord(w^3+w+1)"},
    {"ord4", "ord(w^4)"},
    {"wsum", "sum(w, w)"},
    {"wstar_w", "sum(w*, w)"},
    {"w_wstar", "sum(w, w*)"},
    {"w2sum", "sum(sum(w, w), sum(w, w))"},
    {"wq", "sum(w, Q)"},
    {"k_wstar", "sum(k, w*)"},
    // finite posets
    {"ac3", "ac(3)"},
    {"acw", "ac(w)"},
    {"vee", "fin(3; 0<2, 1<2)"},
    {"wedge", "fin(3; 0<1, 0<2)"},
    {"enn", "fin(4; 0<2, 1<2, 1<3)"},
    {"diamond", "fin(4; 0<1, 0<2, 1<3, 2<3)"},
    {"two_chains", "fin(4; 0<1, 2<3)"},
    {"crown", "fin(6; 0<3, 0<4, 1<3, 1<5, 2<4, 2<5)"},
    {"fence", "fin(5; 0<1, 2<1, 2<3, 4<3)"},
    {"grid", "fin(4; 0<2, 0<3, 1<2, 1<3)"},
    {"tee", "fin(4; 0<1, 1<2, 1<3)"},
};

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    std::map<std::string, TermPtr> byname;
    NameResolver resolver = [&](const std::string& n) -> std::optional<TermPtr> {
        auto it = byname.find(n);
        if (it == byname.end()) return std::nullopt;
        return it->second;
    };
    for (auto [name, text] : kEntries) {
        TermPtr t = parse_term(text, resolver);
        byname[name] = t;
        out.push_back(CatalogEntry{name, text, t});
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

TermPtr catalog_lookup(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e.term;
    return nullptr;
}

namespace {

std::vector<CatalogEntry> pick(std::initializer_list<const char*> names) {
    std::vector<CatalogEntry> out;
    for (const char* n : names) {
        bool found = false;
        for (const auto& e : catalog())
            if (e.name == n) {
                out.push_back(e);
                found = true;
            }
        if (!found) throw Error(std::string("missing catalog entry ") + n);
    }
    return out;
}

} // namespace

std::vector<CatalogEntry> hierarchy_catalog() {
    return pick({"L0", "L1", "L2", "L3", "L", "remark", "qsum", "kks", "qk", "kappa",
                 "kappastar", "ord2", "chain5", "vee", "diamond", "crown", "ac3", "acw",
                 "wstar_w", "rats"});
}

std::vector<CatalogEntry> linear_catalog() {
    return pick({"L0", "L1", "L2", "L3", "L", "qsum", "kks", "qk", "omega", "omegastar",
                 "kappa", "rats", "chain5", "ord2", "ord31", "ord4", "wsum", "wstar_w",
                 "w_wstar", "w2sum"});
}

TermPtr parse(const std::string& text) {
    NameResolver resolver = [](const std::string& n) -> std::optional<TermPtr> {
        TermPtr t = catalog_lookup(n);
        if (!t) return std::nullopt;
        return t;
    };
    return parse_term(text, resolver);
}

} // namespace ordcalc

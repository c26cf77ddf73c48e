#pragma once

#include <string>
#include <vector>

#include "ordcalc/term.hpp"

namespace ordcalc {

struct CatalogEntry {
    std::string name;
    std::string text;
    TermPtr term;
};

// Built-in example terms. Includes L0..L3 and their direct limit L, the
// kappa-with-countable-antichain witness, the rational-indexed sum of
// kappa copies, and a batch of small finite posets.
const std::vector<CatalogEntry>& catalog();

TermPtr catalog_lookup(const std::string& name); // nullptr when absent

// Fixed anchor sets for the regression suites.
std::vector<CatalogEntry> hierarchy_catalog(); // 20 terms
std::vector<CatalogEntry> linear_catalog();    // 20 linear terms

// Parses with catalog names in scope.
TermPtr parse(const std::string& text);

} // namespace ordcalc

#pragma once

#include <string>
#include <vector>

#include "ordcalc/ordinal.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

struct ClassDesc {
    std::string pattern;        // which elements form the classes
    std::string representative; // how a representative is located
};

struct CondensationResult {
    TermPtr quotient;
    std::vector<ClassDesc> class_map;
    int steps = 1;
    bool indeterminate = false; // set instead of guessing on unsupported shapes
    std::string note;
};

// Quotient by the finite-interval equivalence (two elements are identified
// when only finitely many elements lie between them). Linear terms only.
CondensationResult condense_finite(const TermPtr& t);

// Quotient by the scattered-interval equivalence: elements are identified
// when the interval between them embeds no copy of the rationals. Linear
// terms only. The quotient is a single point exactly for scattered inputs.
CondensationResult condense_h(const TermPtr& t);

// Least r such that r applications of the finite-interval condensation
// reach a finite order. Rank of any finite order is 0, of w is 1, of w^2
// is 2. Linear, scattered, kappa-free terms only.
CnfOrdinal hausdorff_rank(const TermPtr& t);

// Cap on literal condensation iteration (default 16).
void set_condense_iteration_cap(int cap);
int condense_iteration_cap();

// Literal iteration oracle: applies condense_finite repeatedly until the
// quotient is finite, up to the given cap; returns the application count.
// A cap of 0 uses the configured default.
int condense_iterations(const TermPtr& t, int cap = 0);

// Removing the least / greatest element of a linear term with one.
TermPtr strip_first(const TermPtr& t);
TermPtr strip_last(const TermPtr& t);

// Whether some element has only finitely many others below / above it.
bool head_finite(const TermPtr& t);
bool tail_finite(const TermPtr& t);

} // namespace ordcalc

#pragma once

#include "ordcalc/attrs.hpp"
#include "ordcalc/sampler.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

// Symbolic interval analysis for named elements. These are exact for
// addresses (every coordinate is a named ordinal, rational or id) and do
// not depend on the sampler instantiation.

// Cardinality class of {x : x < a} and {x : x > a}.
CardClass below_card(const TermPtr& t, const Address& a);
CardClass above_card(const TermPtr& t, const Address& a);

// Cardinality class of the open interval {x : a < x < b}; requires a < b.
CardClass interval_card(const TermPtr& t, const Address& a, const Address& b);

// Whether the suborders {x : x > a} / {x : x < a} / (a, b) embed no copy of
// the rationals.
bool scattered_above(const TermPtr& t, const Address& a);
bool scattered_below(const TermPtr& t, const Address& a);
bool interval_scattered(const TermPtr& t, const Address& a, const Address& b);

// Class tests of the two condensations, on comparable-or-equal addresses:
// finite-distance equivalence, and scattered-interval equivalence.
bool same_class_finite(const TermPtr& t, const Address& a, const Address& b);
bool same_class_scattered(const TermPtr& t, const Address& a, const Address& b);

} // namespace ordcalc

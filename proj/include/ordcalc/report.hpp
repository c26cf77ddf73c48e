#pragma once

#include <string>

#include "ordcalc/attrs.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

// JSON serialization of the engine outputs. Objects are rendered with
// sorted keys, so identical inputs give byte-identical output.
std::string attr_report_json(const TermPtr& t, const AttrReport& r);
std::string ordinal_json(const CnfOrdinal& o);
std::string rank_json(const TermPtr& t, const std::string& kind, const CnfOrdinal& value,
                      bool in_h, const std::string& method);
std::string condensation_json(const TermPtr& t, const std::string& mode,
                              const CondensationResult& r);

} // namespace ordcalc

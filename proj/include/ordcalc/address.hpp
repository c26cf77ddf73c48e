#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

struct Address;

// Reduced rational, positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d);
    Rational reduced() const { return make(num, den); }
    std::string str() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    // order via cross multiplication
    std::strong_ordering operator<=>(const Rational& o) const;
};

Rational midpoint(const Rational& a, const Rational& b);

// One step of an element coordinate while walking down a term:
//   LeafInt  — element id of a finite poset / finite antichain leaf
//   LeafOrd  — ordinal coordinate of an ordinal-like leaf
//   LeafRat  — rational coordinate of a dense leaf (under instantiation)
//   Block    — coordinate in the index order of a lexicographic sum,
//              itself a full address into the index term
//   Stage    — stage number of a direct-limit term
struct AddrStep {
    struct LeafInt { std::int64_t v; };
    struct LeafOrd { CnfOrdinal v; };
    struct LeafRat { Rational v; };
    struct Block { std::shared_ptr<const Address> index; };
    struct Stage { int n; };
    std::variant<LeafInt, LeafOrd, LeafRat, Block, Stage> step;
};

// Canonical coordinate of an element of a term order: the path of steps
// from the root of the term to a leaf position.
struct Address {
    std::vector<AddrStep> path;

    std::string str() const;
    bool operator==(const Address& o) const;
    bool operator<(const Address& o) const; // arbitrary stable order for dedup
};

// Textual form, round-tripping with Address::str():
//   addr  := step ('.' step)*
//   step  := '#' int | '{' cnf '}' | rational | '[' addr ']' | 's' nat
//   rational := int '/' nat
Address parse_address(const std::string& text);

} // namespace ordcalc

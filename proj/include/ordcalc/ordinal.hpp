#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ordcalc {

struct CnfTerm;

// Ordinal below epsilon_0 in Cantor normal form: a strictly decreasing
// sequence of (exponent, coefficient) terms, w^e1*c1 + ... + w^ek*ck.
// The empty sequence is 0. Values are canonical and immutable; equality
// is structural equality.
class CnfOrdinal {
public:
    CnfOrdinal() = default; // zero

    // Canonicalizes: sorts exponents descending, merges equal exponents,
    // drops zero coefficients. Rejects values whose exponent nesting
    // exceeds the configured depth cap.
    static CnfOrdinal from_terms(std::vector<CnfTerm> terms);
    static CnfOrdinal finite(std::uint64_t n);
    static CnfOrdinal omega();
    // w^e * c
    static CnfOrdinal power(const CnfOrdinal& e, std::uint64_t c = 1);

    const std::vector<CnfTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    // Yields the value when the ordinal is finite.
    bool as_finite(std::uint64_t& out) const;
    // Exponent nesting depth: 0 for finite ordinals.
    int depth() const;

    std::string str() const;

    bool operator==(const CnfOrdinal& o) const;
    std::strong_ordering operator<=>(const CnfOrdinal& o) const;

private:
    std::vector<CnfTerm> terms_;
};

struct CnfTerm {
    CnfOrdinal exp;
    std::uint64_t coeff = 1;
};

// Standard (non-commutative) ordinal addition: terms of a with exponent
// below the leading exponent of b are absorbed.
CnfOrdinal std_add(const CnfOrdinal& a, const CnfOrdinal& b);

// Hessenberg (natural) sum: coefficientwise merge of the CNF terms.
// Commutative and strictly monotone in each argument.
CnfOrdinal nat_sum(const CnfOrdinal& a, const CnfOrdinal& b);

// Hessenberg product: full distribution over CNF terms, exponents combined
// by nat_sum, partial products combined by nat_sum. Commutative.
CnfOrdinal nat_prod(const CnfOrdinal& a, const CnfOrdinal& b);

CnfOrdinal ord_max(const CnfOrdinal& a, const CnfOrdinal& b);

// Text syntax: "w^e*c + ..." with e an ordinal expression (parenthesized
// when compound) and c a positive decimal, e.g. "w^2*3+w+4". Terms must be
// written with strictly decreasing exponents. Throws ParseError.
CnfOrdinal parse_cnf(const std::string& text);

// Exponent depth cap for constructed ordinals (default 8).
void set_ordinal_depth_cap(int cap);
int ordinal_depth_cap();

} // namespace ordcalc

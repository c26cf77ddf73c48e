#include "ordcalc/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {
std::atomic<int> g_depth_cap{8};
} // namespace

void set_ordinal_depth_cap(int cap) { g_depth_cap.store(cap); }
int ordinal_depth_cap() { return g_depth_cap.load(); }

bool CnfOrdinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

bool CnfOrdinal::as_finite(std::uint64_t& out) const {
    if (terms_.empty()) {
        out = 0;
        return true;
    }
    if (terms_.size() == 1 && terms_[0].exp.is_zero()) {
        out = terms_[0].coeff;
        return true;
    }
    return false;
}

int CnfOrdinal::depth() const {
    int d = 0;
    for (const auto& t : terms_)
        if (!t.exp.is_zero()) d = std::max(d, 1 + t.exp.depth());
    return d;
}

bool CnfOrdinal::operator==(const CnfOrdinal& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].exp == o.terms_[i].exp))
            return false;
    return true;
}

std::strong_ordering CnfOrdinal::operator<=>(const CnfOrdinal& o) const {
    std::size_t k = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < k; ++i) {
        auto c = terms_[i].exp <=> o.terms_[i].exp;
        if (c != 0) return c;
        if (terms_[i].coeff != o.terms_[i].coeff)
            return terms_[i].coeff <=> o.terms_[i].coeff;
    }
    return terms_.size() <=> o.terms_.size();
}

CnfOrdinal CnfOrdinal::from_terms(std::vector<CnfTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const CnfTerm& a, const CnfTerm& b) { return a.exp > b.exp; });
    CnfOrdinal r;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!r.terms_.empty() && r.terms_.back().exp == t.exp)
            r.terms_.back().coeff += t.coeff;
        else
            r.terms_.push_back(std::move(t));
    }
    if (r.depth() > ordinal_depth_cap())
        throw ValidationError("ordinal exceeds exponent depth cap " +
                              std::to_string(ordinal_depth_cap()));
    return r;
}

CnfOrdinal CnfOrdinal::finite(std::uint64_t n) {
    CnfOrdinal r;
    if (n > 0) r.terms_.push_back(CnfTerm{CnfOrdinal(), n});
    return r;
}

CnfOrdinal CnfOrdinal::omega() { return power(finite(1), 1); }

CnfOrdinal CnfOrdinal::power(const CnfOrdinal& e, std::uint64_t c) {
    return from_terms({CnfTerm{e, c}});
}

std::string CnfOrdinal::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out += "+";
        first = false;
        std::uint64_t e_fin = 0;
        bool e_is_fin = t.exp.as_finite(e_fin);
        if (e_is_fin && e_fin == 0) {
            out += std::to_string(t.coeff);
            continue;
        }
        out += "w";
        if (!(e_is_fin && e_fin == 1)) {
            out += "^";
            // parenthesize unless the exponent is a bare natural or "w"
            bool simple = e_is_fin || t.exp == CnfOrdinal::omega();
            if (simple)
                out += t.exp.str();
            else
                out += "(" + t.exp.str() + ")";
        }
        if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
    }
    return out;
}

CnfOrdinal std_add(const CnfOrdinal& a, const CnfOrdinal& b) {
    if (b.is_zero()) return a;
    const CnfOrdinal& lead = b.terms().front().exp;
    std::vector<CnfTerm> out;
    for (const auto& t : a.terms()) {
        if (t.exp > lead)
            out.push_back(t);
        else if (t.exp == lead) {
            out.push_back(CnfTerm{t.exp, t.coeff + b.terms().front().coeff});
            for (std::size_t i = 1; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
            return CnfOrdinal::from_terms(std::move(out));
        } else
            break; // absorbed
    }
    for (const auto& t : b.terms()) out.push_back(t);
    return CnfOrdinal::from_terms(std::move(out));
}

CnfOrdinal nat_sum(const CnfOrdinal& a, const CnfOrdinal& b) {
    std::vector<CnfTerm> out = a.terms();
    for (const auto& t : b.terms()) out.push_back(t);
    return CnfOrdinal::from_terms(std::move(out));
}

CnfOrdinal nat_prod(const CnfOrdinal& a, const CnfOrdinal& b) {
    CnfOrdinal acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            CnfOrdinal part = CnfOrdinal::power(nat_sum(ta.exp, tb.exp), ta.coeff * tb.coeff);
            acc = nat_sum(acc, part);
        }
    return acc;
}

CnfOrdinal ord_max(const CnfOrdinal& a, const CnfOrdinal& b) { return a < b ? b : a; }

namespace {

struct CnfParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit CnfParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::uint64_t nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected number");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 40)) fail("coefficient too large");
            ++pos;
        }
        return v;
    }

    // atom used as an exponent: nat | 'w' | '(' cnf ')'
    CnfOrdinal exp_atom() {
        skip_ws();
        if (eat('(')) {
            CnfOrdinal e = cnf();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            return CnfOrdinal::omega();
        }
        return CnfOrdinal::finite(nat());
    }

    CnfTerm term() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            CnfOrdinal e = CnfOrdinal::finite(1);
            if (eat('^')) e = exp_atom();
            std::uint64_t c = 1;
            if (eat('*')) {
                c = nat();
                if (c == 0) fail("coefficient must be positive");
            }
            return CnfTerm{e, c};
        }
        std::uint64_t n = nat();
        if (n == 0) fail("zero term not allowed inside a sum");
        return CnfTerm{CnfOrdinal(), n};
    }

    CnfOrdinal cnf() {
        skip_ws();
        if (pos < s.size() && s[pos] == '0' &&
            (pos + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return CnfOrdinal();
        }
        std::vector<CnfTerm> terms;
        terms.push_back(term());
        while (eat('+')) terms.push_back(term());
        for (std::size_t i = 1; i < terms.size(); ++i)
            if (!(terms[i].exp < terms[i - 1].exp))
                fail("exponents must be strictly decreasing");
        return CnfOrdinal::from_terms(std::move(terms));
    }
};

} // namespace

CnfOrdinal parse_cnf(const std::string& text) {
    CnfParser p(text);
    CnfOrdinal r = p.cnf();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after ordinal");
    return r;
}

} // namespace ordcalc

#include "ordcalc/parser.hpp"

#include <cctype>

#include "ordcalc/error.hpp"

namespace ordcalc {

namespace {

struct TermParser {
    const std::string& s;
    std::size_t pos = 0;
    const NameResolver& resolver;

    TermParser(const std::string& text, const NameResolver& r) : s(text), resolver(r) {}

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::uint64_t nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected number");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 32)) fail("number too large");
            ++pos;
        }
        return v;
    }

    std::string word() {
        skip_ws();
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected term");
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    // substring up to the matching close paren, honoring (), [], {}
    std::string balanced_until(const std::string& stoppers) {
        skip_ws();
        std::size_t start = pos;
        int par = 0, bra = 0, cur = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (par == 0 && bra == 0 && cur == 0 && stoppers.find(c) != std::string::npos) break;
            if (c == '(') ++par;
            if (c == ')') --par;
            if (c == '[') ++bra;
            if (c == ']') --bra;
            if (c == '{') ++cur;
            if (c == '}') --cur;
            if (par < 0 || bra < 0 || cur < 0) break;
            ++pos;
        }
        return s.substr(start, pos - start);
    }

    std::vector<std::pair<int, int>> pair_list() {
        std::vector<std::pair<int, int>> pairs;
        skip_ws();
        if (peek_is(')')) return pairs;
        for (;;) {
            int a = static_cast<int>(nat());
            expect('<');
            int b = static_cast<int>(nat());
            pairs.emplace_back(a, b);
            skip_ws();
            if (!peek_is(',')) break;
            expect(',');
        }
        return pairs;
    }

    FinPoset finposet_literal() {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return FinPoset::chain(static_cast<int>(nat()));
        std::string w = word();
        if (w == "ac") {
            expect('(');
            int n = static_cast<int>(nat());
            expect(')');
            return FinPoset::antichain(n);
        }
        if (w == "fin") {
            expect('(');
            int n = static_cast<int>(nat());
            expect(';');
            auto pairs = pair_list();
            expect(')');
            return FinPoset::from_relations(n, pairs);
        }
        fail("expected a finite poset literal");
    }

    TermPtr term() {
        skip_ws();
        if (pos >= s.size()) fail("expected term");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) return t_nat(nat());
        std::string w = word();
        if (w == "w") {
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                return t_omega_star();
            }
            return t_omega();
        }
        if (w == "k") {
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                return t_kappa_star();
            }
            return t_kappa();
        }
        if (w == "Q") return t_rats();
        if (w == "Qk") return t_qkappa();
        if (w == "ac") {
            expect('(');
            skip_ws();
            if (pos < s.size() && s[pos] == 'w') {
                ++pos;
                expect(')');
                return t_ac_omega();
            }
            std::uint64_t n = nat();
            expect(')');
            return t_ac(n);
        }
        if (w == "ord") {
            expect('(');
            std::string text = balanced_until(")");
            expect(')');
            return t_ord(parse_cnf(text));
        }
        if (w == "fin") {
            expect('(');
            int n = static_cast<int>(nat());
            expect(';');
            auto pairs = pair_list();
            expect(')');
            return t_fin(FinPoset::from_relations(n, pairs));
        }
        if (w == "inv") {
            expect('(');
            TermPtr inner = term();
            expect(')');
            return t_inv(inner);
        }
        if (w == "sum") {
            expect('(');
            TermPtr index = term();
            expect(',');
            TermPtr summand = term();
            expect(')');
            return t_sum(index, summand);
        }
        if (w == "lsum") {
            expect('(');
            FinPoset index = finposet_literal();
            expect(';');
            std::vector<TermPtr> family;
            family.push_back(term());
            while (peek_is(',')) {
                expect(',');
                family.push_back(term());
            }
            expect(')');
            return t_lsum(index, std::move(family));
        }
        if (w == "limsum") {
            expect('(');
            TermPtr base = term();
            expect(',');
            TermPtr step = term();
            skip_ws();
            if (peek_is(',')) {
                expect(',');
                std::string addr_text = balanced_until(")");
                expect(')');
                return t_limsum(base, step, parse_address(addr_text));
            }
            expect(')');
            return t_limsum(base, step);
        }
        if (resolver) {
            if (auto t = resolver(w)) return *t;
        }
        fail("unknown identifier '" + w + "'");
    }
};

} // namespace

TermPtr parse_term(const std::string& text, const NameResolver& resolver) {
    TermParser p(text, resolver);
    TermPtr t = p.term();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after term");
    return t;
}

} // namespace ordcalc

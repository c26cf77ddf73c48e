#include "ordcalc/address.hpp"

#include <cctype>
#include <numeric>

#include "ordcalc/error.hpp"

namespace ordcalc {

Rational Rational::make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational{n, d};
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return num * o.den <=> o.num * den;
}

Rational midpoint(const Rational& a, const Rational& b) {
    return Rational::make(a.num * b.den + b.num * a.den, 2 * a.den * b.den);
}

std::string Address::str() const {
    std::string out;
    bool first = true;
    for (const auto& s : path) {
        if (!first) out += ".";
        first = false;
        if (auto* li = std::get_if<AddrStep::LeafInt>(&s.step))
            out += "#" + std::to_string(li->v);
        else if (auto* lo = std::get_if<AddrStep::LeafOrd>(&s.step))
            out += "{" + lo->v.str() + "}";
        else if (auto* lr = std::get_if<AddrStep::LeafRat>(&s.step))
            out += lr->v.str();
        else if (auto* bl = std::get_if<AddrStep::Block>(&s.step))
            out += "[" + bl->index->str() + "]";
        else if (auto* st = std::get_if<AddrStep::Stage>(&s.step))
            out += "s" + std::to_string(st->n);
    }
    return out;
}

bool Address::operator==(const Address& o) const {
    if (path.size() != o.path.size()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& a = path[i].step;
        const auto& b = o.path[i].step;
        if (a.index() != b.index()) return false;
        if (auto* li = std::get_if<AddrStep::LeafInt>(&a)) {
            if (li->v != std::get<AddrStep::LeafInt>(b).v) return false;
        } else if (auto* lo = std::get_if<AddrStep::LeafOrd>(&a)) {
            if (!(lo->v == std::get<AddrStep::LeafOrd>(b).v)) return false;
        } else if (auto* lr = std::get_if<AddrStep::LeafRat>(&a)) {
            if (!(lr->v == std::get<AddrStep::LeafRat>(b).v)) return false;
        } else if (auto* bl = std::get_if<AddrStep::Block>(&a)) {
            if (!(*bl->index == *std::get<AddrStep::Block>(b).index)) return false;
        } else if (auto* st = std::get_if<AddrStep::Stage>(&a)) {
            if (st->n != std::get<AddrStep::Stage>(b).n) return false;
        }
    }
    return true;
}

bool Address::operator<(const Address& o) const { return str() < o.str(); }

namespace {

struct AddrParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit AddrParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    std::int64_t integer() {
        skip_ws();
        bool neg = pos < s.size() && s[pos] == '-';
        if (neg) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        std::int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    AddrStep step() {
        skip_ws();
        if (pos >= s.size()) fail("expected address step");
        char c = s[pos];
        if (c == '#') {
            ++pos;
            return AddrStep{AddrStep::LeafInt{integer()}};
        }
        if (c == '{') {
            ++pos;
            std::size_t depth = 1, start = pos;
            while (pos < s.size() && depth > 0) {
                if (s[pos] == '{') ++depth;
                if (s[pos] == '}') --depth;
                ++pos;
            }
            if (depth != 0) fail("unbalanced '{'");
            return AddrStep{AddrStep::LeafOrd{parse_cnf(s.substr(start, pos - 1 - start))}};
        }
        if (c == '[') {
            ++pos;
            Address inner = address(']');
            if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
            ++pos;
            return AddrStep{AddrStep::Block{std::make_shared<Address>(std::move(inner))}};
        }
        if (c == 's' && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            ++pos;
            return AddrStep{AddrStep::Stage{static_cast<int>(integer())}};
        }
        std::int64_t n = integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::int64_t d = integer();
            return AddrStep{AddrStep::LeafRat{Rational::make(n, d)}};
        }
        fail("expected '/' in rational step");
    }

    Address address(char stop) {
        Address a;
        a.path.push_back(step());
        skip_ws();
        while (pos < s.size() && s[pos] == '.') {
            ++pos;
            a.path.push_back(step());
            skip_ws();
        }
        (void)stop;
        return a;
    }
};

} // namespace

Address parse_address(const std::string& text) {
    AddrParser p(text);
    Address a = p.address('\0');
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after address");
    return a;
}

} // namespace ordcalc

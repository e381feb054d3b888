#include "pellfrieze/quadint.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace pellfrieze {

int QuadInt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // a and b have opposite signs; |a| vs |b|*sqrt(2) decides.
    const BigInt lhs = a_ * a_;
    const BigInt rhs = 2 * b_ * b_;
    if (lhs == rhs) return 0;  // impossible unless a = b = 0
    return lhs > rhs ? sa : sb;
}

namespace {

const char* const kRoot = "\xe2\x88\x9a" "2";  // "√2"

void append_sqrt2_term(std::string& out, const BigInt& b, bool leading) {
    if (b == 1) {
        if (!leading) out += '+';
    } else if (b == -1) {
        out += '-';
    } else {
        if (!leading && b.sign() > 0) out += '+';
        out += b.str();
    }
    out += kRoot;
}

}  // namespace

std::string QuadInt::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!a_.is_zero()) out += a_.str();
    if (!b_.is_zero()) append_sqrt2_term(out, b_, a_.is_zero());
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << x.str(); }

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool eat(std::string_view lit) {
        if (s.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }
};

bool parse_root(Cursor& c) { return c.eat(kRoot) || c.eat("sqrt(2)"); }

// One term: [sign] digits [root] | [sign] root.  Returns (value, is_root_term).
std::pair<BigInt, bool> parse_term(Cursor& c, std::string_view whole) {
    BigInt sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
    }
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits += c.peek();
        ++c.pos;
    }
    const bool root = parse_root(c);
    if (digits.empty()) {
        if (!root) throw ParseError("expected a term in \"" + std::string(whole) + "\"");
        return {sign, true};
    }
    return {sign * BigInt(digits), root};
}

}  // namespace

QuadInt QuadInt::parse(std::string_view text) {
    std::string stripped;
    stripped.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
    }
    if (stripped.empty()) throw ParseError("empty input");

    Cursor c{stripped};
    BigInt a = 0;
    BigInt b = 0;
    bool have_a = false;
    bool have_b = false;
    while (!c.done()) {
        if ((have_a || have_b) && c.peek() != '+' && c.peek() != '-') {
            throw ParseError("expected '+' or '-' in \"" + stripped + "\"");
        }
        auto [value, is_root] = parse_term(c, stripped);
        if (is_root) {
            if (have_b) throw ParseError("duplicate \xe2\x88\x9a" "2 term in \"" + stripped + "\"");
            b = value;
            have_b = true;
        } else {
            if (have_a) throw ParseError("duplicate integer term in \"" + stripped + "\"");
            a = value;
            have_a = true;
        }
    }
    return QuadInt(std::move(a), std::move(b));
}

BigInt norm(const QuadInt& x) {
    BigInt v = x.a() * x.a() - 2 * x.b() * x.b();
    if (v.sign() < 0) v = -v;
    return v;
}

bool is_unit(const QuadInt& x) { return norm(x) == 1; }

QuadInt unit_power(long m) {
    const QuadInt base = m >= 0 ? QuadInt(1, 1) : QuadInt(-1, 1);
    long k = m >= 0 ? m : -m;
    QuadInt result(1);
    for (; k > 0; --k) result *= base;
    return result;
}

long unit_log(const QuadInt& x) {
    if (!is_unit(x)) throw NotAUnit("unit_log: norm(" + x.str() + ") != 1");
    if (x.sign() <= 0) throw NotPositive("unit_log: " + x.str() + " is not positive");
    const QuadInt one(1);
    const QuadInt up(1, 1);     // ell_1
    const QuadInt down(-1, 1);  // ell_{-1}
    QuadInt v = x;
    long m = 0;
    while (v.compare(one) > 0) {
        v *= down;
        ++m;
    }
    while (v.compare(one) < 0) {
        v *= up;
        --m;
    }
    return m;  // positive units are exactly the ell_m, so v == 1 here
}

QuadInt chebyshev_u(long k, const QuadInt& lambda) {
    if (k < -1) throw std::invalid_argument("chebyshev_u: k must be >= -1");
    QuadInt prev(0);  // U_{-1}
    QuadInt cur(1);   // U_0
    if (k == -1) return prev;
    for (long i = 1; i <= k; ++i) {
        QuadInt next = lambda * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace pellfrieze

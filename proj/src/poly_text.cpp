#include "equising/poly_text.hpp"

#include <cctype>
#include <sstream>

namespace equising {

namespace {

class Parser {
public:
    Parser(const std::string& text, long long max_y_degree)
        : s_(text), max_ydeg_(max_y_degree) {}

    BiPoly parse() {
        BiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    static constexpr int kMaxNesting = 512;

    const std::string& s_;
    long long max_ydeg_;  // < 0 means unlimited
    std::size_t pos_ = 0;
    int depth_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        BiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    static bool starts_factor(char c) {
        return c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    BiPoly term() {
        BiPoly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (starts_factor(peek())) {
                acc *= factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    BiPoly factor() {
        BiPoly b = base();
        if (eat('^')) {
            const unsigned long e = parse_uint();
            if (max_ydeg_ >= 0 && b.y_degree() > 0 &&
                b.y_degree() > max_ydeg_ / static_cast<long long>(e ? e : 1))
                fail("y-degree exceeds the parse cap");
            b = b.pow(e);
        }
        return b;
    }

    BiPoly base() {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return BiPoly::var_x();
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::var_y();
        }
        if (c == '(') {
            ++pos_;
            if (++depth_ > kMaxNesting) fail("parentheses nested too deeply");
            BiPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            --depth_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly(rational());
        if (std::isalpha(static_cast<unsigned char>(c)))
            fail(std::string("unknown variable '") + c + "' (only x and y are allowed)");
        fail("expected a factor");
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an exponent");
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        try {
            return std::stoul(digits);
        } catch (const std::exception&) {
            fail("exponent out of range");
        }
    }

    Rat rational() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        Int num(digits);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::string den;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                den += s_[pos_++];
            if (den.empty()) fail("expected a denominator");
            Int d(den);
            if (d == 0) fail("zero denominator");
            Rat q(num, d);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }
};

void print_monomial(std::ostream& os, const Rat& coeff, long long xe, long long ye,
                    bool leading) {
    Rat c = coeff;
    if (c < 0) {
        os << '-';
        c = -c;
    } else if (!leading) {
        os << '+';
    }
    const bool has_var = xe > 0 || ye > 0;
    if (!has_var || c != 1) {
        os << rat_text(c);
        if (has_var) os << '*';
    }
    if (xe > 0) {
        os << 'x';
        if (xe > 1) os << '^' << xe;
        if (ye > 0) os << '*';
    }
    if (ye > 0) {
        os << 'y';
        if (ye > 1) os << '^' << ye;
    }
}

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text, -1).parse(); }

BiPoly parse_poly(const std::string& text, long long max_y_degree) {
    BiPoly p = Parser(text, max_y_degree).parse();
    if (max_y_degree >= 0 && p.y_degree() > max_y_degree)
        throw ParseError("y-degree exceeds the parse cap", text.size());
    return p;
}

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (auto it = p.rows().rbegin(); it != p.rows().rend(); ++it) {
        const auto& [ye, xpoly] = *it;
        for (const auto& [xe, c] : xpoly.terms()) {
            print_monomial(os, c, xe, ye, leading);
            leading = false;
        }
    }
    return os.str();
}

std::string to_string(const XPoly& p) { return to_string(BiPoly(p)); }

}  // namespace equising

// Sparse exact polynomials in the single variable x over Q, together with
// the x-order (least exponent with a nonzero coefficient; +infinity for 0).
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "equising/scalars.hpp"

namespace equising {

// A nonnegative integer extended with +infinity. Ordered above every finite
// value; arithmetic on the infinite point is deliberately not provided.
class XOrder {
public:
    static XOrder infinity() { return XOrder(true, 0); }
    static XOrder of(long long v) {
        if (v < 0) throw std::invalid_argument("XOrder: negative");
        return XOrder(false, v);
    }

    bool is_finite() const { return !infinite_; }
    long long value() const {
        if (infinite_) throw std::logic_error("XOrder: value of infinity");
        return value_;
    }

    friend bool operator==(const XOrder& a, const XOrder& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const XOrder& a, const XOrder& b) { return !(a == b); }
    friend bool operator<(const XOrder& a, const XOrder& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const XOrder& a, const XOrder& b) { return a < b || a == b; }
    friend bool operator>(const XOrder& a, const XOrder& b) { return b < a; }
    friend bool operator>=(const XOrder& a, const XOrder& b) { return b <= a; }

    std::string to_string() const {
        return infinite_ ? "infinity" : std::to_string(value_);
    }

private:
    XOrder(bool inf, long long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long long value_;
};

class XPoly {
public:
    using Terms = std::map<long long, Rat>;  // exponent -> nonzero coefficient

    XPoly() = default;
    explicit XPoly(const Rat& c) {
        if (c != 0) terms_[0] = c;
    }
    explicit XPoly(long c) : XPoly(Rat(c)) {}

    static XPoly monomial(long long e, const Rat& c) {
        XPoly p;
        if (c != 0) {
            if (e < 0) throw std::invalid_argument("XPoly: negative exponent");
            p.terms_[e] = c;
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    // Degree of the zero polynomial is -1.
    long long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    XOrder x_order() const {
        return terms_.empty() ? XOrder::infinity() : XOrder::of(terms_.begin()->first);
    }

    Rat coeff(long long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat leading_coeff() const {
        return terms_.empty() ? Rat(0) : terms_.rbegin()->second;
    }

    const Terms& terms() const { return terms_; }

    XPoly& operator+=(const XPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator-(const XPoly& a) {
        XPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        XPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    friend XPoly operator*(const XPoly& a, const Rat& c) {
        XPoly r;
        if (c != 0)
            for (const auto& [e, v] : a.terms_) r.terms_[e] = v * c;
        return r;
    }

    XPoly pow(unsigned long e) const {
        XPoly r(Rat(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    // Exact quotient; throws std::logic_error when the division is not exact.
    XPoly divide_exact(const XPoly& b) const;

    XPoly derivative() const {
        XPoly r;
        for (const auto& [e, c] : terms_)
            if (e > 0) r.terms_[e - 1] = c * Rat(static_cast<long>(e));
        return r;
    }

    void add_term(long long e, const Rat& c) {
        if (c == 0) return;
        if (e < 0) throw std::invalid_argument("XPoly: negative exponent");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

}  // namespace equising

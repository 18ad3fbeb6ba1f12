#include "ramsey/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace ramsey {

namespace {

BigInt pow_bigint(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

// cpp_int's string constructor honours C literal prefixes (leading 0 =>
// octal), so digit strings are validated and de-prefixed here first.
BigInt decimal_bigint(const std::string& digits) {
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("malformed rational literal: " + digits);
    const bool neg = digits[0] == '-';
    std::size_t pos = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    for (std::size_t i = pos; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw std::invalid_argument("malformed rational literal: " + digits);
    while (pos + 1 < digits.size() && digits[pos] == '0') ++pos;
    BigInt v(digits.substr(pos));
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string t(s);
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        BigInt num = decimal_bigint(t.substr(0, slash));
        BigInt den = decimal_bigint(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + t);
        return Rational(num, den);
    }
    // decimal / scientific form: mantissa [.frac] [e exp]
    long long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::strtoll(t.c_str() + epos + 1, nullptr, 10);
        t = t.substr(0, epos);
    }
    std::string digits;
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        digits = t.substr(0, dot) + t.substr(dot + 1);
        exp10 -= static_cast<long long>(t.size() - dot - 1);
    } else {
        digits = t;
    }
    Rational r{decimal_bigint(digits)};
    if (exp10 > 0)
        r *= Rational(pow_bigint(10, static_cast<unsigned>(exp10)));
    else if (exp10 < 0)
        r /= Rational(pow_bigint(10, static_cast<unsigned>(-exp10)));
    return r;
}

std::string format_rational(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::string approx_decimal(const Rational& x, int digits) {
    BigInt scale = pow_bigint(10, static_cast<unsigned>(digits));
    BigInt num = numerator(x) * scale;
    BigInt den = denominator(x);
    BigInt q = num / den;
    bool exact = (q * den == num);
    bool neg = q < 0;
    if (neg) q = -q;
    std::string s = q.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (neg) s.insert(0, "-");
    if (!exact) s += "~";
    return s;
}

BigInt floor_rational(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);
    if (Rational(q) > x) --q;
    return q;
}

BigInt ceil_rational(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);
    if (Rational(q) < x) ++q;
    return q;
}

long long floor_even(const Rational& x) {
    if (x < 2) throw std::invalid_argument("floor_even requires x >= 2");
    BigInt f = floor_rational(x);
    if (f % 2 != 0) --f;
    return to_ll(f);
}

long long floor_odd(const Rational& x) {
    if (x < 1) throw std::invalid_argument("floor_odd requires x >= 1");
    BigInt f = floor_rational(x);
    if (f % 2 == 0) --f;
    return to_ll(f);
}

Rational pow_rational(const Rational& base, unsigned exp) {
    return Rational(pow_bigint(numerator(base), exp), pow_bigint(denominator(base), exp));
}

int cmp_root(const Rational& x, const Rational& y, unsigned root) {
    if (y < 0) throw std::invalid_argument("cmp_root requires y >= 0");
    if (root == 0) throw std::invalid_argument("cmp_root requires root >= 1");
    if (x < 0) return y == 0 && x == 0 ? 0 : -1;
    Rational xr = pow_rational(x, root);
    if (xr < y) return -1;
    if (xr > y) return 1;
    return 0;
}

bool int_meets_threshold(long long s, const Rational& a, const Rational& b,
                         const Rational& eta, unsigned root, const Rational& k) {
    if (b < 0 || eta < 0 || k <= 0) throw std::invalid_argument("int_meets_threshold: bad arguments");
    // s >= (a - b * eta^(1/root)) * k  <=>  b * eta^(1/root) >= a - s/k
    Rational rhs = a - Rational(s) / k;
    if (rhs <= 0) return true;
    if (b == 0) return false;
    return cmp_root(rhs / b, eta, root) <= 0;
}

long long min_int_meeting_threshold(const Rational& a, const Rational& b,
                                    const Rational& eta, unsigned root,
                                    const Rational& k) {
    long long lo = 0;
    if (int_meets_threshold(lo, a, b, eta, root, k)) return lo;
    long long hi = to_ll(ceil_rational(a * k));
    while (lo + 1 < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (int_meets_threshold(mid, a, b, eta, root, k))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Rational rational_root_floor(const Rational& y, unsigned root, unsigned bits) {
    if (y < 0) throw std::invalid_argument("rational_root_floor requires y >= 0");
    if (root == 0) throw std::invalid_argument("rational_root_floor requires root >= 1");
    if (y == 0) return Rational(0);
    const BigInt scale = BigInt(1) << bits;
    // m/scale <= y^(1/root)  <=>  m^root <= y * scale^root
    BigInt lo = 0, hi = (y >= 1 ? ceil_rational(y) : BigInt(1)) * scale;
    const Rational bound = y * pow_rational(Rational(scale), root);
    while (lo < hi) {
        BigInt mid = lo + (hi - lo + 1) / 2;
        if (Rational(pow_bigint(mid, root)) <= bound)
            lo = mid;
        else
            hi = mid - 1;
    }
    return Rational(lo, scale);
}

}  // namespace ramsey

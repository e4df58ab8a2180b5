/**
 * Exact rational scalars.
 *
 * Rational is boost::multiprecision::cpp_rational: arbitrary-precision,
 * always stored reduced with positive denominator, zero as 0/1. The text
 * form is "p/q" (or just "p" when q = 1) with the minus sign on the
 * numerator only; format_rational/parse_rational pin that form down so it
 * never depends on the backend's formatting.
 */
#ifndef KESTAB_RATIONAL_HPP
#define KESTAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kestab {

// et_off: plain value semantics, no expression-template proxies
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// num/den with sign normalization; throws std::domain_error on den = 0.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(std::move(num), std::move(den));
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline int sign(const Rational& q) { return q.sign(); }

inline std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

/// Parses "p", "-p", "p/q" or "-p/q" (q > 0 after normalization).
/// Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view t, bool allow_sign) -> Int {
        if (t.empty()) fail();
        std::size_t i = (allow_sign && t[0] == '-') ? 1 : 0;
        if (i == t.size()) fail();
        for (std::size_t k = i; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) fail();
        return Int(std::string(t));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    Int num = parse_int(text.substr(0, slash), true);
    Int den = parse_int(text.substr(slash + 1), false); // sign lives on the numerator
    if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
    return make_rational(std::move(num), std::move(den));
}

inline double to_double(const Rational& q) { return static_cast<double>(q); }

/// 12 significant digits, the CLI's --format decimal rendering.
inline std::string format_decimal(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", to_double(q));
    return buf;
}

} // namespace kestab

#endif // KESTAB_RATIONAL_HPP

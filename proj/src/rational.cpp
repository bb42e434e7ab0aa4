#include "harmsum/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace harmsum {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    const auto slash = s.find('/');
    std::string num_part = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den_part = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part))
        throw parse_error("not an exact rational literal: '" + text +
                          "' (use integers or p/q, e.g. -3/7; decimal notation is not accepted)");
    Int num(num_part);
    Int den(den_part);
    if (den.is_zero()) throw division_by_zero("rational literal with zero denominator: '" + text + "'");
    Rational r(num, den);
    return negative ? -r : r;
}

std::string Rational::to_string() const {
    std::string s = num().to_string();
    if (!is_integer()) s += "/" + den().to_string();
    return s;
}

std::string Rational::to_decimal_string(unsigned significant_digits) const {
    if (significant_digits == 0) significant_digits = 1;
    if (is_zero()) return "0";
    const bool neg = sign() < 0;
    Int n = num().abs();
    Int d = den();

    // Decimal exponent e: number of digits before the point (may be <= 0).
    long e = 0;
    {
        Int t = n;
        while (t >= d) {
            t = t / Int(10);
            ++e;
        }
        if (e == 0) {
            t = n;
            while (t < d) {
                t = t * Int(10);
                --e;
            }
            ++e;  // first scale that reaches >= d holds the leading digit
        }
    }

    // Scale so that exactly `significant_digits` digits sit left of the cut,
    // then round half away from zero.
    const long shift = static_cast<long>(significant_digits) - e;
    Int scaled_num = n;
    Int scaled_den = d;
    if (shift >= 0)
        scaled_num = n * Int::pow(Int(10l), static_cast<unsigned long>(shift));
    else
        scaled_den = d * Int::pow(Int(10l), static_cast<unsigned long>(-shift));
    Int digits = scaled_num / scaled_den;
    Int rem = scaled_num % scaled_den;
    if (Int(2l) * rem >= scaled_den) digits += Int(1l);

    std::string ds = digits.to_string();
    // Rounding may add one digit (e.g. 999.9 -> 1000); absorb it into the exponent.
    long exp10 = e;
    if (ds.size() > significant_digits) {
        exp10 += static_cast<long>(ds.size()) - static_cast<long>(significant_digits);
        ds.resize(significant_digits);
    }

    std::string out;
    if (exp10 <= 0) {
        out = "0.";
        out.append(static_cast<std::size_t>(-exp10), '0');
        out += ds;
    } else if (static_cast<std::size_t>(exp10) >= ds.size()) {
        out = ds;
        out.append(static_cast<std::size_t>(exp10) - ds.size(), '0');
    } else {
        out = ds.substr(0, static_cast<std::size_t>(exp10)) + "." + ds.substr(static_cast<std::size_t>(exp10));
    }
    // Trim a trailing "." if everything landed left of the point.
    if (!out.empty() && out.back() == '.') out.pop_back();
    return neg ? "-" + out : out;
}

} // namespace harmsum

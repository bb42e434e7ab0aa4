#include "harmsum/multipoly.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace harmsum {

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
    throw domain_error("polynomial is not constant: " + to_string());
}

unsigned MultiPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        if (m.e[static_cast<unsigned>(v)] > d) d = m.e[static_cast<unsigned>(v)];
    return d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

const Rational* MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

void MultiPoly::insert_add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.insert_add(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.insert_add(m, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.insert_add(ma * mb, ca * cb);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const Rational& c) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : a.terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

MultiPoly MultiPoly::pow(const MultiPoly& base, unsigned e) {
    MultiPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

MultiPoly MultiPoly::partial_derivative(Var v) const {
    const unsigned vi = static_cast<unsigned>(v);
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[vi] == 0) continue;
        Monomial d = m;
        --d.e[vi];
        r.insert_add(d, c * Rational(static_cast<long>(m.e[vi])));
    }
    return r;
}

Rational MultiPoly::eval(const Assignment& a) const {
    // Cache powers per variable; degrees are small.
    std::array<std::vector<Rational>, 3> powers;
    for (unsigned v = 0; v < 3; ++v) {
        const unsigned d = degree(static_cast<Var>(v));
        if (d > 0 && !a.values[v].has_value()) throw unbound_variable(var_name(static_cast<Var>(v)));
        powers[v].assign(1, Rational(1));
        for (unsigned e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * *a.values[v]);
    }
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (unsigned v = 0; v < 3; ++v)
            if (m.e[v] > 0) t *= powers[v][m.e[v]];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::subst(Var v, const Rational& value) const {
    const unsigned vi = static_cast<unsigned>(v);
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.e[vi] = 0;
        r.insert_add(rest, c * Rational::pow(value, m.e[vi]));
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::try_divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    MultiPoly q;
    MultiPoly r = a;
    const Monomial& lmb = b.leading_monomial();
    const Rational& lcb = b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        if (!lmb.divides(lmr)) return std::nullopt;
        MultiPoly t = from_term(r.leading_coeff() / lcb, lmr / lmb);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

std::string monomial_suffix(const Monomial& m, bool latex) {
    std::string out;
    for (unsigned v = 0; v < 3; ++v) {
        if (m.e[v] == 0) continue;
        if (!latex) out += "*";
        out += var_name(static_cast<Var>(v));
        if (m.e[v] > 1) {
            out += "^";
            if (latex)
                out += "{" + std::to_string(m.e[v]) + "}";
            else
                out += std::to_string(m.e[v]);
        }
    }
    return out;
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            out += (c.sign() < 0 ? "-" : "");
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ");
        }
        out += mag.to_string() + monomial_suffix(m, false);
    }
    return out;
}

std::string MultiPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            out += (c.sign() < 0 ? "-" : "");
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ");
        }
        std::string coeff;
        if (mag.is_integer())
            coeff = mag.num().to_string();
        else
            coeff = "\\frac{" + mag.num().to_string() + "}{" + mag.den().to_string() + "}";
        const std::string suffix = monomial_suffix(m, true);
        if (suffix.empty())
            out += coeff;
        else if (mag == Rational(1))
            out += suffix;
        else
            out += coeff + " " + suffix;
    }
    return out;
}

namespace {

/// Strict parser for the canonical sparse form produced by to_string().
class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    MultiPoly run() {
        MultiPoly p;
        skip_ws();
        if (done()) throw parse_error("empty polynomial string");
        if (peek() == '0' && pos_ + 1 == s_.size()) return p;
        bool negative = accept('-');
        for (;;) {
            p += parse_term(negative);
            skip_ws();
            if (done()) break;
            if (accept('+'))
                negative = false;
            else if (accept('-'))
                negative = true;
            else
                throw parse_error("unexpected character in polynomial: '" + s_.substr(pos_) + "'");
            skip_ws();
        }
        return p;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    bool accept(char c) {
        if (!done() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string read_digits() {
        std::string d;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        if (d.empty()) throw parse_error("expected digits at position " + std::to_string(pos_) + " in polynomial");
        return d;
    }

    MultiPoly parse_term(bool negative) {
        skip_ws();
        Int num(read_digits());
        Int den(1l);
        if (accept('/')) den = Int(read_digits());
        Rational c(num, den);
        if (negative) c = -c;
        Monomial m;
        while (accept('*')) {
            if (done()) throw parse_error("dangling '*' in polynomial");
            unsigned vi;
            switch (s_[pos_]) {
                case 'x': vi = 0; break;
                case 'n': vi = 1; break;
                case 'k': vi = 2; break;
                default: throw parse_error(std::string("unknown indeterminate '") + s_[pos_] + "'");
            }
            ++pos_;
            unsigned e = 1;
            if (accept('^')) e = static_cast<unsigned>(std::strtoul(read_digits().c_str(), nullptr, 10));
            m.e[vi] += e;
        }
        return MultiPoly::from_term(c, m);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text) { return PolyParser(text).run(); }

std::vector<MultiPoly> expand_rising_product(unsigned m) {
    const MultiPoly X = MultiPoly::variable(Var::x);
    const MultiPoly K = MultiPoly::variable(Var::k);
    MultiPoly prod(1);
    for (unsigned j = 1; j <= m; ++j) prod *= X + K + MultiPoly(static_cast<long>(j));

    // Collect the coefficient of k^t as a polynomial in x.
    std::vector<MultiPoly> coeffs(m + 1);
    for (const auto& [mono, c] : prod.terms()) {
        Monomial rest = mono;
        rest.e[static_cast<unsigned>(Var::k)] = 0;
        coeffs[mono.e[static_cast<unsigned>(Var::k)]] += MultiPoly::from_term(c, rest);
    }
    return coeffs;
}

} // namespace harmsum

#include "harmsum/formula.hpp"

#include <json.hpp>

#include "harmsum/harmonic.hpp"

namespace harmsum {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::transcribed: return "transcribed";
        case Provenance::derived_base: return "derived_base";
        case Provenance::derived_raised: return "derived_raised";
    }
    return "transcribed";
}

Provenance provenance_from_name(const std::string& s) {
    if (s == "transcribed") return Provenance::transcribed;
    if (s == "derived_base") return Provenance::derived_base;
    if (s == "derived_raised") return Provenance::derived_raised;
    throw parse_error("unknown provenance tag: '" + s + "'");
}

bool Formula::identical(const Formula& o) const {
    if (power != o.power || order != o.order) return false;
    const auto& a = rhs.harmonic_terms();
    const auto& b = o.rhs.harmonic_terms();
    if (a.size() != b.size()) return false;
    for (auto ita = a.begin(), itb = b.begin(); ita != a.end(); ++ita, ++itb) {
        if (ita->first != itb->first || !ita->second.identical(itb->second)) return false;
    }
    return rhs.free_term().identical(o.rhs.free_term());
}

std::string Formula::lhs_plain() const {
    std::string lhs = "sum_{k=1..n}";
    if (power == 1)
        lhs += " k";
    else if (power > 1)
        lhs += " k^" + std::to_string(power);
    lhs += " H_k";
    if (order != 1) lhs += "^(" + std::to_string(order) + ")";
    lhs += "(x)";
    return lhs;
}

namespace {

std::string h_symbol_plain(unsigned order) {
    std::string s = "H_n";
    if (order != 1) s += "^(" + std::to_string(order) + ")";
    return s + "(x)";
}

std::string plain_formula(const Formula& f) {
    std::string out = f.lhs_plain() + " = ";
    bool first = true;
    for (auto it = f.rhs.harmonic_terms().rbegin(); it != f.rhs.harmonic_terms().rend(); ++it) {
        if (!first) out += " + ";
        out += "(" + it->second.to_string() + ")*" + h_symbol_plain(it->first);
        first = false;
    }
    if (!f.rhs.free_term().is_zero() || first) {
        if (!first) out += " + ";
        out += "(" + f.rhs.free_term().to_string() + ")";
    }
    return out;
}

std::string latex_formula(const Formula& f) {
    std::string out = "\\sum_{k=1}^{n} ";
    if (f.power == 1)
        out += "k ";
    else if (f.power > 1)
        out += "k^{" + std::to_string(f.power) + "} ";
    out += "H_k";
    if (f.order != 1) out += "^{(" + std::to_string(f.order) + ")}";
    out += "(x) = ";
    bool first = true;
    for (auto it = f.rhs.harmonic_terms().rbegin(); it != f.rhs.harmonic_terms().rend(); ++it) {
        if (!first) out += " + ";
        out += "\\left(" + it->second.to_latex() + "\\right) H_n";
        if (it->first != 1) out += "^{(" + std::to_string(it->first) + ")}";
        out += "(x)";
        first = false;
    }
    if (!f.rhs.free_term().is_zero() || first) {
        if (!first) out += " + ";
        out += "\\left(" + f.rhs.free_term().to_latex() + "\\right)";
    }
    return out;
}

nlohmann::json fn_to_json(const RationalFn& c) {
    return nlohmann::json{{"num", c.num().to_string()}, {"den", c.den().to_string()}};
}

RationalFn fn_from_json(const nlohmann::json& j) {
    return RationalFn(MultiPoly::parse(j.at("num").get<std::string>()),
                      MultiPoly::parse(j.at("den").get<std::string>()));
}

} // namespace

std::string format_formula(const Formula& f, FormulaStyle style) {
    switch (style) {
        case FormulaStyle::plain: return plain_formula(f);
        case FormulaStyle::latex: return latex_formula(f);
        case FormulaStyle::json: break;
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [l, c] : f.rhs.harmonic_terms()) {
        nlohmann::json t = fn_to_json(c);
        t["order"] = l;
        terms.push_back(std::move(t));
    }
    nlohmann::json j{{"power", f.power},
                     {"order", f.order},
                     {"terms", std::move(terms)},
                     {"free", fn_to_json(f.rhs.free_term())},
                     {"provenance", provenance_name(f.provenance)}};
    return j.dump();
}

Formula parse_formula(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed formula json: ") + e.what());
    }
    try {
        Formula f;
        f.power = j.at("power").get<unsigned>();
        f.order = j.at("order").get<unsigned>();
        for (const auto& t : j.at("terms")) f.rhs.add_term(t.at("order").get<unsigned>(), fn_from_json(t));
        f.rhs.add_free(fn_from_json(j.at("free")));
        f.provenance = provenance_from_name(j.at("provenance").get<std::string>());
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("formula json missing fields: ") + e.what());
    }
}

void ShiftedFormula::add_upper(unsigned j, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = upper.emplace(j, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) upper.erase(it);
    }
}

void ShiftedFormula::add_lower(unsigned j, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = lower.emplace(j, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) lower.erase(it);
    }
}

void ShiftedFormula::add_delta(unsigned j, const MultiPoly& c) {
    if (j == 0) {
        // H_{p+n}^(0) - H_p^(0) = (p+n) - p = n
        free += c * MultiPoly::variable(Var::n);
        return;
    }
    add_upper(j, c);
    add_lower(j, -c);
}

Rational ShiftedFormula::eval(std::uint64_t p, std::uint64_t n) const {
    const Assignment a = Assignment::xn(Rational(static_cast<long>(p)), Rational(n));
    Rational sum(0);
    for (const auto& [j, c] : upper) sum += c.eval(a) * harmonic_shifted(n, j, p);
    for (const auto& [j, c] : lower) sum += c.eval(a) * harmonic_shifted(0, j, p);
    sum += free.eval(a);
    return sum;
}

std::string ShiftedFormula::lhs_plain() const {
    std::string lhs = "sum_{k=1..n}";
    if (power == 1)
        lhs += " k";
    else if (power > 1)
        lhs += " k^" + std::to_string(power);
    lhs += " H_{p+k}";
    if (order != 1) lhs += "^(" + std::to_string(order) + ")";
    return lhs;
}

namespace {

// Shifted statements reuse the x slot for p; rename for display.
std::string with_p(const MultiPoly& poly) {
    std::string s = poly.to_string();
    for (auto& ch : s)
        if (ch == 'x') ch = 'p';
    return s;
}

} // namespace

std::string ShiftedFormula::to_plain() const {
    std::string out = lhs_plain() + " = ";
    bool first = true;
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
        if (!first) out += " + ";
        out += "(" + with_p(it->second) + ")*H_{p+n}";
        if (it->first != 1) out += "^(" + std::to_string(it->first) + ")";
        first = false;
    }
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
        if (!first) out += " + ";
        out += "(" + with_p(it->second) + ")*H_p";
        if (it->first != 1) out += "^(" + std::to_string(it->first) + ")";
        first = false;
    }
    if (!free.is_zero() || first) {
        if (!first) out += " + ";
        out += "(" + with_p(free) + ")";
    }
    return out;
}

std::string ShiftedFormula::to_latex() const {
    auto latex_p = [](const MultiPoly& poly) {
        std::string s = poly.to_latex();
        for (auto& ch : s)
            if (ch == 'x') ch = 'p';
        return s;
    };
    std::string out = "\\sum_{k=1}^{n} ";
    if (power == 1)
        out += "k ";
    else if (power > 1)
        out += "k^{" + std::to_string(power) + "} ";
    out += "H_{p+k}";
    if (order != 1) out += "^{(" + std::to_string(order) + ")}";
    out += " = ";
    bool first = true;
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
        if (!first) out += " + ";
        out += "\\left(" + latex_p(it->second) + "\\right) H_{p+n}";
        if (it->first != 1) out += "^{(" + std::to_string(it->first) + ")}";
        first = false;
    }
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
        if (!first) out += " + ";
        out += "\\left(" + latex_p(it->second) + "\\right) H_p";
        if (it->first != 1) out += "^{(" + std::to_string(it->first) + ")}";
        first = false;
    }
    if (!free.is_zero() || first) {
        if (!first) out += " + ";
        out += "\\left(" + latex_p(free) + "\\right)";
    }
    return out;
}

} // namespace harmsum

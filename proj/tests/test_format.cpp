#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <atomic>
#include <thread>
#include <unistd.h>
#include <fstream>
#include <random>

#include "harmsum/closed_forms.hpp"
#include "harmsum/derive.hpp"

using harmsum::Formula;
using harmsum::FormulaRegistry;
using harmsum::FormulaStyle;
using harmsum::Rational;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/harmsum_test_" + name + std::to_string(::getpid())) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("plain and latex renderings") {
    const Formula f = harmsum::transcribed_generic({1, 1});
    const std::string plain = harmsum::format_formula(f, FormulaStyle::plain);
    CHECK(plain.find("sum_{k=1..n} k H_k(x)") == 0);
    CHECK(plain.find("H_n(x)") != std::string::npos);
    const std::string latex = harmsum::format_formula(f, FormulaStyle::latex);
    CHECK(latex.find("\\sum_{k=1}^{n}") == 0);
    CHECK(latex.find("\\frac") != std::string::npos);  // the 1/2 and 1/4 coefficients
    // deterministic rendering
    CHECK(plain == harmsum::format_formula(harmsum::transcribed_generic({1, 1}), FormulaStyle::plain));
}

TEST_CASE("json round-trip is bit-exact on every derivable formula") {
    FormulaRegistry reg;
    for (unsigned i = 0; i <= 5; ++i)
        for (unsigned m = 1; m <= (i <= 4 ? i + 2 : 2); ++m) harmsum::derive_formula(i, m, reg);
    for (const Formula& f : reg.entries()) {
        const std::string text = harmsum::format_formula(f, FormulaStyle::json);
        const Formula back = harmsum::parse_formula(text);
        CHECK(back == f);
        CHECK(back.identical(f));
        CHECK(harmsum::format_formula(back, FormulaStyle::json) == text);
    }
}

TEST_CASE("json round-trip across random registry draws") {
    FormulaRegistry reg;
    for (unsigned i = 0; i <= 4; ++i)
        for (unsigned m = 1; m <= i + 2; ++m) harmsum::derive_formula(i, m, reg);
    const auto entries = reg.entries();
    std::mt19937_64 rng(0x10fULL);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    for (int draw = 0; draw < 100; ++draw) {
        const Formula& f = entries[pick(rng)];
        const Formula back = harmsum::parse_formula(harmsum::format_formula(f, FormulaStyle::json));
        CHECK(back.identical(f));
    }
}

TEST_CASE("malformed json is a parse error") {
    CHECK_THROWS_AS(harmsum::parse_formula("{not json"), harmsum::parse_error);
    CHECK_THROWS_AS(harmsum::parse_formula("{\"power\": 1}"), harmsum::parse_error);
}

TEST_CASE("registry journal persists and reloads") {
    TempFile tmp("journal");
    {
        FormulaRegistry reg;
        std::size_t loaded = reg.attach_journal(tmp.path, nullptr);
        CHECK(loaded == 0);
        harmsum::derive_formula(2, 3, reg);
        CHECK(reg.size() == 5);  // (0,1), (1,1), (2,1), (2,2), (2,3)
    }
    // a fresh registry picks the journal up without re-deriving
    FormulaRegistry reg2;
    const std::size_t loaded = reg2.attach_journal(tmp.path, nullptr);
    CHECK(loaded == reg2.size());
    CHECK(reg2.contains(2, 3));
    const Formula direct = harmsum::derive_formula(2, 3, reg2);  // registry hit, no work
    FormulaRegistry fresh;
    CHECK(direct == harmsum::derive_formula(2, 3, fresh));
}

TEST_CASE("journal tolerates a torn tail line") {
    TempFile tmp("torn");
    {
        FormulaRegistry reg;
        reg.attach_journal(tmp.path, nullptr);
        harmsum::derive_formula(1, 1, reg);
    }
    {
        std::ofstream out(tmp.path, std::ios::app);
        out << "{\"power\": 3, \"order\"";  // simulated crash mid-append
    }
    FormulaRegistry reg;
    std::vector<std::string> warnings;
    const std::size_t loaded = reg.attach_journal(tmp.path, [&](const std::string& w) { warnings.push_back(w); });
    CHECK(loaded >= 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("corrupted") != std::string::npos);
    CHECK_FALSE(reg.contains(3, 1));
}

TEST_CASE("journal conflict on a key is an integrity error") {
    TempFile tmp("conflict");
    {
        FormulaRegistry reg;
        reg.attach_journal(tmp.path, nullptr);
        harmsum::derive_formula(0, 1, reg);
    }
    {
        // hand-craft a different verified formula for the same key
        Formula wrong = harmsum::transcribed_generic({0, 1});
        wrong.rhs.add_term(1, harmsum::RationalFn(1));
        std::ofstream out(tmp.path, std::ios::app);
        out << harmsum::format_formula(wrong, FormulaStyle::json) << "\n";
    }
    FormulaRegistry reg;
    CHECK_THROWS_AS(reg.attach_journal(tmp.path, nullptr), harmsum::integrity_error);
}

TEST_CASE("registry insertion discipline") {
    FormulaRegistry reg;
    Formula f = harmsum::transcribed_generic({0, 1});
    CHECK_THROWS_AS(reg.insert(f), harmsum::error);  // unverified
    f.verified = true;
    reg.insert(f);
    reg.insert(f);  // idempotent on equal content
    CHECK(reg.size() == 1);
    Formula conflicting = f;
    conflicting.rhs.add_free(harmsum::RationalFn(1));
    conflicting.verified = true;
    CHECK_THROWS_AS(reg.insert(conflicting), harmsum::integrity_error);
}

TEST_CASE("concurrent derivation of one key is serialized and idempotent") {
    FormulaRegistry reg;
    std::vector<std::thread> workers;
    std::atomic<int> errors{0};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&reg, &errors] {
            try {
                harmsum::derive_formula(2, 2, reg);
            } catch (...) {
                ++errors;
            }
        });
    for (auto& w : workers) w.join();
    CHECK(errors == 0);
    CHECK(reg.size() == 4);  // (0,1), (1,1), (2,1), (2,2) exactly once each
    CHECK(reg.contains(2, 2));
}

#pragma once

// Built-in registry of the published example code pairs, with the printed
// generators, word lists, enumerators and theta coefficients, and a verifier
// that rebuilds everything from scratch.
//
// Printed elements "x + y w" name a ring element through its coset label
// (x, y), i.e. the element x - y w. The printed generator is the root of
// t^2 - t + d, which is -w; the two readings agree for p = 2.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thetacodes/codes.hpp"

namespace thetacodes {

/// Parses "x + y w" literally as the ring element x + y w.
RingElement parse_ring_element(const std::string& text, int p);
/// Parses a printed element such as "2w+1", "w", "3" (label notation, see above).
RingElement parse_printed_element(const std::string& text, int p);
/// Parses a printed word such as "(0,w,w+1)".
Word parse_printed_word(const std::string& text, int p);

/// Series coefficients as printed, e.g. "1 + 6q^2 + 24q^4"; exponent -> coefficient.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_printed_series(const std::string& text);

struct PrintedCode {
    std::string name;
    std::string a1, a2;
    std::vector<std::string> v;
    std::string swe;
    std::vector<std::string> words;                        // empty when not printed
    std::vector<std::pair<std::string, int>> factors;      // swe = prod f^k, when stated
};

struct PrintedTheta {
    std::int64_t ell;
    int code;  // index into codes, or -1 for a series printed as shared
    std::string series;
};

struct Example {
    std::string name;
    std::string summary;
    int p = 2;
    int n = 0;
    SpanKind span = SpanKind::Module;
    std::int64_t ell = 0;                 // level with equal theta series
    std::vector<std::int64_t> separated;  // larger levels where they differ
    std::vector<PrintedCode> codes;
    std::vector<PrintedTheta> thetas;
};

const std::vector<Example>& example_registry();
const Example& find_example(const std::string& name);

Code build_printed_code(const Example& ex, const PrintedCode& c);

struct Check {
    std::string what;
    bool ok = false;
    std::string detail;  // expected vs actual on failure
};

struct ExampleReport {
    std::string name;
    std::vector<Check> checks;

    bool passed() const;
};

/// Rebuilds the example's codes and checks word lists, enumerators,
/// factorizations, printed theta coefficients, equality at the stated level
/// and inequality at the larger ones. The printed enumerators are also
/// evaluated on their own, so the printed series can be checked even where
/// the generators do not reproduce the printed enumerator.
ExampleReport verify_example(const std::string& name);

}  // namespace thetacodes

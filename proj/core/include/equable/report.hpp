#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "equable/diophantine.hpp"
#include "equable/search.hpp"
#include "equable/triangle.hpp"

namespace equable {

/**
 * Result of the full classification pipeline: the Diophantine route
 * (enumerate_xyz -> xyz_to_sides -> realize_sides) side by side with the
 * exhaustive lattice oracle, plus whether the two routes agree on the set
 * of congruence classes.
 */
struct ClassificationReport {
    std::vector<XyzSolution> xyz_solutions;
    std::vector<std::array<int64_t, 3>> side_triples;  // (n_a, n_b, n_c)
    std::vector<LatticeTriangle> realizations;
    std::vector<CongruenceKey> oracle_keys;  // ascending
    int64_t oracle_window = 0;
    bool agreement = false;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Both Diophantine routes side by side: the reduced enumeration and the
/// direct brute-force scan, with the doubling cross-check.
struct EnumerationReport {
    std::vector<XyzSolution> xyz_solutions;
    std::vector<std::array<int64_t, 3>> side_triples;
    std::vector<UvwSolution> uvw_bruteforce;
    int64_t bound = 0;
    bool agreement = false;

    friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

ClassificationReport run_classification(SearchWindow w);
EnumerationReport run_enumeration(int64_t bound);

// JSON serialization. Field names are part of the documented schema (see
// README) and stable; from_json is the exact inverse of to_json.
std::string to_json(const ClassificationReport& r);
std::string to_json(const EnumerationReport& r);
ClassificationReport classification_from_json(const std::string& text);
EnumerationReport enumeration_from_json(const std::string& text);

// Human-readable renderings. Lengths and areas print symbolically as exact
// multiples of sqrt(3), never as decimals.
std::string to_text(const ClassificationReport& r);
std::string to_text(const EnumerationReport& r);

/// "12√3", and for quanta not divisible by 4, "49/4·√3" style.
std::string sqrt3_multiple_string(int64_t numerator, int64_t denominator = 1);

}  // namespace equable

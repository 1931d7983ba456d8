#pragma once

#include <string>
#include <vector>

#include "compack/necklace/certify.hpp"

namespace compack {

/// An expected (word, minimal polynomial, approximate root) row.
struct ReferenceRadius {
  std::string word;                 // digit notation, e.g. "111rr"
  std::vector<long> minpoly;        // integer coefficients, low degree first
  double approx;  // three decimals, truncated
};

/// The ten radius ratios admitting a skew necklace, by descending r.
const std::vector<ReferenceRadius>& reference_radii();

struct RadiusRecord {
  NecklaceWord word;
  AlgebraicReal value;
  RadiusStatus status = RadiusStatus::PreFilter;
  long precision_bits = 0;
  std::string reason;
};

struct RadiiReport {
  std::vector<NecklaceWord> candidates;
  /// Every (word, root) pair from the eliminants, by word then descending r.
  std::vector<RadiusRecord> records;
  /// Distinct pre-filter values, descending.
  std::vector<AlgebraicReal> prefilter_values;
  /// Certified pairs, by descending r.
  std::vector<RadiusRecord> certified;
  /// Pre-filter values certified for no word, with the word that produced them.
  std::vector<RadiusRecord> rejected;
  bool matches_reference = false;
  std::vector<std::string> mismatches;
  std::string minpoly_mode = "irreducible";
};

/// Full skew pipeline: enumeration, elimination, isolation, certification,
/// and comparison against reference_radii().
RadiiReport run_radii_pipeline(const CertifyOptions& opts = {});

/// Looks up a certified radius by its word (either notation).
const RadiusRecord* find_certified(const RadiiReport& report, const NecklaceWord& word);

}  // namespace compack

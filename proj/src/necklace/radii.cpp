#include "compack/necklace/radii.hpp"

#include <algorithm>
#include <cmath>

namespace compack {

const std::vector<ReferenceRadius>& reference_radii() {
  static const std::vector<ReferenceRadius> rows = {
      {"11111", {1, -6, 1, 4, 1}, 0.902},  {"1111r", {1, -6, -4, 8, 4}, 0.849}, {"111rr", {1, -6, 3, 4, 1}, 0.720},
      {"11r1r", {2, 9, -20, 4}, 0.690},    {"11rrr", {1, 0, -5, -2, 1}, 0.420}, {"1111", {-1, 2, 1}, 0.414},
      {"111r", {-1, 3, 2}, 0.280},         {"111", {-1, 4, 2}, 0.224},          {"1r1rr", {4, -20, 9, 2}, 0.223},
      {"11rr", {1, -6, 1}, 0.171},
  };
  return rows;
}

namespace {

bool minpoly_equals(const RationalPoly& p, const std::vector<long>& coeffs) {
  std::vector<Integer> expected;
  for (long c : coeffs) expected.emplace_back(c);
  return integer_coefficients(p) == integer_coefficients(from_integers(expected));
}

void compare_with_reference(RadiiReport& report) {
  const auto& ref = reference_radii();
  if (report.candidates.size() != 18) {
    report.mismatches.push_back("expected 18 candidate words, found " + std::to_string(report.candidates.size()));
  }
  if (report.prefilter_values.size() != 16) {
    report.mismatches.push_back("expected 16 pre-filter values, found " +
                                std::to_string(report.prefilter_values.size()));
  }
  if (report.certified.size() != ref.size()) {
    report.mismatches.push_back("expected " + std::to_string(ref.size()) + " certified rows, found " +
                                std::to_string(report.certified.size()));
  }
  for (const auto& row : ref) {
    const NecklaceWord w = NecklaceWord::parse(row.word);
    const RadiusRecord* hit = find_certified(report, w);
    if (!hit) {
      report.mismatches.push_back("no certified radius for " + row.word);
      continue;
    }
    if (!minpoly_equals(hit->value.minpoly(), row.minpoly)) {
      report.mismatches.push_back("minimal polynomial differs for " + row.word + ": " + to_string(hit->value.minpoly()));
    }
    // Reference values carry three decimals, truncated.
    const Rational printed(static_cast<long>(std::lround(row.approx * 1000)), 1000);
    if (hit->value.compare(printed) < 0 || hit->value.compare(printed + Rational(1, 1000)) >= 0) {
      report.mismatches.push_back("root for " + row.word + " does not truncate to " + printed.get_str());
    }
  }
  report.matches_reference = report.mismatches.empty();
}

}  // namespace

const RadiusRecord* find_certified(const RadiiReport& report, const NecklaceWord& word) {
  for (const auto& rec : report.certified) {
    if (rec.word == word) return &rec;
  }
  return nullptr;
}

RadiiReport run_radii_pipeline(const CertifyOptions& opts) {
  RadiiReport report;
  report.candidates = enumerate_skew_candidates();
  for (const auto& word : report.candidates) {
    for (auto& cand : skew_radius_candidates(word)) {
      const AngleSumCertificate cert =
          certify_counts(word.pair_counts(), dihedral_set_at(AngleContext::Skew, cand.value), opts);
      report.records.push_back({word, cand.value, cert.status, cert.precision_bits, cert.reason});
    }
  }
  for (const auto& rec : report.records) {
    const bool seen = std::any_of(report.prefilter_values.begin(), report.prefilter_values.end(),
                                  [&](const AlgebraicReal& v) { return v == rec.value; });
    if (!seen) report.prefilter_values.push_back(rec.value);
    if (rec.status == RadiusStatus::Certified) report.certified.push_back(rec);
  }
  auto descending = [](const auto& a, const auto& b) { return b < a; };
  std::sort(report.prefilter_values.begin(), report.prefilter_values.end(), descending);
  std::sort(report.certified.begin(), report.certified.end(),
            [](const RadiusRecord& a, const RadiusRecord& b) { return b.value < a.value; });
  for (const auto& rec : report.records) {
    const bool certified_somewhere = std::any_of(report.certified.begin(), report.certified.end(),
                                                 [&](const RadiusRecord& c) { return c.value == rec.value; });
    const bool listed = std::any_of(report.rejected.begin(), report.rejected.end(),
                                    [&](const RadiusRecord& c) { return c.value == rec.value; });
    if (!certified_somewhere && !listed) report.rejected.push_back(rec);
  }
  std::sort(report.rejected.begin(), report.rejected.end(),
            [](const RadiusRecord& a, const RadiusRecord& b) { return b.value < a.value; });
  compare_with_reference(report);
  return report;
}

}  // namespace compack

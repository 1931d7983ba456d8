#include "compack/necklace/search.hpp"

namespace compack {

std::vector<const NecklaceRadiusResult*> NecklaceSearchReport::admitting() const {
  std::vector<const NecklaceRadiusResult*> out;
  for (const auto& r : per_radius) {
    if (!r.words.empty()) out.push_back(&r);
  }
  return out;
}

NecklaceSearchReport search_necklaces(AngleContext ctx, const std::vector<RadiusRecord>& radii, const CertifyOptions& opts) {
  NecklaceSearchReport report;
  report.context = ctx;
  for (const auto& radius : radii) {
    NecklaceRadiusResult result{radius, {}, {}, {}, {}};
    result.bounds = triple_bounds(ctx, radius.value, opts.initial_bits);
    result.screened = search_triples(ctx, radius.value, opts);
    for (const auto& t : result.screened) {
      if (!t.certified) continue;
      result.certified.push_back(t.counts);
      for (auto& w : realize_words(t.counts)) result.words.push_back(std::move(w));
    }
    report.per_radius.push_back(std::move(result));
  }
  return report;
}

}  // namespace compack

#pragma once

#include <vector>

#include "compack/necklace/radii.hpp"

namespace compack {

struct NecklaceRadiusResult {
  RadiusRecord radius;
  TripleCount bounds;
  std::vector<TripleResult> screened;  // triples surviving the interval screen
  std::vector<TripleCount> certified;
  std::vector<NecklaceWord> words;     // realizations of the certified triples
};

struct NecklaceSearchReport {
  AngleContext context = AngleContext::Large;
  std::vector<NecklaceRadiusResult> per_radius;

  /// Radii with at least one realized word.
  std::vector<const NecklaceRadiusResult*> admitting() const;
};

/// Large or small necklaces at each of the given radii.
NecklaceSearchReport search_necklaces(AngleContext ctx, const std::vector<RadiusRecord>& radii,
                                      const CertifyOptions& opts = {});

}  // namespace compack

#pragma once

#include <map>

#include "compack/packing/model.hpp"
#include "compack/packing/stacking.hpp"
#include "compack/shell/embed.hpp"

namespace compack {

/// The two embedded shells at r = √2 - 1, computed once.
const std::vector<EmbeddedShell>& reference_shells();

/// Shape of the neighbourhood of every large motif sphere, found as an exact
/// linear isometry onto one of the reference shells. Throws Error for a
/// sphere whose neighbourhood matches neither.
std::map<int, ShapeClass> classify_shells(const PackingModel& p);

/// Layer sequence of a compact packing: a direction along which every large
/// sphere has a coplanar ring of six, then the in-plane offsets met walking
/// upward from layer to layer. Returns the shortest period; throws Error if
/// no layer structure exists.
StackingSequence recover_stacking(const PackingModel& p);

}  // namespace compack

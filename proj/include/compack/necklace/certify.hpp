#pragma once

#include <string>
#include <vector>

#include "compack/exactalg/algebraic_real.hpp"
#include "compack/exactalg/interval.hpp"
#include "compack/necklace/dihedral.hpp"
#include "compack/necklace/word.hpp"

namespace compack {

enum class RadiusStatus { PreFilter, Certified, Rejected, Degenerate };

std::string to_string(RadiusStatus s);

struct CertifyOptions {
  long initial_bits = 64;
  long max_bits = 4096;
};

/// True when the dihedral angle of pair type p is defined, i.e. |cos| < 1,
/// decided exactly. Imaginary generators count as undefined.
bool angle_defined(const DihedralSetAt& set, PairType p);

/// Enclosure of the dihedral angle arccos(cos_p) at the given precision.
DyadicInterval dihedral_angle(const DihedralSetAt& set, PairType p, long bits);

struct AngleSumCertificate {
  RadiusStatus status = RadiusStatus::PreFilter;
  long precision_bits = 0;
  DyadicInterval sum;  // enclosure of the angle sum; unset when degenerate
  std::string reason;
};

/// Decides whether i*delta_LL + j*delta_LS + k*delta_SS = 2 pi. Intervals
/// refute it; a proof requires cos = 1 and sin = 0 of the sum exactly in
/// the tower, with the sum enclosed in (0, 4 pi). Precision doubles from
/// `initial_bits` up to `max_bits`, then PrecisionExhausted is thrown.
AngleSumCertificate certify_counts(const TripleCount& counts, const DihedralSetAt& set, const CertifyOptions& opts = {});

/// Word form of certify_counts. Throws DegenerateInput when a dihedral angle
/// the word uses is undefined at r.
bool certify_angle_sum(const NecklaceWord& word, AngleContext ctx, const AlgebraicReal& r,
                       const CertifyOptions& opts = {});

/// Polynomial in r whose roots include every r at which the angle sum can be
/// 2 pi: cos(sum) - 1 is expanded in the tower and the generators are
/// eliminated by resultants in the order 0, 1, 2, 3. Primitive. Throws
/// DegenerateInput naming the stage if an elimination collapses to zero.
RationalPoly angle_sum_eliminant(const TripleCount& counts, AngleContext ctx);

struct CandidateRadius {
  AlgebraicReal value;
  NecklaceWord witness;
  RadiusStatus status = RadiusStatus::PreFilter;
};

/// Roots in (0, 1) of the skew eliminant of the word, sorted by descending r.
std::vector<CandidateRadius> skew_radius_candidates(const NecklaceWord& word);

/// i_max = floor(2 pi / delta_LL) and likewise for j, k, from certified
/// lower enclosures. Throws DegenerateInput if an angle is undefined.
TripleCount triple_bounds(AngleContext ctx, const AlgebraicReal& r, long bits = 64);

struct TripleResult {
  TripleCount counts;
  bool certified = false;
};

/// Every nonzero triple within the bounds whose interval screen admits 2 pi,
/// each decided exactly. Sorted by (i, j, k).
std::vector<TripleResult> search_triples(AngleContext ctx, const AlgebraicReal& r, const CertifyOptions& opts = {});

}  // namespace compack

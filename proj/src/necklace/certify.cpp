#include "compack/necklace/certify.hpp"

#include <algorithm>

#include "compack/errors.hpp"

namespace compack {

namespace {

using SymbolicElement = RadicalElement<RationalFunction>;
using ConcreteElement = RadicalElement<FieldElement>;

DyadicInterval angle_sum_enclosure(const DihedralSetAt& set, const std::array<int, 3>& n, long bits) {
  DyadicInterval sum(Rational(0), bits + 64);
  for (std::size_t p = 0; p < 3; ++p) {
    if (n[p] == 0) continue;
    sum = sum + dihedral_angle(set, static_cast<PairType>(p), bits) * Rational(n[p]);
  }
  return sum;
}

}  // namespace

std::string to_string(RadiusStatus s) {
  switch (s) {
    case RadiusStatus::PreFilter: return "pre_filter";
    case RadiusStatus::Certified: return "certified";
    case RadiusStatus::Rejected: return "rejected";
    case RadiusStatus::Degenerate: return "degenerate";
  }
  return "?";
}

bool angle_defined(const DihedralSetAt& set, PairType p) {
  try {
    const ConcreteElement one(set.tower, FieldElement(1));
    if (exact_sign(one - set.cos[p] * set.cos[p]) <= 0) return false;
    return exact_sign(set.sin[p]) > 0;
  } catch (const DegenerateInput&) {
    return false;
  }
}

DyadicInterval dihedral_angle(const DihedralSetAt& set, PairType p, long bits) {
  return acos(enclose(set.cos[p], bits, std::max(bits, 1L << 14)).with_precision(bits + 64));
}

AngleSumCertificate certify_counts(const TripleCount& counts, const DihedralSetAt& set, const CertifyOptions& opts) {
  AngleSumCertificate cert;
  const auto n = counts.as_array();
  for (std::size_t p = 0; p < 3; ++p) {
    if (n[p] > 0 && !angle_defined(set, static_cast<PairType>(p))) {
      cert.status = RadiusStatus::Degenerate;
      cert.reason = "dihedral angle of pair " + std::string(p == LL ? "LL" : (p == LS ? "LS" : "SS")) +
                    " undefined (|cos| >= 1)";
      return cert;
    }
  }
  const auto [c, s] = cos_sin_of_sum(set, n);
  const ConcreteElement one(set.tower, FieldElement(1));
  const bool multiple_of_two_pi = exact_sign(c - one) == 0 && exact_sign(s) == 0;
  for (long bits = opts.initial_bits; bits <= opts.max_bits; bits *= 2) {
    const DyadicInterval sum = angle_sum_enclosure(set, n, bits);
    const DyadicInterval pi = DyadicInterval::pi(bits + 64);
    const DyadicInterval two_pi = pi * Rational(2);
    const DyadicInterval four_pi = pi * Rational(4);
    cert.precision_bits = bits;
    cert.sum = sum;
    if (sum.precedes(two_pi) || two_pi.precedes(sum)) {
      cert.status = RadiusStatus::Rejected;
      cert.reason = "angle sum " + sum.to_string(10) + " excludes 2π";
      return cert;
    }
    if (multiple_of_two_pi && sum.positive() && sum.precedes(four_pi)) {
      cert.status = RadiusStatus::Certified;
      cert.reason = "cos = 1 and sin = 0 exactly, sum in (0, 4π)";
      return cert;
    }
  }
  throw PrecisionExhausted("angle sum certification " + counts.to_string(), opts.max_bits);
}

bool certify_angle_sum(const NecklaceWord& word, AngleContext ctx, const AlgebraicReal& r, const CertifyOptions& opts) {
  const AngleSumCertificate cert = certify_counts(word.pair_counts(), dihedral_set_at(ctx, r), opts);
  if (cert.status == RadiusStatus::Degenerate) throw DegenerateInput(word.letters() + ": " + cert.reason);
  return cert.status == RadiusStatus::Certified;
}

RationalPoly angle_sum_eliminant(const TripleCount& counts, AngleContext ctx) {
  const SymbolicDihedralSet set = symbolic_dihedral_set(ctx);
  auto [c, s] = cos_sin_of_sum(set, counts.as_array());
  SymbolicElement e = c - SymbolicElement(set.tower, RationalFunction(1));
  for (int i = 0; i < kTowerGenerators; ++i) {
    e = eliminate_generator(e, i);
    if (e.is_zero()) {
      throw DegenerateInput("elimination of " + set.tower->name(i) + " for " + counts.to_string() +
                            " collapsed to zero");
    }
  }
  return primitive_part(e.coefficient(0).numerator());
}

std::vector<CandidateRadius> skew_radius_candidates(const NecklaceWord& word) {
  const RationalPoly p = angle_sum_eliminant(word.pair_counts(), AngleContext::Skew);
  std::vector<CandidateRadius> out;
  for (auto& root : isolate_real_roots(p, 0, 1)) out.push_back({root, word, RadiusStatus::PreFilter});
  std::reverse(out.begin(), out.end());
  return out;
}

TripleCount triple_bounds(AngleContext ctx, const AlgebraicReal& r, long bits) {
  const DihedralSetAt set = dihedral_set_at(ctx, r);
  std::array<int, 3> bound{};
  const DyadicInterval two_pi = DyadicInterval::pi(bits + 64) * Rational(2);
  for (std::size_t p = 0; p < 3; ++p) {
    if (!angle_defined(set, static_cast<PairType>(p))) {
      throw DegenerateInput("triple_bounds: dihedral angle undefined in context " + to_string(ctx));
    }
    const Rational lo = dihedral_angle(set, static_cast<PairType>(p), bits).lower();
    bound[p] = static_cast<int>(floor_of(two_pi.upper() / lo).get_si());
  }
  return {bound[0], bound[1], bound[2]};
}

std::vector<TripleResult> search_triples(AngleContext ctx, const AlgebraicReal& r, const CertifyOptions& opts) {
  if (ctx == AngleContext::Skew) throw DegenerateInput("search_triples expects the large or small context");
  const DihedralSetAt set = dihedral_set_at(ctx, r);
  const TripleCount bound = triple_bounds(ctx, r, opts.initial_bits);
  std::array<DyadicInterval, 3> angle;
  for (std::size_t p = 0; p < 3; ++p) angle[p] = dihedral_angle(set, static_cast<PairType>(p), opts.initial_bits);
  const DyadicInterval two_pi = DyadicInterval::pi(opts.initial_bits + 64) * Rational(2);
  std::vector<TripleResult> out;
  for (int i = 0; i <= bound.i; ++i) {
    for (int j = 0; j <= bound.j; ++j) {
      for (int k = 0; k <= bound.k; ++k) {
        if (i + j + k == 0) continue;
        const DyadicInterval sum = angle[LL] * Rational(i) + angle[LS] * Rational(j) + angle[SS] * Rational(k);
        if (sum.precedes(two_pi) || two_pi.precedes(sum)) continue;
        const TripleCount t{i, j, k};
        const AngleSumCertificate cert = certify_counts(t, set, opts);
        out.push_back({t, cert.status == RadiusStatus::Certified});
      }
    }
  }
  return out;
}

}  // namespace compack

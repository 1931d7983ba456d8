#include "compack/exactalg/resultant.hpp"

namespace compack {

RationalPoly eliminate_outer(const BivariatePoly& p, const BivariatePoly& q) {
  return primitive_part(resultant(p, q));
}

}  // namespace compack

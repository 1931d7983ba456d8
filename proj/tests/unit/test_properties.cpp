#include <doctest.h>

#include "../support/properties.hpp"

using namespace compack::testing;

namespace {

void require(const PropertyOutcome& p, long at_least) {
  INFO(p.name << ": " << p.first_failure);
  CHECK(p.instances >= at_least);
  CHECK(p.failures == 0);
}

}  // namespace

TEST_CASE("interval operations contain the exact result") { require(interval_containment(100'000, 20240601), 100'000); }

TEST_CASE("resultants vanish exactly at common roots") { require(resultant_soundness(1'000, 7), 1'000); }

TEST_CASE("radical tower arithmetic obeys the ring laws") { require(radical_tower_laws(1'000, 11), 1'000); }

TEST_CASE("reciprocal cosine identity") { require(reciprocal_identity(), 3); }

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "props_common.hpp"

TEST_CASE("smc duality over every enumerated silting complex") {
  props::Outcome o = props::smc_duality();
  INFO(o.detail);
  CHECK(o.ok);
  CHECK(o.cases >= 200);
}

TEST_CASE("facet partition, pairing, lambda axioms and dual-basis identity") {
  props::FacetOutcomes R = props::facet_lambda_duality();
  INFO(R.partition.detail);
  CHECK(R.partition.ok);
  INFO(R.pairing.detail);
  CHECK(R.pairing.ok);
  INFO(R.lambda.detail);
  CHECK(R.lambda.ok);
  INFO(R.dual_ab.detail);
  CHECK(R.dual_ab.ok);
}

TEST_CASE("m-tf fans: axioms, face closure, boundary purity, refinement") {
  props::Outcome o = props::mtf_properties();
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("direct sums are presilting exactly when the cone sits inside D(U)") {
  props::Outcome o = props::presilting_pairs();
  INFO(o.detail);
  CHECK(o.ok);
  CHECK(o.cases >= 200);
}

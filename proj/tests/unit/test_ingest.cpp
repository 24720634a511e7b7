// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include <string>

#include "doctest.h"
#include "ndc/errors.hpp"
#include "ndc/ingest.hpp"

using namespace ndc;

namespace {

// Two runs of one point plus a second method, exercising grouping.
const char* kSample = R"({
  "experiments": [
    {"method": "h", "layout": "linear", "n": 2, "theta": 0.785, "run": 0,
     "branch": "single", "counts": {"10": 750, "00": 250}},
    {"method": "h", "layout": "linear", "n": 2, "theta": 0.785, "run": 0,
     "branch": "double",
     "counts": {"10": 400, "11": 100, "00": 400, "01": 100}},
    {"method": "h", "layout": "linear", "n": 2, "theta": 0.785, "run": 1,
     "branch": "single", "counts": {"10": 700, "00": 300}},
    {"method": "h", "layout": "linear", "n": 2, "theta": 0.785, "run": 1,
     "branch": "double", "counts": {"10": 500, "00": 500}},
    {"method": "m", "n": 3, "theta": 0.5, "run": 0,
     "branch": "single", "counts": {"10": 60, "00": 40}},
    {"method": "m", "n": 3, "theta": 0.5, "run": 0,
     "branch": "double", "counts": {"10": 50, "00": 50}}
  ]
})";

}  // namespace

TEST_CASE("counts aggregate into per-point rows") {
  auto rows = ingest_json_string(kSample);
  REQUIRE(rows.size() == 2);

  const SweepRow& h = rows[0];
  CHECK(h.method == "h");
  CHECK(h.layout == "linear");
  CHECK(h.n == 2);
  CHECK(h.runs == 2);
  CHECK(h.shots == 1000);
  CHECK(h.seed == 0);           // external data carries no seed
  CHECK(h.noise == "external");  // and no simulator noise fingerprint
  // Run 0: 0.75 - 0.5 = 0.25; run 1: 0.70 - 0.50 = 0.20.
  CHECK(h.v_mean == doctest::Approx(0.225).epsilon(1e-15));
  CHECK(h.v_sigma == doctest::Approx(0.035355339059327376).epsilon(1e-12));
  CHECK(h.p_single_read == doctest::Approx(0.725).epsilon(1e-15));
  CHECK(h.p_double_read == doctest::Approx(0.5).epsilon(1e-15));

  const SweepRow& m = rows[1];
  CHECK(m.method == "m");
  CHECK(m.layout == "linear");  // defaulted
  CHECK(m.runs == 1);
  CHECK(m.shots == 100);
  CHECK(m.v_mean == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(m.v_sigma == 0.0);
}

TEST_CASE("first-seen order of points is preserved") {
  auto rows = ingest_json_string(kSample);
  CHECK(rows[0].method == "h");
  CHECK(rows[1].method == "m");
}

TEST_CASE("ingest errors") {
  CHECK_THROWS_AS(ingest_json_string("not json"), ParseError);
  CHECK_THROWS_AS(ingest_json_string("[]"), ParseError);
  CHECK_THROWS_AS(ingest_json_string(R"({"experiments": 3})"), ParseError);

  // Missing the double branch.
  CHECK_THROWS_AS(ingest_json_string(R"({"experiments": [
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "single", "counts": {"00": 10}}]})"),
                  ParseError);

  // Duplicate branch for one run.
  CHECK_THROWS_AS(ingest_json_string(R"({"experiments": [
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "single", "counts": {"00": 10}},
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "single", "counts": {"00": 10}},
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "double", "counts": {"00": 10}}]})"),
                  ParseError);

  // Malformed bitstring key.
  CHECK_THROWS_AS(ingest_json_string(R"({"experiments": [
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "single", "counts": {"012": 10}},
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "double", "counts": {"00": 10}}]})"),
                  ParseError);

  // Non-positive count.
  CHECK_THROWS_AS(ingest_json_string(R"({"experiments": [
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "single", "counts": {"00": 0}},
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "double", "counts": {"00": 10}}]})"),
                  ParseError);

  // Unknown method name.
  CHECK_THROWS_AS(ingest_json_string(R"({"experiments": [
    {"method": "q", "n": 2, "theta": 0.5, "run": 0,
     "branch": "single", "counts": {"00": 10}},
    {"method": "q", "n": 2, "theta": 0.5, "run": 0,
     "branch": "double", "counts": {"00": 10}}]})"),
                  ParseError);

  // Unknown branch tag.
  CHECK_THROWS_AS(ingest_json_string(R"({"experiments": [
    {"method": "h", "n": 2, "theta": 0.5, "run": 0,
     "branch": "both", "counts": {"00": 10}}]})"),
                  ParseError);
}

TEST_CASE("golden counts file matches its expected csv") {
  const std::string dir(NDCBENCH_TEST_DATA_DIR);
  auto rows = ingest_json_file(dir + "/golden_counts.json");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].v_mean == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(ingest_json_file("missing.json"), ParseError);
}

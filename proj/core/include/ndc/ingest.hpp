// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors
//
// Ingestion of externally collected shot counts.
//
// Input is a JSON document of the form
//   {"experiments": [
//      {"method": "h", "layout": "linear", "n": 4, "theta": 0.785,
//       "branch": "single", "run": 0, "counts": {"00": 381, "10": 119}},
//      ...]}
// Keys of "counts" are classical bitstrings with bit 0 rightmost. Each
// (method, layout, n, theta, run) must appear once per branch; runs of a
// point are aggregated into one CSV row exactly like a local sweep.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ndc/benchrun.hpp"

namespace ndc {

std::vector<SweepRow> ingest_json(std::istream& in);
std::vector<SweepRow> ingest_json_string(const std::string& text);
std::vector<SweepRow> ingest_json_file(const std::string& path);

}  // namespace ndc

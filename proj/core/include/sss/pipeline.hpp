// Copyright 2026 the sss authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sss/access_structure.hpp"
#include "sss/rng.hpp"

namespace sss {

struct StageResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> witness_lines;  // minimal human-checkable evidence on failure
};

/// End-to-end verdict of one theorem pipeline. The canonical text rendering
/// is byte-deterministic for fixed inputs and seed; elapsed time is kept out
/// of it and reported on the diagnostic stream only.
struct PipelineReport {
    std::string pipeline;
    std::string input_digest;  // FNV-1a 64 of the canonical input text, hex
    std::vector<StageResult> stages;
    bool pass = false;
    double elapsed_ms = 0.0;
};

/// generators -> span program -> exhaustive joint distribution ->
/// classification. Passes when the realized structure equals the minimized
/// input family and the classifier reports a perfect scheme.
PipelineReport run_perfect_pipeline(const Family& generators, std::int64_t p,
                                    std::uint64_t max_enumeration = 10'000'000);

/// witness -> Hilbert program at the given truncation -> realization
/// equivalence on all subsets -> conditional variance and wrapped band checks
/// on every maximal unqualified set.
PipelineReport run_ramp_pipeline(const GDeltaWitness& witness, int levels, std::int64_t samples,
                                 std::uint64_t seed = kDefaultSeed);

/// Text format: report v1, pipeline/input lines, one stage line per stage
/// with optional witness lines, final verdict line.
std::string format_report(const PipelineReport& report);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace sss

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

#include "sss/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "sss/classifier.hpp"
#include "sss/errors.hpp"
#include "sss/hilbert.hpp"
#include "sss/linear_scheme.hpp"
#include "sss/span_program.hpp"

namespace sss {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

namespace {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<size_t>(i)] = digits[v & 0xF];
    return out;
}

class Runner {
  public:
    explicit Runner(PipelineReport& report) : report_(report) {}

    /// Runs one stage; exceptions become a failed stage with the message as
    /// witness. Returns false when the pipeline should stop.
    template <typename Fn>
    bool stage(const std::string& name, Fn&& fn) {
        StageResult result;
        result.name = name;
        try {
            result.pass = fn(result.witness_lines);
        } catch (const std::exception& e) {
            result.pass = false;
            result.witness_lines.push_back(std::string("error: ") + e.what());
        }
        const bool carry_on = result.pass;
        report_.stages.push_back(std::move(result));
        if (!carry_on) report_.pass = false;
        return carry_on;
    }

  private:
    PipelineReport& report_;
};

}  // namespace

PipelineReport run_perfect_pipeline(const Family& generators, std::int64_t p,
                                    std::uint64_t max_enumeration) {
    const auto start = std::chrono::steady_clock::now();
    PipelineReport report;
    report.pipeline = "perfect";
    report.pass = true;
    {
        std::ostringstream digest;
        write_structure(digest, canonicalize_family(generators));
        digest << "p " << p << "\n";
        report.input_digest = hex64(fnv1a64(digest.str()));
    }

    Runner runner(report);
    SpanProgram program;
    MonotoneStructure structure = MonotoneStructure::permissive({});
    bool ok = runner.stage("construct", [&](std::vector<std::string>& witness) {
        structure = MonotoneStructure::from_generators(generators);
        if (structure.generators().empty()) {
            witness.push_back("empty generator family");
            return false;
        }
        program = from_generators(generators, p);
        return true;
    });

    PidSet universe;
    if (ok) {
        for (const PidSet& g : generators) universe = set_union(universe, g);
        ok = runner.stage("structure", [&](std::vector<std::string>& witness) {
            const Family realized = realized_structure(program, universe);
            const Family expected = minimize_generators(generators);
            if (realized == expected) return true;
            witness.push_back("realized " + std::to_string(realized.size()) +
                              " minimal sets, expected " + std::to_string(expected.size()));
            for (const PidSet& g : realized) witness.push_back("realized " + format_set(g));
            return false;
        });
    }

    JointDistributionTable table;
    if (ok)
        ok = runner.stage("enumerate", [&](std::vector<std::string>&) {
            table = joint_distribution(program, universe, max_enumeration);
            return true;
        });

    if (ok)
        runner.stage("classify", [&](std::vector<std::string>& witness) {
            const Classification result = classify(table, structure);
            if (result.label == SchemeLabel::perfect) return true;
            witness.push_back("label " + to_string(result.label));
            for (const auto& v : result.violations) {
                std::string atoms;
                for (int a : v.share_atom) atoms += std::to_string(a) + " ";
                witness.push_back("violation B={" + format_set(v.b) + "} share=(" + atoms +
                                  ") secret=" + std::to_string(v.secret_atom));
            }
            return false;
        });

    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start).count();
    return report;
}

PipelineReport run_ramp_pipeline(const GDeltaWitness& witness, int levels, std::int64_t samples,
                                 std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    PipelineReport report;
    report.pipeline = "ramp";
    report.pass = true;
    {
        std::ostringstream digest;
        write_gdelta_layers(digest, witness.levels);
        digest << "levels " << levels << "\nsamples " << samples << "\nseed " << seed << "\n";
        report.input_digest = hex64(fnv1a64(digest.str()));
    }

    Runner runner(report);
    HilbertProgram program;
    bool ok = runner.stage("construct", [&](std::vector<std::string>&) {
        program = hilbert_from_witness(witness, levels);
        return true;
    });

    PidSet universe;
    if (ok) {
        universe = program.participants();
        ok = runner.stage("realization", [&](std::vector<std::string>& lines) {
            if (universe.size() > 16) {
                lines.push_back("universe too large for exhaustive check");
                return false;
            }
            bool all_ok = true;
            for (const PidSet& a : subsets_of(universe)) {
                const bool exact = realizes_exact(program, a);
                const bool numeric = orthogonal_decompose(program, a).v1_norm_sq == 0.0;
                const bool expected = gdelta_membership(witness, a, levels);
                if (exact != expected || numeric != expected) {
                    lines.push_back("mismatch A={" + format_set(a) + "} exact=" +
                                    (exact ? "1" : "0") + " numeric=" + (numeric ? "1" : "0") +
                                    " gdelta=" + (expected ? "1" : "0"));
                    all_ok = false;
                }
            }
            return all_ok;
        });
    }

    if (ok) {
        // maximal unqualified sets at this truncation
        std::vector<PidSet> maximal;
        for (const PidSet& b : subsets_of(universe)) {
            if (gdelta_membership(witness, b, levels)) continue;
            bool is_maximal = true;
            for (ParticipantId p : set_difference(universe, b))
                if (!gdelta_membership(witness, set_union(b, {p}), levels)) is_maximal = false;
            if (is_maximal) maximal.push_back(b);
        }

        ok = runner.stage("conditional", [&](std::vector<std::string>& lines) {
            bool all_ok = true;
            for (const PidSet& b : maximal) {
                ConditionalCheckOptions options;
                const ConditionalReport r = conditional_check(program, b, samples, seed, options);
                if (!r.variance_pass) {
                    std::ostringstream line;
                    line << "B={" << format_set(b) << "} residual " << r.residual_variance
                         << " expected " << r.v1_norm_sq << " se " << r.stderr_variance;
                    lines.push_back(line.str());
                    all_ok = false;
                }
            }
            return all_ok;
        });

        if (ok)
            runner.stage("wrapped", [&](std::vector<std::string>& lines) {
                bool all_ok = true;
                for (const PidSet& b : maximal) {
                    ConditionalCheckOptions options;
                    options.wrap = true;
                    const ConditionalReport r =
                        conditional_check(program, b, samples, seed, options);
                    if (!r.band_pass) {
                        std::ostringstream line;
                        line << "B={" << format_set(b) << "} band c " << r.band_c
                             << " marginal [" << r.marginal_min_ratio << ","
                             << r.marginal_max_ratio << "] residual ["
                             << r.residual_min_ratio << "," << r.residual_max_ratio << "]";
                        lines.push_back(line.str());
                        all_ok = false;
                    }
                }
                return all_ok;
            });
    }

    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_report(const PipelineReport& report) {
    std::ostringstream out;
    out << "report v1\n";
    out << "pipeline " << report.pipeline << "\n";
    out << "input " << report.input_digest << "\n";
    for (const StageResult& stage : report.stages) {
        out << "stage " << stage.name << ' ' << (stage.pass ? "pass" : "fail") << "\n";
        for (const std::string& line : stage.witness_lines) out << "witness " << line << "\n";
    }
    out << "verdict " << (report.pass ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace sss

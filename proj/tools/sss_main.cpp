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

// Command line front end. Exit codes: 0 success or check passed, 1 check
// failed or negative answer, 2 usage error, 3 input format error. All
// diagnostics go to stderr; with a fixed --seed every invocation is
// byte-reproducible.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sss/access_structure.hpp"
#include "sss/line_reader.hpp"
#include "sss/classifier.hpp"
#include "sss/errors.hpp"
#include "sss/hilbert.hpp"
#include "sss/linear_scheme.hpp"
#include "sss/pipeline.hpp"
#include "sss/rng.hpp"
#include "sss/span_program.hpp"
#include "sss/table.hpp"
#include "sss/tail_threshold.hpp"
#include "sss/wrapped_normal.hpp"

namespace {

using namespace sss;

// option combinations CLI11 cannot express (either-or inputs)
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Runs fn with the chosen output stream (file or stdout).
int with_output(const std::string& out_path, const std::function<int(std::ostream&)>& fn) {
    if (out_path.empty()) return fn(std::cout);
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file '" + out_path + "'");
    return fn(out);
}

GDeltaWitness load_witness(const std::string& path) {
    return normalize_witness(read_gdelta_file(path));
}

std::string format_ids_compact(const PidSet& s) {
    if (s.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

struct Options {
    std::string generators_file, witness_file, sets_file, program_file, table_file;
    std::string structure_file, dealing_file, forbidden_file, obs_file, out_file;
    std::string set_text, universe_text, shares_text, name;
    std::vector<std::string> obs_inline;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t prime = 2, samples = 100000, cap = 8, prefix = 16, run_length = 4;
    std::uint64_t bound = 10'000'000;
    int levels = 0, max_index = 0, m = 0, level = 0, workers = 1, bins = 20;
    double sigma = 1.0, tau = kRankTolerance, variance_sigmas = 4.0, band_sigmas = 5.0;
    bool wrap = false;
};

std::map<std::int64_t, std::int64_t> parse_observations(const Options& opt) {
    std::map<std::int64_t, std::int64_t> observed;
    auto insert = [&observed](std::int64_t index, std::int64_t value) {
        auto [it, inserted] = observed.emplace(index, value);
        if (!inserted && it->second != value)
            throw FormatError("conflicting observations for share index " +
                              std::to_string(index));
    };
    for (const std::string& spec : opt.obs_inline) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw FormatError("observation '" + spec + "' is not index=value");
        insert(parse_int(spec.substr(0, eq), "share index"),
               parse_int(spec.substr(eq + 1), "share value"));
    }
    if (!opt.obs_file.empty()) {
        std::ifstream in(opt.obs_file);
        if (!in) throw FormatError("cannot open '" + opt.obs_file + "'");
        LineReader reader(in, opt.obs_file);
        std::string line;
        while (reader.next(line)) {
            auto tokens = split_tokens(line);
            if (tokens.size() != 3 || tokens[0] != "obs")
                reader.fail("expected 'obs <index> <value>'");
            insert(parse_int(tokens[1], "share index"), parse_int(tokens[2], "share value"));
        }
    }
    return observed;
}

int cmd_structure_minimize(const Options& opt) {
    const Family minimized = minimize_generators(read_structure_file(opt.generators_file));
    return with_output(opt.out_file, [&](std::ostream& out) {
        write_structure(out, minimized);
        return 0;
    });
}

int cmd_structure_member(const Options& opt) {
    const PidSet a = parse_set(opt.set_text);
    bool member = false;
    if (!opt.generators_file.empty()) {
        member = gen_membership(read_structure_file(opt.generators_file), a);
    } else if (!opt.witness_file.empty()) {
        const GDeltaWitness witness = load_witness(opt.witness_file);
        const int level = opt.level > 0 ? opt.level : witness.depth();
        member = gdelta_membership(witness, a, level);
    } else {
        throw UsageError("member: need --generators or --witness");
    }
    std::cout << (member ? "true" : "false") << "\n";
    return member ? 0 : 1;
}

int cmd_structure_normalize(const Options& opt) {
    const GDeltaWitness witness = load_witness(opt.generators_file);
    return with_output(opt.out_file, [&](std::ostream& out) {
        write_gdelta_layers(out, witness.levels);
        return 0;
    });
}

int cmd_structure_builtin(const Options& opt) {
    Family forbidden;
    if (!opt.forbidden_file.empty()) forbidden = read_structure_file(opt.forbidden_file);
    const BuiltinStructure built =
        builtin_structure(opt.name, opt.max_index, opt.levels, opt.m, forbidden);
    return with_output(opt.out_file, [&](std::ostream& out) {
        if (const auto* structure = std::get_if<MonotoneStructure>(&built))
            write_structure(out, structure->generators());
        else
            write_gdelta_layers(out, std::get<GDeltaWitness>(built).levels);
        return 0;
    });
}

int cmd_structure_refute(const Options& opt) {
    const std::vector<PidSet> sets = read_structure_file(opt.sets_file);
    // raw layers on purpose: the refutation pairs level i with the i-th
    // candidate set and does not rely on a decreasing chain
    GDeltaWitness witness;
    witness.levels = read_gdelta_file(opt.witness_file);
    witness.normalized = is_normalized_witness(witness);
    const PidSet diagonal = diagonal_refutation(sets, witness);
    return with_output(opt.out_file, [&](std::ostream& out) {
        out << format_set(diagonal) << "\n";
        return 0;
    });
}

int cmd_span_build(const Options& opt) {
    const SpanProgram program =
        from_generators(read_structure_file(opt.generators_file), opt.prime);
    return with_output(opt.out_file, [&](std::ostream& out) {
        write_span_program(out, program);
        return 0;
    });
}

int cmd_span_realize(const Options& opt) {
    const SpanProgram program = read_span_program_file(opt.program_file);
    const bool ok = realizes(program, parse_set(opt.set_text));
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_span_structure(const Options& opt) {
    const SpanProgram program = read_span_program_file(opt.program_file);
    const PidSet universe =
        opt.universe_text.empty() ? program.participants() : parse_set(opt.universe_text);
    const Family realized = realized_structure(program, universe);
    return with_output(opt.out_file, [&](std::ostream& out) {
        write_structure(out, realized);
        return 0;
    });
}

int cmd_scheme_deal(const Options& opt) {
    const SpanProgram program = read_span_program_file(opt.program_file);
    const Dealing dealing = deal(program, opt.seed);
    return with_output(opt.out_file, [&](std::ostream& out) {
        write_dealing(out, dealing);
        return 0;
    });
}

int cmd_scheme_recover(const Options& opt) {
    const SpanProgram program = read_span_program_file(opt.program_file);
    const Dealing dealing = read_dealing_file(opt.dealing_file);
    const std::int64_t secret = recover(program, parse_set(opt.set_text), dealing.shares);
    std::cout << secret << "\n";
    return 0;
}

int cmd_scheme_enumerate(const Options& opt) {
    const SpanProgram program = read_span_program_file(opt.program_file);
    const PidSet observed =
        opt.set_text.empty() ? program.participants() : parse_set(opt.set_text);
    const JointDistributionTable table =
        joint_distribution(program, observed, opt.bound, opt.workers);
    return with_output(opt.out_file, [&](std::ostream& out) {
        write_table(out, table);
        return 0;
    });
}

int cmd_scheme_classify(const Options& opt) {
    JointDistributionTable table;
    if (!opt.table_file.empty()) {
        table = read_table_file(opt.table_file);
    } else if (!opt.program_file.empty()) {
        const SpanProgram program = read_span_program_file(opt.program_file);
        table = joint_distribution(program, program.participants(), opt.bound, opt.workers);
    } else {
        throw UsageError("classify: need --table or --program");
    }
    const MonotoneStructure structure =
        MonotoneStructure::from_generators(read_structure_file(opt.structure_file));
    const Classification result = classify(table, structure);
    return with_output(opt.out_file, [&](std::ostream& out) {
        out << "label " << to_string(result.label) << "\n";
        if (result.c) out << "c " << format_rational(*result.c) << "\n";
        out << "recovery " << (result.recovery_ok ? "ok" : "fail") << "\n";
        for (const auto& [b, bound] : result.c_by_set)
            out << "cb " << format_ids_compact(b) << ' '
                << (bound.infinite ? "inf" : format_rational(bound.c)) << "\n";
        for (const auto& v : result.violations) {
            out << "violation " << format_ids_compact(v.b) << ' ';
            out << format_ids_compact(PidSet(v.share_atom.begin(), v.share_atom.end()));
            out << ' ' << v.secret_atom << "\n";
        }
        return 0;
    });
}

int cmd_gauss_build(const Options& opt) {
    const GDeltaWitness witness = load_witness(opt.witness_file);
    const int levels = opt.levels > 0 ? opt.levels : witness.depth();
    const HilbertProgram program = hilbert_from_witness(witness, levels);
    return with_output(opt.out_file, [&](std::ostream& out) {
        write_hilbert_program(out, program);
        return 0;
    });
}

int cmd_gauss_decompose(const Options& opt) {
    const HilbertProgram program = read_hilbert_program_file(opt.program_file);
    const Decomposition d = orthogonal_decompose(program, parse_set(opt.set_text), opt.tau);
    return with_output(opt.out_file, [&](std::ostream& out) {
        out << "v1_norm_sq " << fmt_double(d.v1_norm_sq) << "\n";
        out << "v2_norm_sq " << fmt_double(d.projection_norm_sq) << "\n";
        out << "target_norm_sq " << fmt_double(d.target_norm_sq) << "\n";
        for (size_t i = 0; i < d.projection_coeffs.size(); ++i)
            out << "coeff " << i << ' ' << fmt_double(d.projection_coeffs[i]) << "\n";
        return 0;
    });
}

int cmd_gauss_simulate(const Options& opt) {
    const HilbertProgram program = read_hilbert_program_file(opt.program_file);
    const auto records = simulate(program, opt.samples, opt.seed, opt.wrap);
    return with_output(opt.out_file, [&](std::ostream& out) {
        out << "# columns:";
        for (const auto& [pid, vecs] : program.assignment)
            for (size_t i = 0; i < vecs.size(); ++i) out << ' ' << pid << '/' << i;
        out << " secret\n";
        for (const auto& record : records) {
            for (double share : record.shares) out << fmt_double(share) << '\t';
            out << fmt_double(record.secret) << "\n";
        }
        return 0;
    });
}

int cmd_gauss_check(const Options& opt) {
    const HilbertProgram program = read_hilbert_program_file(opt.program_file);
    ConditionalCheckOptions options;
    options.wrap = opt.wrap;
    options.bins = opt.bins;
    options.tau_rank = opt.tau;
    options.variance_sigmas = opt.variance_sigmas;
    options.band_sigmas = opt.band_sigmas;
    const ConditionalReport report =
        conditional_check(program, parse_set(opt.set_text), opt.samples, opt.seed, options);
    return with_output(opt.out_file, [&](std::ostream& out) {
        out << "samples " << report.samples << "\n";
        out << "v1_norm_sq " << fmt_double(report.v1_norm_sq) << "\n";
        out << "residual_variance " << fmt_double(report.residual_variance) << "\n";
        out << "stderr " << fmt_double(report.stderr_variance) << "\n";
        out << "variance " << (report.variance_pass ? "pass" : "fail") << "\n";
        if (report.wrap) {
            out << "band_c " << fmt_double(report.band_c) << "\n";
            out << "marginal_ratio " << fmt_double(report.marginal_min_ratio) << ' '
                << fmt_double(report.marginal_max_ratio) << "\n";
            out << "residual_ratio " << fmt_double(report.residual_min_ratio) << ' '
                << fmt_double(report.residual_max_ratio) << "\n";
            out << "band " << (report.band_pass ? "pass" : "fail") << "\n";
        }
        out << "verdict " << (report.pass() ? "pass" : "fail") << "\n";
        return report.pass() ? 0 : 1;
    });
}

int cmd_gauss_bounds(const Options& opt) {
    std::cout << "c " << fmt_double(wrapped_density_ratio_bound(opt.sigma)) << "\n";
    return 0;
}

int cmd_tail_sample(const Options& opt) {
    const TailDealing dealing = tail_sample(opt.prefix, opt.seed);
    return with_output(opt.out_file, [&](std::ostream& out) {
        out << "secret " << dealing.secret << "\n";
        out << "threshold " << dealing.threshold << "\n";
        out << "shares";
        for (std::int64_t share : dealing.shares) out << ' ' << share;
        out << "\n";
        return 0;
    });
}

int cmd_tail_posterior(const Options& opt) {
    const auto observed = parse_observations(opt);
    const TailPosterior posterior = conditional_secret_distribution(observed, opt.cap);
    return with_output(opt.out_file, [&](std::ostream& out) {
        for (std::int64_t s = 1; s <= posterior.cap; ++s)
            out << s << ' ' << format_rational(posterior.probability[static_cast<size_t>(s - 1)])
                << "\n";
        out << "tail " << format_rational(posterior.tail_probability) << "\n";
        out << "bound " << format_rational(posterior.omitted_bound) << "\n";
        return 0;
    });
}

int cmd_tail_recover(const Options& opt) {
    std::vector<std::int64_t> shares;
    for (const std::string& tok : split_tokens(opt.shares_text))
        shares.push_back(parse_int(tok, "share value"));
    const auto value = eventual_value_recover(shares, opt.run_length);
    if (value) {
        std::cout << *value << "\n";
        return 0;
    }
    std::cout << "undetermined\n";
    return 1;
}

int emit_report(const Options& opt, const PipelineReport& report) {
    std::cerr << "# elapsed_ms " << report.elapsed_ms << "\n";
    return with_output(opt.out_file, [&](std::ostream& out) {
        out << format_report(report);
        return report.pass ? 0 : 1;
    });
}

int cmd_pipeline_perfect(const Options& opt) {
    const Family generators = read_structure_file(opt.generators_file);
    return emit_report(opt, run_perfect_pipeline(generators, opt.prime, opt.bound));
}

int cmd_pipeline_ramp(const Options& opt) {
    const GDeltaWitness witness = load_witness(opt.witness_file);
    const int levels = opt.levels > 0 ? opt.levels : witness.depth();
    return emit_report(opt, run_ramp_pipeline(witness, levels, opt.samples, opt.seed));
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"secret sharing structures: span programs, scheme classification,\n"
                 "Gaussian ramp constructions, and the tail-threshold scheme"};
    app.require_subcommand(1);

    int (*handler)(const Options&) = nullptr;
    auto bind = [&handler](int (*fn)(const Options&)) {
        return [fn, &handler]() { handler = fn; };
    };

    // structure
    auto* structure = app.add_subcommand("structure", "monotone structures and witnesses");
    structure->require_subcommand(1);
    auto* s_min = structure->add_subcommand("minimize", "canonical generator antichain");
    s_min->add_option("--generators", opt.generators_file, "structure v1 file")->required();
    s_min->add_option("--out", opt.out_file, "output path");
    s_min->callback(bind(cmd_structure_minimize));

    auto* s_mem = structure->add_subcommand("member", "gen- or witness-membership");
    s_mem->add_option("--generators", opt.generators_file, "structure v1 file");
    s_mem->add_option("--witness", opt.witness_file, "gdelta v1 file");
    s_mem->add_option("--level", opt.level, "check levels 1..K (default: all)");
    s_mem->add_option("--set", opt.set_text, "participant ids, space separated")->required();
    s_mem->callback(bind(cmd_structure_member));

    auto* s_norm = structure->add_subcommand("normalize", "normalize gdelta layers");
    s_norm->add_option("--layers", opt.generators_file, "gdelta v1 file")->required();
    s_norm->add_option("--out", opt.out_file, "output path");
    s_norm->callback(bind(cmd_structure_normalize));

    auto* s_built = structure->add_subcommand("builtin", "example structures");
    s_built->add_option("--name", opt.name, "all_infinite|forbidden|grid_rows|disjoint")
        ->required();
    s_built->add_option("--max-index", opt.max_index, "largest participant id");
    s_built->add_option("--levels", opt.levels, "witness depth");
    s_built->add_option("--m", opt.m, "grid size / progression count");
    s_built->add_option("--forbidden", opt.forbidden_file, "structure v1 file of forbidden sets");
    s_built->add_option("--out", opt.out_file, "output path");
    s_built->callback(bind(cmd_structure_builtin));

    auto* s_ref = structure->add_subcommand("refute", "diagonal refutation");
    s_ref->add_option("--sets", opt.sets_file, "structure v1 file, one candidate set per line")
        ->required();
    s_ref->add_option("--witness", opt.witness_file, "gdelta v1 file")->required();
    s_ref->add_option("--out", opt.out_file, "output path");
    s_ref->callback(bind(cmd_structure_refute));

    // span
    auto* span = app.add_subcommand("span", "monotone span programs");
    span->require_subcommand(1);
    auto* sp_build = span->add_subcommand("build", "program from a generator family");
    sp_build->add_option("--prime", opt.prime, "field modulus")->required();
    sp_build->add_option("--generators", opt.generators_file, "structure v1 file")->required();
    sp_build->add_option("--out", opt.out_file, "output path");
    sp_build->callback(bind(cmd_span_build));

    auto* sp_real = span->add_subcommand("realize", "is the set qualified?");
    sp_real->add_option("--program", opt.program_file, "span v1 file")->required();
    sp_real->add_option("--set", opt.set_text, "participant ids")->required();
    sp_real->callback(bind(cmd_span_realize));

    auto* sp_str = span->add_subcommand("structure", "minimal realized sets");
    sp_str->add_option("--program", opt.program_file, "span v1 file")->required();
    sp_str->add_option("--universe", opt.universe_text, "ids (default: assigned participants)");
    sp_str->add_option("--out", opt.out_file, "output path");
    sp_str->callback(bind(cmd_span_structure));

    // scheme
    auto* scheme = app.add_subcommand("scheme", "the derived linear scheme");
    scheme->require_subcommand(1);
    auto* sc_deal = scheme->add_subcommand("deal", "deal one instance");
    sc_deal->add_option("--program", opt.program_file, "span v1 file")->required();
    sc_deal->add_option("--seed", opt.seed, "stream seed");
    sc_deal->add_option("--out", opt.out_file, "output path");
    sc_deal->callback(bind(cmd_scheme_deal));

    auto* sc_rec = scheme->add_subcommand("recover", "recover the secret from shares");
    sc_rec->add_option("--program", opt.program_file, "span v1 file")->required();
    sc_rec->add_option("--dealing", opt.dealing_file, "dealing v1 file")->required();
    sc_rec->add_option("--set", opt.set_text, "participant ids")->required();
    sc_rec->callback(bind(cmd_scheme_recover));

    auto* sc_enum = scheme->add_subcommand("enumerate", "exact joint distribution");
    sc_enum->add_option("--program", opt.program_file, "span v1 file")->required();
    sc_enum->add_option("--observed", opt.set_text, "ids (default: all participants)");
    sc_enum->add_option("--bound", opt.bound, "enumeration bound on p^dim");
    sc_enum->add_option("--workers", opt.workers, "parallel workers");
    sc_enum->add_option("--out", opt.out_file, "output path");
    sc_enum->callback(bind(cmd_scheme_enumerate));

    auto* sc_cls = scheme->add_subcommand("classify", "perfect/almost-perfect/... label");
    sc_cls->add_option("--table", opt.table_file, "table v1 file");
    sc_cls->add_option("--program", opt.program_file, "span v1 file (enumerated first)");
    sc_cls->add_option("--structure", opt.structure_file, "structure v1 file")->required();
    sc_cls->add_option("--bound", opt.bound, "enumeration bound on p^dim");
    sc_cls->add_option("--workers", opt.workers, "parallel workers");
    sc_cls->add_option("--out", opt.out_file, "output path");
    sc_cls->callback(bind(cmd_scheme_classify));

    // gauss
    auto* gauss = app.add_subcommand("gauss", "Hilbert programs and the Gaussian scheme");
    gauss->require_subcommand(1);
    auto* g_build = gauss->add_subcommand("build", "program from a witness");
    g_build->add_option("--witness", opt.witness_file, "gdelta v1 file")->required();
    g_build->add_option("--levels", opt.levels, "truncation depth (default: witness depth)");
    g_build->add_option("--out", opt.out_file, "output path");
    g_build->callback(bind(cmd_gauss_build));

    auto* g_dec = gauss->add_subcommand("decompose", "orthogonal split of the target");
    g_dec->add_option("--program", opt.program_file, "hilbert v1 file")->required();
    g_dec->add_option("--set", opt.set_text, "participant ids")->required();
    g_dec->add_option("--tau", opt.tau, "rank tolerance on the relative residual norm");
    g_dec->add_option("--out", opt.out_file, "output path");
    g_dec->callback(bind(cmd_gauss_decompose));

    auto* g_sim = gauss->add_subcommand("simulate", "sample share/secret records");
    g_sim->add_option("--program", opt.program_file, "hilbert v1 file")->required();
    g_sim->add_option("--samples", opt.samples, "sample count");
    g_sim->add_option("--seed", opt.seed, "stream seed");
    g_sim->add_flag("--wrap", opt.wrap, "secret = fractional part");
    g_sim->add_option("--out", opt.out_file, "output path");
    g_sim->callback(bind(cmd_gauss_simulate));

    auto* g_chk = gauss->add_subcommand("check", "conditional distribution check");
    g_chk->add_option("--program", opt.program_file, "hilbert v1 file")->required();
    g_chk->add_option("--set", opt.set_text, "unqualified participant ids")->required();
    g_chk->add_option("--samples", opt.samples, "sample count");
    g_chk->add_option("--seed", opt.seed, "stream seed");
    g_chk->add_flag("--wrap", opt.wrap, "also check the wrapped band");
    g_chk->add_option("--bins", opt.bins, "histogram bins");
    g_chk->add_option("--tau", opt.tau, "rank tolerance on the relative residual norm");
    g_chk->add_option("--sigmas", opt.variance_sigmas, "variance tolerance in standard errors");
    g_chk->add_option("--band-sigmas", opt.band_sigmas, "histogram slack in standard errors");
    g_chk->add_option("--out", opt.out_file, "output path");
    g_chk->callback(bind(cmd_gauss_check));

    auto* g_bnd = gauss->add_subcommand("bounds", "wrapped density ratio bound");
    g_bnd->add_option("--sigma", opt.sigma, "standard deviation")->required();
    g_bnd->callback(bind(cmd_gauss_bounds));

    // tail
    auto* tail = app.add_subcommand("tail", "the tail-threshold scheme");
    tail->require_subcommand(1);
    auto* t_sam = tail->add_subcommand("sample", "deal a share prefix");
    t_sam->add_option("--prefix", opt.prefix, "number of shares to emit");
    t_sam->add_option("--seed", opt.seed, "stream seed");
    t_sam->add_option("--out", opt.out_file, "output path");
    t_sam->callback(bind(cmd_tail_sample));

    auto* t_pos = tail->add_subcommand("posterior", "exact secret posterior");
    t_pos->add_option("--obs", opt.obs_inline, "observation index=value (repeatable)");
    t_pos->add_option("--obs-file", opt.obs_file, "file of 'obs <index> <value>' lines");
    t_pos->add_option("--cap", opt.cap, "largest reported secret");
    t_pos->add_option("--out", opt.out_file, "output path");
    t_pos->callback(bind(cmd_tail_posterior));

    auto* t_rec = tail->add_subcommand("recover", "eventual-value read-out");
    t_rec->add_option("--shares", opt.shares_text, "share prefix, space separated")->required();
    t_rec->add_option("--run", opt.run_length, "required trailing run length");
    t_rec->callback(bind(cmd_tail_recover));

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "end-to-end verdicts");
    pipeline->require_subcommand(1);
    auto* p_perf = pipeline->add_subcommand("perfect", "generators -> perfect scheme");
    p_perf->add_option("--generators", opt.generators_file, "structure v1 file")->required();
    p_perf->add_option("--prime", opt.prime, "field modulus");
    p_perf->add_option("--bound", opt.bound, "enumeration bound on p^dim");
    p_perf->add_option("--out", opt.out_file, "output path");
    p_perf->callback(bind(cmd_pipeline_perfect));

    auto* p_ramp = pipeline->add_subcommand("ramp", "witness -> Gaussian ramp scheme");
    p_ramp->add_option("--witness", opt.witness_file, "gdelta v1 file")->required();
    p_ramp->add_option("--levels", opt.levels, "truncation depth (default: witness depth)");
    p_ramp->add_option("--samples", opt.samples, "Monte Carlo samples per check");
    p_ramp->add_option("--seed", opt.seed, "stream seed");
    p_ramp->add_option("--out", opt.out_file, "output path");
    p_ramp->callback(bind(cmd_pipeline_ramp));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return handler ? handler(opt) : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

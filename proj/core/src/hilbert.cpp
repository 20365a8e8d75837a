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

#include "sss/hilbert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "sss/errors.hpp"
#include "sss/line_reader.hpp"
#include "sss/rng.hpp"
#include "sss/wrapped_normal.hpp"

namespace sss {

PidSet HilbertProgram::participants() const {
    PidSet out;
    out.reserve(assignment.size());
    for (const auto& [pid, vecs] : assignment) out.push_back(pid);
    return out;
}

void HilbertProgram::validate() const {
    if (dim <= 0) throw Error("hilbert program dimension must be positive");
    if (static_cast<int>(target.size()) != dim)
        throw Error("hilbert program target has wrong length");
    for (const auto& [pid, vecs] : assignment) {
        if (pid < 0) throw Error("negative participant id in hilbert program");
        if (vecs.empty())
            throw Error("participant " + std::to_string(pid) + " has an empty vector list");
        for (const RatVec& v : vecs)
            if (static_cast<int>(v.size()) != dim)
                throw Error("vector of participant " + std::to_string(pid) + " has wrong length");
    }
}

std::vector<RatVec> HilbertProgram::vectors_of(const PidSet& a) const {
    std::vector<RatVec> out;
    for (ParticipantId pid : a) {
        auto it = assignment.find(pid);
        if (it == assignment.end())
            throw Error("unknown participant id " + std::to_string(pid));
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

HilbertProgram hilbert_from_witness(const GDeltaWitness& witness, int levels) {
    if (!witness.normalized) throw Error("hilbert_from_witness: witness is not normalized");
    if (levels < 1) throw Error("hilbert_from_witness: need at least one level");
    if (levels > witness.depth())
        throw Error("hilbert_from_witness: truncation deeper than the witness");

    int fresh_count = 0;
    for (int n = 0; n < levels; ++n)
        for (const PidSet& g : witness.levels[static_cast<size_t>(n)]) {
            if (g.empty()) throw Error("hilbert_from_witness: empty generator");
            fresh_count += static_cast<int>(g.size()) - 1;
        }

    HilbertProgram program;
    program.dim = levels + fresh_count;
    const auto dim = static_cast<size_t>(program.dim);

    program.level_targets.reserve(static_cast<size_t>(levels));
    RatVec v(dim, Rat(0));
    for (int n = 1; n <= levels; ++n) {
        v[static_cast<size_t>(n - 1)] = Rat(1, n);
        program.level_targets.push_back(v);
    }
    program.target = program.level_targets.back();

    int next_fresh = levels;
    for (int n = 0; n < levels; ++n) {
        for (const PidSet& g : canonicalize_family(witness.levels[static_cast<size_t>(n)])) {
            RatVec completing = program.level_targets[static_cast<size_t>(n)];
            for (size_t i = 0; i + 1 < g.size(); ++i) {
                RatVec fresh(dim, Rat(0));
                fresh[static_cast<size_t>(next_fresh)] = 1;
                completing[static_cast<size_t>(next_fresh)] = -1;
                ++next_fresh;
                program.assignment[g[i]].push_back(std::move(fresh));
            }
            program.assignment[g.back()].push_back(std::move(completing));
        }
    }
    program.validate();
    return program;
}

namespace {

// Exact elimination over the rationals: solvability of sum_i x_i columns_i = t.
bool rational_in_span(const std::vector<RatVec>& columns, const RatVec& target) {
    const size_t dim = target.size();
    const size_t n = columns.size();
    std::vector<RatVec> m(dim, RatVec(n + 1, Rat(0)));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < dim; ++i) m[i][j] = columns[j][i];
    for (size_t i = 0; i < dim; ++i) m[i][n] = target[i];

    size_t row = 0;
    for (size_t col = 0; col < n && row < dim; ++col) {
        size_t sel = row;
        while (sel < dim && m[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(m[sel], m[row]);
        const Rat piv = m[row][col];
        for (size_t j = col; j <= n; ++j) m[row][j] /= piv;
        for (size_t i = 0; i < dim; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (size_t j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    for (size_t i = row; i < dim; ++i)
        if (m[i][n] != 0) return false;
    return true;
}

Eigen::VectorXd to_eigen(const RatVec& v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = to_double(v[i]);
    return out;
}

}  // namespace

bool realizes_exact(const HilbertProgram& program, const PidSet& a) {
    return rational_in_span(program.vectors_of(a), program.target);
}

Decomposition orthogonal_decompose(const HilbertProgram& program, const PidSet& b,
                                   double tau_rank) {
    const auto vectors = program.vectors_of(b);
    const Eigen::VectorXd target = to_eigen(program.target);

    Decomposition decomposition;
    decomposition.target_norm_sq = target.squaredNorm();
    if (vectors.empty()) {
        decomposition.v1_norm_sq = decomposition.target_norm_sq;
        return decomposition;
    }

    Eigen::MatrixXd m(static_cast<Eigen::Index>(program.dim),
                      static_cast<Eigen::Index>(vectors.size()));
    for (size_t j = 0; j < vectors.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = to_eigen(vectors[j]);

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
    const Eigen::VectorXd coeffs = cod.solve(target);
    const Eigen::VectorXd projection = m * coeffs;
    const Eigen::VectorXd residual = target - projection;

    decomposition.projection_norm_sq = projection.squaredNorm();
    decomposition.v1_norm_sq = residual.squaredNorm();
    decomposition.projection_coeffs.assign(coeffs.data(), coeffs.data() + coeffs.size());
    if (std::sqrt(decomposition.v1_norm_sq) <= tau_rank * std::sqrt(decomposition.target_norm_sq))
        decomposition.v1_norm_sq = 0.0;
    return decomposition;
}

std::vector<SimRecord> simulate(const HilbertProgram& program, std::int64_t samples,
                                std::uint64_t seed, bool wrap) {
    program.validate();
    if (samples < 1) throw Error("simulate: need at least one sample");

    std::vector<Eigen::VectorXd> share_vectors;
    for (const auto& [pid, vecs] : program.assignment)
        for (const RatVec& v : vecs) share_vectors.push_back(to_eigen(v));
    const Eigen::VectorXd target = to_eigen(program.target);

    RandomStream stream(seed);
    std::vector<SimRecord> records;
    records.reserve(static_cast<size_t>(samples));
    Eigen::VectorXd xi(static_cast<Eigen::Index>(program.dim));
    for (std::int64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < program.dim; ++i) xi[i] = stream.normal();
        SimRecord record;
        record.shares.reserve(share_vectors.size());
        for (const auto& v : share_vectors) record.shares.push_back(v.dot(xi));
        record.secret = target.dot(xi);
        if (wrap) record.secret -= std::floor(record.secret);
        records.push_back(std::move(record));
    }
    return records;
}

ConditionalReport conditional_check(const HilbertProgram& program, const PidSet& b,
                                    std::int64_t samples, std::uint64_t seed,
                                    const ConditionalCheckOptions& options) {
    program.validate();
    if (samples < 2) throw Error("conditional_check: need at least two samples");

    const Decomposition decomposition = orthogonal_decompose(program, b, options.tau_rank);
    if (decomposition.v1_norm_sq <= 0.0)
        throw Error("conditional_check: set {" + format_set(b) +
                    "} is qualified; nothing to check");

    ConditionalReport report;
    report.b = b;
    report.samples = samples;
    report.v1_norm_sq = decomposition.v1_norm_sq;
    report.wrap = options.wrap;

    std::vector<Eigen::VectorXd> b_vectors;
    for (ParticipantId pid : b) {
        auto it = program.assignment.find(pid);
        if (it == program.assignment.end())
            throw Error("unknown participant id " + std::to_string(pid));
        for (const RatVec& v : it->second) b_vectors.push_back(to_eigen(v));
    }
    const Eigen::VectorXd target = to_eigen(program.target);

    const auto n = static_cast<Eigen::Index>(samples);
    const auto k = static_cast<Eigen::Index>(b_vectors.size());
    Eigen::MatrixXd design(n, k + 1);
    Eigen::VectorXd secret(n);

    RandomStream stream(seed);
    Eigen::VectorXd xi(static_cast<Eigen::Index>(program.dim));
    for (Eigen::Index s = 0; s < n; ++s) {
        for (int i = 0; i < program.dim; ++i) xi[i] = stream.normal();
        design(s, 0) = 1.0;
        for (Eigen::Index j = 0; j < k; ++j) design(s, j + 1) = b_vectors[static_cast<size_t>(j)].dot(xi);
        secret[s] = target.dot(xi);
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
    const Eigen::VectorXd beta = cod.solve(secret);
    const Eigen::VectorXd fitted = design * beta;
    const Eigen::VectorXd residual = secret - fitted;
    report.regression_rank = static_cast<int>(cod.rank());

    if (samples - report.regression_rank < 2)
        throw Error("conditional_check: too few samples for the regression");
    const double dof = static_cast<double>(samples - report.regression_rank);
    report.residual_variance = residual.squaredNorm() / dof;
    report.stderr_variance = report.residual_variance * std::sqrt(2.0 / dof);
    report.variance_pass = std::fabs(report.residual_variance - report.v1_norm_sq) <=
                           options.variance_sigmas * report.stderr_variance;

    if (options.wrap) {
        // Ramp constant for the wrapped secret W = frac(xi_v). Given the
        // shares of b, xi_v is normal with standard deviation sigma1 = |v1|
        // and a share-dependent mean, so the conditional density of W lies in
        // [1/c(sigma1), c(sigma1)] times uniform for every share value; the
        // marginal density of W lies in [1/c(|v|), c(|v|)] times uniform.
        // Dividing the two bands bounds the conditional-to-marginal ratio by
        // c_B = c(sigma1) * c(|v|) on both sides, uniformly in the shares.
        // Both tested histograms (the marginal of W, and W recentred at the
        // fitted conditional mean) must therefore sit inside [1/c_B, c_B].
        const double sigma1 = std::sqrt(report.v1_norm_sq);
        const double sigma_v = std::sqrt(decomposition.target_norm_sq);
        report.band_c =
            wrapped_density_ratio_bound(sigma1) * wrapped_density_ratio_bound(sigma_v);

        const int bins = options.bins;
        std::vector<std::int64_t> marginal_hist(static_cast<size_t>(bins), 0);
        std::vector<std::int64_t> residual_hist(static_cast<size_t>(bins), 0);
        auto bin_of = [bins](double value) {
            double frac = value - std::floor(value);
            int bin = static_cast<int>(frac * bins);
            return std::min(bin, bins - 1);
        };
        for (Eigen::Index s = 0; s < n; ++s) {
            ++marginal_hist[static_cast<size_t>(bin_of(secret[s]))];
            ++residual_hist[static_cast<size_t>(bin_of(residual[s]))];
        }

        const double uniform = 1.0 / bins;
        const double slack = options.band_sigmas *
                             std::sqrt(uniform * (1.0 - uniform) / static_cast<double>(samples));
        const double lo = uniform / report.band_c - slack;
        const double hi = uniform * report.band_c + slack;

        auto scan = [&](const std::vector<std::int64_t>& hist, double& min_ratio,
                        double& max_ratio) {
            bool ok = true;
            min_ratio = 1e300;
            max_ratio = 0.0;
            for (std::int64_t count : hist) {
                const double p = static_cast<double>(count) / static_cast<double>(samples);
                min_ratio = std::min(min_ratio, p / uniform);
                max_ratio = std::max(max_ratio, p / uniform);
                if (p < lo || p > hi) ok = false;
            }
            return ok;
        };
        const bool marginal_ok = scan(marginal_hist, report.marginal_min_ratio,
                                      report.marginal_max_ratio);
        const bool residual_ok = scan(residual_hist, report.residual_min_ratio,
                                      report.residual_max_ratio);
        report.band_pass = marginal_ok && residual_ok;
    }
    return report;
}

HilbertProgram read_hilbert_program(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    reader.expect_header("hilbert v1");
    HilbertProgram program;
    bool have_dim = false, have_target = false;
    std::string line;
    while (reader.next(line)) {
        auto tokens = split_tokens(line);
        if (tokens[0] == "dim" && tokens.size() == 2) {
            program.dim = static_cast<int>(parse_int(tokens[1], "dimension"));
            have_dim = true;
        } else if (tokens[0] == "target") {
            if (!have_dim) reader.fail("target before dim");
            if (static_cast<int>(tokens.size()) != program.dim + 1)
                reader.fail("target needs exactly dim entries");
            for (size_t i = 1; i < tokens.size(); ++i)
                program.target.push_back(parse_rational(tokens[i]));
            have_target = true;
        } else if (tokens[0] == "vec") {
            if (!have_dim) reader.fail("vec before dim");
            if (static_cast<int>(tokens.size()) != program.dim + 2)
                reader.fail("vec needs a participant id and dim entries");
            const long long pid = parse_int(tokens[1], "participant id");
            if (pid < 0) reader.fail("negative participant id");
            RatVec v;
            for (size_t i = 2; i < tokens.size(); ++i) v.push_back(parse_rational(tokens[i]));
            program.assignment[static_cast<ParticipantId>(pid)].push_back(std::move(v));
        } else {
            reader.fail("unrecognized line '" + line + "'");
        }
    }
    if (!have_dim || !have_target)
        throw FormatError(source + ": hilbert file missing dim or target");
    program.validate();
    return program;
}

void write_hilbert_program(std::ostream& out, const HilbertProgram& program) {
    out << "hilbert v1\n";
    out << "dim " << program.dim << "\n";
    out << "target";
    for (const Rat& x : program.target) out << ' ' << x;
    out << "\n";
    for (const auto& [pid, vecs] : program.assignment)
        for (const RatVec& v : vecs) {
            out << "vec " << pid;
            for (const Rat& x : v) out << ' ' << x;
            out << "\n";
        }
}

HilbertProgram read_hilbert_program_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_hilbert_program(in, path);
}

}  // namespace sss

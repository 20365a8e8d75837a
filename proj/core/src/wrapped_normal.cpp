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

#include "sss/wrapped_normal.hpp"

#include <cmath>
#include <limits>

#include "sss/errors.hpp"

namespace sss {

namespace {

constexpr double kPi = 3.14159265358979323846;
// below this sigma the direct series is both faster and cancellation-free
constexpr double kThetaCrossover = 0.5;

double check_sigma(double sigma) {
    if (!(sigma > 0.0)) throw Error("wrapped normal: sigma must be positive");
    return sigma;
}

// sum_k exp(-(x+k)^2/(2 sigma^2)) / (sigma sqrt(2 pi)) over all integers k.
// All terms positive; remainder after the last added term is certified by the
// geometric ratio exp(-(|x+k|)/(sigma^2)) < 1 once |x+k| > 1.
double direct_series(double x, double sigma) {
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    double sum = 0.0;
    for (int k = 0;; ++k) {
        const double z = x + k;
        const double term = std::exp(-z * z * inv2s2);
        sum += term;
        if (z >= 1.0 && (term <= sum * 1e-18 || z > 60.0 * sigma + 2.0)) break;
    }
    for (int k = -1;; --k) {
        const double z = x + k;
        const double term = std::exp(-z * z * inv2s2);
        sum += term;
        if (-z >= 1.0 && (term <= sum * 1e-18 || -z > 60.0 * sigma + 2.0)) break;
    }
    return sum / (sigma * std::sqrt(2.0 * kPi));
}

// 1 + 2 sum q^(n^2) cos(2 pi n x); terms shrink by a factor q^(2n+1), so the
// remainder after n = N is below q^((N+1)^2) / (1 - q).
double theta_series(double x, double sigma) {
    const double q = std::exp(-2.0 * kPi * kPi * sigma * sigma);
    double sum = 1.0;
    double qn = 1.0;
    for (int n = 1; n < 4096; ++n) {
        qn = std::pow(q, static_cast<double>(n) * n);
        sum += 2.0 * qn * std::cos(2.0 * kPi * n * x);
        if (qn / (1.0 - q) < 1e-16) break;
    }
    return sum;
}

}  // namespace

double wrapped_density(double x, double sigma) {
    check_sigma(sigma);
    x -= std::floor(x);
    return sigma < kThetaCrossover ? direct_series(x, sigma) : theta_series(x, sigma);
}

double wrapped_density_max(double sigma) { return wrapped_density(0.0, sigma); }

double wrapped_density_min(double sigma) { return wrapped_density(0.5, sigma); }

double wrapped_density_ratio_bound(double sigma) {
    check_sigma(sigma);
    const double lo = wrapped_density_min(sigma);
    const double hi = wrapped_density_max(sigma);
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    const double c = hi / lo;
    return c < 1.0 ? 1.0 : c;  // guard against rounding just below 1
}

}  // namespace sss

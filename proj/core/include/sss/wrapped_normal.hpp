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

namespace sss {

// The fractional part of a normal variate with standard deviation sigma has
// the wrapped normal density on [0,1). Shifting the mean only rotates the
// circle, so the extreme densities (attained at the wrapped mean and at the
// antipode) and their ratio depend on sigma alone. Two dual series compute
// them:
//
//   direct:  f(x) = sum_k exp(-(x+k)^2 / (2 sigma^2)) / (sigma sqrt(2 pi))
//   theta:   f(x) = 1 + 2 sum_{n>=1} q^(n^2) cos(2 pi n x),  q = exp(-2 pi^2 sigma^2)
//
// The theta form (Poisson summation) converges fast for large sigma but its
// alternating minimum cancels catastrophically for small sigma, where the
// all-positive direct form converges fast instead. Both are truncated with a
// certified geometric remainder below 1e-14 relative.

/// Maximum of the wrapped normal density (at the wrapped mean).
double wrapped_density_max(double sigma);

/// Minimum of the wrapped normal density (half a turn from the mean).
double wrapped_density_min(double sigma);

/// Density at offset x from the mean (x taken mod 1).
double wrapped_density(double x, double sigma);

/// Tight two-sided ratio bound c(sigma) = max/min >= 1. Monotone
/// non-increasing in sigma; returns +infinity when the minimum underflows
/// (sigma below about 0.013).
double wrapped_density_ratio_bound(double sigma);

}  // namespace sss

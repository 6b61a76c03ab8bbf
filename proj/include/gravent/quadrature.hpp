// Copyright 2026 The gravent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAVENT_QUADRATURE_HPP
#define GRAVENT_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace gravent {

/// Nodes and weights on [-1, 1]; exact for polynomials of degree < 2n.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite Simpson rule on [a, b] with `intervals` (rounded up to even).
double composite_simpson(const std::function<double(double)> &f, double a, double b, std::size_t intervals);

}  // namespace gravent

#endif  // GRAVENT_QUADRATURE_HPP

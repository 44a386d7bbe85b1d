// Copyright 2026 The Rarespan Authors
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

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace rarespan {

struct OptimOptions {
  std::size_t max_iters = 1000;
  double rel_tol = 1e-8;
};

struct OptimResult {
  double loss = 0.0;
  std::size_t iters = 0;
  bool converged = false;
  std::vector<double> loss_history;  // loss after each accepted step
};

// Full-batch gradient descent with Armijo backtracking. Deterministic:
// fixed evaluation order, no randomness, accepted steps never increase the
// loss. `objective(w, grad_or_null)` returns the loss and, when the pointer
// is non-null, fills the gradient.
template <typename Objective>
OptimResult minimize(std::vector<double>& weights, Objective&& objective,
                     const OptimOptions& opts = {}) {
  const std::size_t dim = weights.size();
  std::vector<double> grad(dim, 0.0);
  std::vector<double> trial(dim, 0.0);

  OptimResult result;
  double loss = objective(weights, &grad);
  result.loss_history.push_back(loss);
  double alpha = 1.0;
  constexpr double kArmijo = 1e-4;

  for (std::size_t iter = 0; iter < opts.max_iters; ++iter) {
    double grad_sq = 0.0;
    for (double g : grad) grad_sq += g * g;
    if (grad_sq < 1e-24) {
      result.converged = true;
      break;
    }

    bool accepted = false;
    double new_loss = loss;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < dim; ++i)
        trial[i] = weights[i] - alpha * grad[i];
      new_loss = objective(trial, nullptr);
      if (std::isfinite(new_loss) && new_loss <= loss - kArmijo * alpha * grad_sq) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      result.converged = true;  // no descent at machine-step scale
      break;
    }

    weights.swap(trial);
    result.iters = iter + 1;
    const double drop = loss - new_loss;
    loss = objective(weights, &grad);  // refresh gradient at accepted point
    result.loss_history.push_back(loss);
    alpha = std::min(alpha * 2.0, 1e12);
    if (drop <= opts.rel_tol * std::max(1.0, std::fabs(loss))) {
      result.converged = true;
      break;
    }
  }
  result.loss = loss;
  return result;
}

}  // namespace rarespan

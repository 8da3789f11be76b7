// Copyright 2026 The qface Authors
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

// One-class template matching: average the training faces into a single unit
// template, estimate each test sample's fidelity against it and call the
// sample a face when that fidelity is strictly above a threshold.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qface/encoding.hpp"
#include "qface/swaptest.hpp"

namespace qface::classifier {

enum class Label { Face, NonFace };

std::string_view to_string(Label label) noexcept;

struct Template {
    encoding::UnitFeatureVector vector;
    std::size_t source_count = 0;

    std::size_t dim() const noexcept { return vector.dim(); }
};

struct LabeledSample {
    encoding::UnitFeatureVector vector;
    Label label = Label::Face;
    std::string id;
};

struct ClassificationResult {
    std::string id;
    double fidelity = 0.0;
    double threshold = 0.0;
    Label predicted = Label::NonFace;
};

struct SweepRow {
    double threshold = 0.0;
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    double accuracy = 0.0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    double best_threshold = 0.0;
    double best_accuracy = 0.0;
};

struct SweepRange {
    double start = 0.70;
    double step = 0.01;
    double end = 1.00;
};

/// Componentwise mean of the raw vectors, normalized once.
Template build_template(std::span<const encoding::FeatureVector> train);

/// Face iff fidelity > threshold; a tie is NonFace.
constexpr Label threshold_rule(double fidelity, double threshold) noexcept {
    return fidelity > threshold ? Label::Face : Label::NonFace;
}

ClassificationResult classify(const Template& tmpl, const LabeledSample& sample, double threshold,
                              const swaptest::EstimatorConfig& config);

/// Fidelity of every sample against the template. Sample i is estimated with
/// seed derive_seed(config.seed, i), so sampled runs are order independent.
std::vector<double> compute_fidelities(const Template& tmpl,
                                       std::span<const LabeledSample> samples,
                                       const swaptest::EstimatorConfig& config);

/// Thresholds start, start+step, ... up to end inclusive (within a 1e-9 slack),
/// each rounded to 12 decimals so grid points compare equal to their literals.
std::vector<double> threshold_grid(const SweepRange& range);

/// Re-thresholds cached fidelities; no fidelity is recomputed. The best row is
/// the highest accuracy, ties going to the lowest threshold.
SweepReport sweep_from_fidelities(std::span<const double> fidelities,
                                  std::span<const Label> labels, const SweepRange& range);

SweepReport sweep_thresholds(const Template& tmpl, std::span<const LabeledSample> testset,
                             const SweepRange& range, const swaptest::EstimatorConfig& config);

struct AverageFidelities {
    double mean_face = 0.0;
    double mean_nonface = 0.0;
};

AverageFidelities average_fidelity_report(std::span<const double> fidelities,
                                          std::span<const Label> labels);
AverageFidelities average_fidelity_report(const Template& tmpl,
                                          std::span<const LabeledSample> testset,
                                          const swaptest::EstimatorConfig& config);

/// `threshold,tp,fp,tn,fn,accuracy` with 6-decimal reals.
std::string sweep_to_csv(const SweepReport& report);
/// Fixed-width text rendering of the same rows plus a best-row footer.
std::string sweep_to_table(const SweepReport& report);

}  // namespace qface::classifier

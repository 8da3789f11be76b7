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

#include "qface/classifier.hpp"

#include <cmath>
#include <cstdio>

#include "qface/error.hpp"
#include "qface/rng.hpp"

namespace qface::classifier {

std::string_view to_string(Label label) noexcept {
    return label == Label::Face ? "face" : "nonface";
}

Template build_template(std::span<const encoding::FeatureVector> train) {
    require(!train.empty(), ErrorCode::Data, "build_template: no training vectors");
    const std::size_t dim = train.front().dim();
    std::vector<double> mean(dim, 0.0);
    for (const auto& v : train) {
        require(v.dim() == dim, ErrorCode::Data,
                "build_template: mixed dimensions (" + std::to_string(dim) + " and " +
                    std::to_string(v.dim()) + ")");
        for (std::size_t i = 0; i < dim; ++i) mean[i] += v[i];
    }
    for (double& m : mean) m /= static_cast<double>(train.size());
    return Template{encoding::normalize(encoding::FeatureVector(std::move(mean))), train.size()};
}

ClassificationResult classify(const Template& tmpl, const LabeledSample& sample, double threshold,
                              const swaptest::EstimatorConfig& config) {
    require(threshold >= 0.0 && threshold <= 1.0, ErrorCode::InvalidArgument,
            "classify: threshold outside [0, 1]");
    const auto est = swaptest::estimate_fidelity(tmpl.vector, sample.vector, config);
    return ClassificationResult{sample.id, est.value, threshold,
                                threshold_rule(est.value, threshold)};
}

std::vector<double> compute_fidelities(const Template& tmpl,
                                       std::span<const LabeledSample> samples,
                                       const swaptest::EstimatorConfig& config) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        swaptest::EstimatorConfig per = config;
        per.seed = derive_seed(config.seed, i);
        out.push_back(swaptest::estimate_fidelity(tmpl.vector, samples[i].vector, per).value);
    }
    return out;
}

std::vector<double> threshold_grid(const SweepRange& range) {
    require(std::isfinite(range.start) && std::isfinite(range.end) && std::isfinite(range.step),
            ErrorCode::InvalidArgument, "sweep: non-finite range");
    require(range.step > 0.0, ErrorCode::InvalidArgument, "sweep: step must be > 0");
    require(range.start < range.end, ErrorCode::InvalidArgument, "sweep: start must be < end");
    const auto count =
        static_cast<std::size_t>(std::floor((range.end - range.start) / range.step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = range.start + static_cast<double>(i) * range.step;
        grid.push_back(std::round(t * 1e12) / 1e12);
    }
    return grid;
}

SweepReport sweep_from_fidelities(std::span<const double> fidelities,
                                  std::span<const Label> labels, const SweepRange& range) {
    require(!fidelities.empty(), ErrorCode::Data, "sweep: empty test set");
    require(fidelities.size() == labels.size(), ErrorCode::InvalidArgument,
            "sweep: fidelity and label counts differ");
    SweepReport report;
    const double total = static_cast<double>(fidelities.size());
    for (double t : threshold_grid(range)) {
        SweepRow row;
        row.threshold = t;
        for (std::size_t i = 0; i < fidelities.size(); ++i) {
            const bool face = threshold_rule(fidelities[i], t) == Label::Face;
            if (labels[i] == Label::Face) {
                face ? ++row.tp : ++row.fn;
            } else {
                face ? ++row.fp : ++row.tn;
            }
        }
        row.accuracy = static_cast<double>(row.tp + row.tn) / total;
        // Strict comparison keeps the earliest (lowest) threshold on ties.
        if (report.rows.empty() || row.accuracy > report.best_accuracy) {
            report.best_accuracy = row.accuracy;
            report.best_threshold = t;
        }
        report.rows.push_back(row);
    }
    return report;
}

namespace {

std::vector<Label> labels_of(std::span<const LabeledSample> samples) {
    std::vector<Label> labels;
    labels.reserve(samples.size());
    for (const auto& s : samples) labels.push_back(s.label);
    return labels;
}

}  // namespace

SweepReport sweep_thresholds(const Template& tmpl, std::span<const LabeledSample> testset,
                             const SweepRange& range, const swaptest::EstimatorConfig& config) {
    require(!testset.empty(), ErrorCode::Data, "sweep: empty test set");
    threshold_grid(range);  // validate before the expensive part
    const auto fids = compute_fidelities(tmpl, testset, config);
    return sweep_from_fidelities(fids, labels_of(testset), range);
}

AverageFidelities average_fidelity_report(std::span<const double> fidelities,
                                          std::span<const Label> labels) {
    require(fidelities.size() == labels.size(), ErrorCode::InvalidArgument,
            "average fidelity: fidelity and label counts differ");
    double face_sum = 0.0, non_sum = 0.0;
    std::size_t face_n = 0, non_n = 0;
    for (std::size_t i = 0; i < fidelities.size(); ++i) {
        if (labels[i] == Label::Face) {
            face_sum += fidelities[i];
            ++face_n;
        } else {
            non_sum += fidelities[i];
            ++non_n;
        }
    }
    require(face_n > 0 && non_n > 0, ErrorCode::Data,
            "average fidelity: test set needs at least one face and one non-face");
    return {face_sum / static_cast<double>(face_n), non_sum / static_cast<double>(non_n)};
}

AverageFidelities average_fidelity_report(const Template& tmpl,
                                          std::span<const LabeledSample> testset,
                                          const swaptest::EstimatorConfig& config) {
    const auto fids = compute_fidelities(tmpl, testset, config);
    return average_fidelity_report(fids, labels_of(testset));
}

std::string sweep_to_csv(const SweepReport& report) {
    std::string out = "threshold,tp,fp,tn,fn,accuracy\n";
    char buf[160];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%.6f,%zu,%zu,%zu,%zu,%.6f\n", r.threshold, r.tp, r.fp,
                      r.tn, r.fn, r.accuracy);
        out += buf;
    }
    return out;
}

std::string sweep_to_table(const SweepReport& report) {
    std::string out = "threshold      tp      fp      tn      fn  accuracy\n";
    char buf[160];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%9.6f %7zu %7zu %7zu %7zu  %8.6f\n", r.threshold, r.tp,
                      r.fp, r.tn, r.fn, r.accuracy);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "best threshold %.6f  accuracy %.6f\n", report.best_threshold,
                  report.best_accuracy);
    out += buf;
    return out;
}

}  // namespace qface::classifier

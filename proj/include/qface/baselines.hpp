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

// Classical face/non-face comparators: k-nearest neighbours and an RBF-kernel
// SVM trained with SMO. Both consume the same unit vectors the swap test
// encodes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qface/classifier.hpp"

namespace qface::baselines {

using classifier::Label;
using classifier::LabeledSample;

// ---------------------------------------------------------------------------
// k-NN

struct KnnModel {
    std::vector<LabeledSample> train;
    std::size_t k = 1;
};

/// Validates 1 <= k <= train.size().
KnnModel make_knn(std::vector<LabeledSample> train, std::size_t k);

/// Majority label over the k nearest training samples (Euclidean). Neighbours
/// at equal distance are ordered by id; a tied vote goes to the nearest one.
Label knn_classify(const KnnModel& model, std::span<const double> query);

// ---------------------------------------------------------------------------
// SVM

struct SupportVector {
    std::vector<double> vector;
    int label = 1;  // +1 face, -1 non-face
    double alpha = 0.0;
};

struct SvmModel {
    std::vector<SupportVector> support_vectors;
    double bias = 0.0;
    double gamma = 1.0;
    double c = 1.0;
    bool converged = true;
    std::size_t passes = 0;  // full sweeps over the training set
};

struct SvmOptions {
    double c = 10.0;
    double gamma = 1.0;
    double tol = 1e-3;
    std::size_t max_passes = 10;  // consecutive no-change passes before stopping
    std::size_t max_iterations = 100000;  // hard cap on total passes
    std::uint64_t seed = 0;
};

inline int to_sign(Label label) noexcept { return label == Label::Face ? 1 : -1; }

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);

/// Sequential minimal optimization on the soft-margin dual. On hitting
/// max_iterations the partial model is returned with converged = false.
SvmModel svm_train(std::span<const LabeledSample> train, const SvmOptions& options);

double svm_decision(const SvmModel& model, std::span<const double> query);
/// Face when the decision value is > 0; zero maps to NonFace.
Label svm_predict(const SvmModel& model, std::span<const double> query);

struct SvmGridPoint {
    double c = 0.0;
    double gamma = 0.0;
    double cv_accuracy = 0.0;
};

/// Candidate grid, C in {10, 1, 100} x gamma in {1/D, 1, 4, 16}, listed with
/// (10, 1/D) first.
std::vector<SvmGridPoint> default_svm_grid(std::size_t dim);

/// Stratified k-fold cross-validation over `grid`; returns the grid with
/// cv_accuracy filled in. `best` receives the first point of highest accuracy.
std::vector<SvmGridPoint> svm_grid_search(std::span<const LabeledSample> train,
                                          std::vector<SvmGridPoint> grid, std::size_t folds,
                                          const SvmOptions& base, SvmGridPoint* best);

// ---------------------------------------------------------------------------
// Three-way comparison

double accuracy_of(std::span<const Label> predicted, std::span<const LabeledSample> truth);

struct AlgorithmRow {
    std::string algorithm;  // "svm", "knn" or "quantum"
    double accuracy = 0.0;
    std::string detail;     // e.g. "k=2", "threshold=0.958000"
};

struct KnnSweepRow {
    std::size_t k = 0;
    double accuracy = 0.0;
};

struct CompareOptions {
    classifier::SweepRange range;
    swaptest::EstimatorConfig estimator;
    std::size_t knn_k_max = 20;
    SvmOptions svm;
    bool svm_grid = true;       // when false, svm.c / svm.gamma are used as-is
    std::size_t svm_folds = 5;
};

struct CompareReport {
    std::vector<AlgorithmRow> rows;  // svm, knn, quantum
    std::vector<KnnSweepRow> knn_by_k;
    std::size_t best_k = 0;
    double quantum_best_threshold = 0.0;
    double svm_c = 0.0;
    double svm_gamma = 0.0;
    std::size_t svm_support_vectors = 0;
};

/// Template from `template_faces`; k-NN and SVM trained on `train`; all three
/// evaluated on `test`.
CompareReport compare_algorithms(std::span<const encoding::FeatureVector> template_faces,
                                 std::span<const LabeledSample> train,
                                 std::span<const LabeledSample> test,
                                 const CompareOptions& options);

/// `algorithm,accuracy,detail`
std::string compare_to_csv(const CompareReport& report);
/// `k,accuracy`
std::string knn_to_csv(const CompareReport& report);

}  // namespace qface::baselines

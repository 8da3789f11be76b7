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

#include "qface/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "qface/error.hpp"
#include "qface/rng.hpp"

namespace qface::baselines {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

void check_dim(std::size_t expected, std::size_t got, const char* what) {
    require(expected == got, ErrorCode::InvalidArgument,
            std::string(what) + ": dimension mismatch (" + std::to_string(expected) + " vs " +
                std::to_string(got) + ")");
}

}  // namespace

KnnModel make_knn(std::vector<LabeledSample> train, std::size_t k) {
    require(!train.empty(), ErrorCode::InvalidArgument, "knn: empty training set");
    require(k >= 1 && k <= train.size(), ErrorCode::InvalidArgument,
            "knn: k=" + std::to_string(k) + " outside [1, " + std::to_string(train.size()) + "]");
    return KnnModel{std::move(train), k};
}

Label knn_classify(const KnnModel& model, std::span<const double> query) {
    require(model.k >= 1 && model.k <= model.train.size(), ErrorCode::InvalidArgument,
            "knn: k out of range for training set");
    struct Neighbour {
        double dist;
        std::size_t index;
    };
    std::vector<Neighbour> all;
    all.reserve(model.train.size());
    for (std::size_t i = 0; i < model.train.size(); ++i) {
        const auto& s = model.train[i];
        check_dim(s.vector.dim(), query.size(), "knn_classify");
        all.push_back({squared_distance(s.vector.values(), query), i});
    }
    const auto closer = [&](const Neighbour& a, const Neighbour& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        return model.train[a.index].id < model.train[b.index].id;
    };
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(model.k), all.end(),
                      closer);
    std::size_t faces = 0;
    for (std::size_t i = 0; i < model.k; ++i) {
        if (model.train[all[i].index].label == Label::Face) ++faces;
    }
    const std::size_t nonfaces = model.k - faces;
    if (faces == nonfaces) return model.train[all.front().index].label;
    return faces > nonfaces ? Label::Face : Label::NonFace;
}

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma) {
    return std::exp(-gamma * squared_distance(a, b));
}

SvmModel svm_train(std::span<const LabeledSample> train, const SvmOptions& opt) {
    require(opt.c > 0.0 && opt.gamma > 0.0, ErrorCode::InvalidArgument,
            "svm_train: c and gamma must be > 0");
    require(opt.tol > 0.0, ErrorCode::InvalidArgument, "svm_train: tol must be > 0");
    const std::size_t n = train.size();
    std::size_t pos = 0;
    for (const auto& s : train) {
        check_dim(train.front().vector.dim(), s.vector.dim(), "svm_train");
        if (s.label == Label::Face) ++pos;
    }
    require(pos > 0 && pos < n, ErrorCode::InvalidArgument,
            "svm_train: both classes must be present");

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = to_sign(train[i].label);
    std::vector<double> kernel(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        kernel[i * n + i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double k = rbf_kernel(train[i].vector.values(), train[j].vector.values(), opt.gamma);
            kernel[i * n + j] = kernel[j * n + i] = k;
        }
    }
    const auto K = [&](std::size_t i, std::size_t j) { return kernel[i * n + j]; };

    std::vector<double> alpha(n, 0.0);
    std::vector<double> f(n, 0.0);  // decision value without bias at each training point
    double b = 0.0;
    const double c = opt.c;
    Rng rng(mix64(opt.seed));

    // One pairwise update of (alpha_i, alpha_j). Returns true on progress.
    const auto take_step = [&](std::size_t i, std::size_t j) {
        if (i == j) return false;
        const double ei = f[i] + b - y[i];
        const double ej = f[j] + b - y[j];
        const double ai = alpha[i], aj = alpha[j];
        double lo, hi;
        if (y[i] != y[j]) {
            lo = std::max(0.0, aj - ai);
            hi = std::min(c, c + aj - ai);
        } else {
            lo = std::max(0.0, ai + aj - c);
            hi = std::min(c, ai + aj);
        }
        if (hi - lo < 1e-12) return false;
        const double eta = 2.0 * K(i, j) - K(i, i) - K(j, j);
        if (eta >= 0.0) return false;
        double aj_new = std::clamp(aj - y[j] * (ei - ej) / eta, lo, hi);
        if (std::abs(aj_new - aj) < 1e-8 * (aj_new + aj + 1e-8)) return false;
        double ai_new = ai + y[i] * y[j] * (aj - aj_new);
        // Snap to bounds so box membership is exact.
        ai_new = std::clamp(ai_new, 0.0, c);
        const double dai = ai_new - ai, daj = aj_new - aj;

        const double b1 = b - ei - y[i] * dai * K(i, i) - y[j] * daj * K(i, j);
        const double b2 = b - ej - y[i] * dai * K(i, j) - y[j] * daj * K(j, j);
        double b_new;
        if (ai_new > 0.0 && ai_new < c) {
            b_new = b1;
        } else if (aj_new > 0.0 && aj_new < c) {
            b_new = b2;
        } else {
            b_new = 0.5 * (b1 + b2);
        }
        alpha[i] = ai_new;
        alpha[j] = aj_new;
        for (std::size_t k = 0; k < n; ++k) {
            f[k] += y[i] * dai * K(i, k) + y[j] * daj * K(j, k);
        }
        b = b_new;
        return true;
    };

    const auto violates_kkt = [&](std::size_t i) {
        const double r = y[i] * (f[i] + b - y[i]);
        return (r < -opt.tol && alpha[i] < c) || (r > opt.tol && alpha[i] > 0.0);
    };

    std::uniform_int_distribution<std::size_t> pick(0, n - 2);
    std::size_t quiet_passes = 0, passes = 0;
    bool converged = true;
    while (quiet_passes < opt.max_passes) {
        if (passes >= opt.max_iterations) {
            converged = false;
            break;
        }
        ++passes;
        std::size_t changed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!violates_kkt(i)) continue;
            std::size_t j = pick(rng);
            if (j >= i) ++j;
            if (take_step(i, j)) {
                ++changed;
                continue;
            }
            // Random partner failed; scan all partners from a random offset.
            const std::size_t start = pick(rng);
            for (std::size_t t = 0; t < n; ++t) {
                const std::size_t jj = (start + t) % n;
                if (jj != i && take_step(i, jj)) {
                    ++changed;
                    break;
                }
            }
        }
        quiet_passes = changed == 0 ? quiet_passes + 1 : 0;
    }

    // Final bias from the free support vectors when there are any.
    double free_sum = 0.0;
    std::size_t free_n = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] > 0.0 && alpha[i] < c) {
            free_sum += y[i] - f[i];
            ++free_n;
        }
    }
    if (free_n > 0) b = free_sum / static_cast<double>(free_n);

    SvmModel model;
    model.bias = b;
    model.gamma = opt.gamma;
    model.c = c;
    model.converged = converged;
    model.passes = passes;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] > 0.0) {
            const auto v = train[i].vector.values();
            model.support_vectors.push_back(
                {std::vector<double>(v.begin(), v.end()), static_cast<int>(y[i]), alpha[i]});
        }
    }
    if (!converged) {
        std::fprintf(stderr, "warning: svm_train hit the %zu-pass cap before converging\n",
                     opt.max_iterations);
    }
    return model;
}

double svm_decision(const SvmModel& model, std::span<const double> query) {
    double sum = model.bias;
    for (const auto& sv : model.support_vectors) {
        check_dim(sv.vector.size(), query.size(), "svm_predict");
        sum += sv.alpha * sv.label * rbf_kernel(sv.vector, query, model.gamma);
    }
    return sum;
}

Label svm_predict(const SvmModel& model, std::span<const double> query) {
    return svm_decision(model, query) > 0.0 ? Label::Face : Label::NonFace;
}

std::vector<SvmGridPoint> default_svm_grid(std::size_t dim) {
    require(dim >= 1, ErrorCode::InvalidArgument, "svm grid: dim must be >= 1");
    std::vector<SvmGridPoint> grid;
    for (double gamma : {1.0 / static_cast<double>(dim), 1.0, 4.0, 16.0}) {
        for (double c : {10.0, 1.0, 100.0}) grid.push_back({c, gamma, 0.0});
    }
    return grid;
}

double accuracy_of(std::span<const Label> predicted, std::span<const LabeledSample> truth) {
    require(!truth.empty() && predicted.size() == truth.size(), ErrorCode::InvalidArgument,
            "accuracy: size mismatch or empty set");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i].label;
    return static_cast<double>(hits) / static_cast<double>(truth.size());
}

std::vector<SvmGridPoint> svm_grid_search(std::span<const LabeledSample> train,
                                          std::vector<SvmGridPoint> grid, std::size_t folds,
                                          const SvmOptions& base, SvmGridPoint* best) {
    require(!grid.empty(), ErrorCode::InvalidArgument, "svm grid: empty grid");
    require(folds >= 2, ErrorCode::InvalidArgument, "svm grid: need at least 2 folds");

    // Stratified fold assignment: shuffle each class, deal round-robin.
    std::vector<std::size_t> fold_of(train.size());
    Rng rng(mix64(base.seed ^ 0x6f6c64ULL));
    for (Label cls : {Label::Face, Label::NonFace}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < train.size(); ++i) {
            if (train[i].label == cls) idx.push_back(i);
        }
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::size_t t = 0; t < idx.size(); ++t) fold_of[idx[t]] = t % folds;
    }

    for (auto& point : grid) {
        std::size_t hits = 0, total = 0;
        for (std::size_t fold = 0; fold < folds; ++fold) {
            std::vector<LabeledSample> fit, held;
            for (std::size_t i = 0; i < train.size(); ++i) {
                (fold_of[i] == fold ? held : fit).push_back(train[i]);
            }
            const bool both = std::any_of(fit.begin(), fit.end(),
                                          [](const auto& s) { return s.label == Label::Face; }) &&
                              std::any_of(fit.begin(), fit.end(),
                                          [](const auto& s) { return s.label == Label::NonFace; });
            if (held.empty() || !both) continue;
            SvmOptions opt = base;
            opt.c = point.c;
            opt.gamma = point.gamma;
            opt.seed = derive_seed(base.seed, fold);
            const auto model = svm_train(fit, opt);
            for (const auto& s : held) {
                hits += svm_predict(model, s.vector.values()) == s.label;
                ++total;
            }
        }
        point.cv_accuracy = total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0;
    }
    if (best) {
        *best = grid.front();
        for (const auto& p : grid) {
            if (p.cv_accuracy > best->cv_accuracy) *best = p;
        }
    }
    return grid;
}

CompareReport compare_algorithms(std::span<const encoding::FeatureVector> template_faces,
                                 std::span<const LabeledSample> train,
                                 std::span<const LabeledSample> test,
                                 const CompareOptions& options) {
    require(!test.empty(), ErrorCode::Data, "compare: empty test set");
    const auto has = [](std::span<const LabeledSample> set, Label l) {
        return std::any_of(set.begin(), set.end(), [l](const auto& s) { return s.label == l; });
    };
    require(has(train, Label::Face) && has(train, Label::NonFace), ErrorCode::Data,
            "compare: training set needs both faces and non-faces");
    require(has(test, Label::Face) && has(test, Label::NonFace), ErrorCode::Data,
            "compare: test set needs both faces and non-faces");

    CompareReport report;
    char buf[64];

    // SVM
    SvmOptions svm_opt = options.svm;
    if (options.svm_grid) {
        SvmGridPoint best;
        svm_grid_search(train, default_svm_grid(train.front().vector.dim()), options.svm_folds,
                        svm_opt, &best);
        svm_opt.c = best.c;
        svm_opt.gamma = best.gamma;
    }
    const auto svm = svm_train(train, svm_opt);
    std::vector<Label> predicted;
    for (const auto& s : test) predicted.push_back(svm_predict(svm, s.vector.values()));
    report.svm_c = svm_opt.c;
    report.svm_gamma = svm_opt.gamma;
    report.svm_support_vectors = svm.support_vectors.size();
    std::snprintf(buf, sizeof buf, "sv=%zu c=%g gamma=%g", svm.support_vectors.size(), svm_opt.c,
                  svm_opt.gamma);
    report.rows.push_back({"svm", accuracy_of(predicted, test), buf});

    // k-NN over k = 1..k_max, best k lowest among ties
    const std::size_t k_max = std::min(options.knn_k_max, train.size());
    require(k_max >= 1, ErrorCode::InvalidArgument, "compare: knn_k_max must be >= 1");
    KnnModel knn{std::vector<LabeledSample>(train.begin(), train.end()), 1};
    double best_knn = -1.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        knn.k = k;
        predicted.clear();
        for (const auto& s : test) predicted.push_back(knn_classify(knn, s.vector.values()));
        const double acc = accuracy_of(predicted, test);
        report.knn_by_k.push_back({k, acc});
        if (acc > best_knn) {
            best_knn = acc;
            report.best_k = k;
        }
    }
    report.rows.push_back({"knn", best_knn, "k=" + std::to_string(report.best_k)});

    // Quantum template matching
    const auto tmpl = classifier::build_template(template_faces);
    const auto sweep = classifier::sweep_thresholds(tmpl, test, options.range, options.estimator);
    report.quantum_best_threshold = sweep.best_threshold;
    std::snprintf(buf, sizeof buf, "threshold=%.6f", sweep.best_threshold);
    report.rows.push_back({"quantum", sweep.best_accuracy, buf});
    return report;
}

std::string compare_to_csv(const CompareReport& report) {
    std::string out = "algorithm,accuracy,detail\n";
    char buf[160];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%s,%.6f,%s\n", r.algorithm.c_str(), r.accuracy,
                      r.detail.c_str());
        out += buf;
    }
    return out;
}

std::string knn_to_csv(const CompareReport& report) {
    std::string out = "k,accuracy\n";
    char buf[64];
    for (const auto& r : report.knn_by_k) {
        std::snprintf(buf, sizeof buf, "%zu,%.6f\n", r.k, r.accuracy);
        out += buf;
    }
    return out;
}

}  // namespace qface::baselines

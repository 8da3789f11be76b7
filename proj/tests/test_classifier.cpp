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
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace qface;
using namespace qface::classifier;
using encoding::FeatureVector;
using encoding::UnitFeatureVector;
using qface::testing::code_of;
using qface::testing::random_unit;
using swaptest::EstimatorConfig;
using swaptest::EstimatorMode;

namespace {

const EstimatorConfig kExact{EstimatorMode::CircuitExact, 0, 0};

LabeledSample sample(UnitFeatureVector v, Label label, std::string id) {
    return LabeledSample{std::move(v), label, std::move(id)};
}

}  // namespace

TEST_CASE("build_template averages raw vectors, then normalises once") {
    const std::vector<FeatureVector> one{FeatureVector({3, 4})};
    const auto t1 = build_template(one);
    CHECK(t1.source_count == 1);
    CHECK(t1.vector[0] == doctest::Approx(0.6));
    CHECK(t1.vector[1] == doctest::Approx(0.8));

    const std::vector<FeatureVector> two{FeatureVector({2, 0}), FeatureVector({0, 2})};
    const auto t2 = build_template(two);
    CHECK(t2.vector[0] == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(t2.vector[1] == doctest::Approx(1 / std::sqrt(2.0)));

    // Raw magnitudes matter: normalising first would give [0.5, 0.5]/norm instead.
    const std::vector<FeatureVector> uneven{FeatureVector({10, 0}), FeatureVector({0, 1})};
    const auto t3 = build_template(uneven);
    CHECK(t3.vector[0] / t3.vector[1] == doctest::Approx(10.0));
}

TEST_CASE("build_template on many vectors yields a unit template") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> pix(0, 1);
    std::vector<FeatureVector> train;
    for (int i = 0; i < 300; ++i) {
        std::vector<double> v(64);
        for (double& x : v) x = pix(rng);
        train.emplace_back(std::move(v));
    }
    const auto t = build_template(train);
    CHECK(t.source_count == 300);
    CHECK(t.dim() == 64);
    double s = 0;
    for (double x : t.vector.values()) s += x * x;
    CHECK(std::abs(s - 1.0) < 1e-10);
}

TEST_CASE("build_template errors") {
    CHECK(code_of([] { build_template(std::vector<FeatureVector>{}); }) == ErrorCode::Data);
    const std::vector<FeatureVector> mixed{FeatureVector({1, 0}), FeatureVector({1, 0, 0, 0})};
    CHECK(code_of([&] { build_template(mixed); }) == ErrorCode::Data);
    const std::vector<FeatureVector> cancel{FeatureVector({1, -1}), FeatureVector({-1, 1})};
    CHECK(code_of([&] { build_template(cancel); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("threshold rule is strict") {
    CHECK(threshold_rule(0.97, 0.958) == Label::Face);
    CHECK(threshold_rule(0.958, 0.958) == Label::NonFace);
    CHECK(threshold_rule(0.5, 0.958) == Label::NonFace);
    CHECK(threshold_rule(1e-300, 0.0) == Label::Face);
    CHECK(threshold_rule(0.0, 0.0) == Label::NonFace);
    CHECK(threshold_rule(1.0, 1.0) == Label::NonFace);
}

TEST_CASE("classify uses the estimator and the strict rule") {
    std::mt19937_64 rng(32);
    const auto v = random_unit(16, rng);
    const std::vector<FeatureVector> train{v.as_feature()};
    const auto tmpl = build_template(train);
    const auto self = sample(v, Label::Face, "self");
    const auto r = classify(tmpl, self, 0.99, kExact);
    CHECK(r.id == "self");
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.threshold == 0.99);
    CHECK(r.predicted == Label::Face);
    CHECK(classify(tmpl, self, 1.0, kExact).predicted == Label::NonFace);

    const auto other = sample(random_unit(16, rng), Label::NonFace, "o");
    const auto ro = classify(tmpl, other, 0.0, kExact);
    CHECK(ro.predicted == (ro.fidelity > 0.0 ? Label::Face : Label::NonFace));

    const auto small = sample(random_unit(8, rng), Label::Face, "x");
    CHECK(code_of([&] { classify(tmpl, small, 0.5, kExact); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { classify(tmpl, self, 1.5, kExact); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("threshold grid") {
    const auto g = threshold_grid({});
    REQUIRE(g.size() == 31);
    CHECK(g.front() == 0.70);
    CHECK(g.back() == 1.00);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g[i] == std::round((0.70 + 0.01 * static_cast<double>(i)) * 100) / 100);
    }
    // The end point is inclusive, so start = end - step gives the two endpoints.
    const auto two = threshold_grid({0.99, 0.01, 1.00});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == 0.99);
    CHECK(two[1] == 1.00);
    // A step wider than the range leaves only the start.
    CHECK(threshold_grid({0.5, 0.3, 0.7}).size() == 1);

    CHECK(code_of([] { threshold_grid({0.8, 0.01, 0.7}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { threshold_grid({0.7, 0.0, 1.0}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { threshold_grid({0.7, -0.1, 1.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("separable sweep: faces 0.99, non-faces 0.75") {
    std::vector<double> fids;
    std::vector<Label> labels;
    for (int i = 0; i < 10; ++i) {
        fids.push_back(0.99);
        labels.push_back(Label::Face);
    }
    for (int i = 0; i < 30; ++i) {
        fids.push_back(0.75);
        labels.push_back(Label::NonFace);
    }
    const auto rep = sweep_from_fidelities(fids, labels, {});
    REQUIRE(rep.rows.size() == 31);
    for (const auto& row : rep.rows) {
        CHECK(row.tp + row.fp + row.tn + row.fn == 40);
        CHECK(row.accuracy == static_cast<double>(row.tp + row.tn) / 40.0);
        const bool inside = row.threshold >= 0.75 && row.threshold < 0.99;
        CHECK((row.accuracy == 1.0) == inside);
    }
    // A non-face exactly at 0.75 is already rejected at t = 0.75 (strict rule),
    // so 0.75 is the lowest perfect threshold.
    CHECK(rep.best_accuracy == 1.0);
    CHECK(rep.best_threshold == 0.75);
}

TEST_CASE("sweep where every sample equals the template") {
    std::mt19937_64 rng(33);
    const auto v = random_unit(16, rng);
    const std::vector<FeatureVector> train{v.as_feature()};
    const auto tmpl = build_template(train);
    std::vector<LabeledSample> test;
    for (int i = 0; i < 4; ++i) test.push_back(sample(v, Label::Face, "f" + std::to_string(i)));
    for (int i = 0; i < 4; ++i) test.push_back(sample(v, Label::NonFace, "n" + std::to_string(i)));
    const auto rep = sweep_thresholds(tmpl, test, {}, kExact);
    for (const auto& row : rep.rows) {
        if (row.threshold < 1.0) {
            CHECK(row.tp == 4);
            CHECK(row.fp == 4);
            CHECK(row.tn == 0);
        }
    }
    CHECK(rep.best_accuracy == 0.5);
    CHECK(rep.best_threshold == 0.70);
}

TEST_CASE("sweep properties on random data") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_real_distribution<double> u(0.6, 1.0);
        std::vector<double> fids(50);
        std::vector<Label> labels(50);
        for (std::size_t i = 0; i < 50; ++i) {
            fids[i] = u(rng);
            labels[i] = (rng() & 1) ? Label::Face : Label::NonFace;
        }
        const auto rep = sweep_from_fidelities(fids, labels, {});
        double best = 0.0;
        for (std::size_t r = 0; r < rep.rows.size(); ++r) {
            const auto& row = rep.rows[r];
            CHECK(row.tp + row.fp + row.tn + row.fn == 50);
            best = std::max(best, row.accuracy);
            if (r > 0) {
                CHECK(row.tp <= rep.rows[r - 1].tp);
                CHECK(row.tn >= rep.rows[r - 1].tn);
            }
        }
        CHECK(rep.best_accuracy == best);
        for (const auto& row : rep.rows) {
            if (row.accuracy == best) {
                CHECK(rep.best_threshold == row.threshold);
                break;
            }
        }
    }
}

TEST_CASE("sweep_thresholds equals compute-once-then-threshold") {
    std::mt19937_64 rng(35);
    std::vector<FeatureVector> train;
    for (int i = 0; i < 5; ++i) train.push_back(random_unit(16, rng).as_feature());
    const auto tmpl = build_template(train);
    std::vector<LabeledSample> test;
    std::vector<Label> labels;
    for (int i = 0; i < 12; ++i) {
        const Label l = i % 3 ? Label::NonFace : Label::Face;
        test.push_back(sample(random_unit(16, rng), l, "s" + std::to_string(i)));
        labels.push_back(l);
    }
    const auto fids = compute_fidelities(tmpl, test, kExact);
    CHECK(fids.size() == test.size());
    const auto a = sweep_thresholds(tmpl, test, {}, kExact);
    const auto b = sweep_from_fidelities(fids, labels, {});
    CHECK(sweep_to_csv(a) == sweep_to_csv(b));

    const EstimatorConfig sampled{EstimatorMode::Sampled, 256, 7};
    CHECK(sweep_to_csv(sweep_thresholds(tmpl, test, {}, sampled)) ==
          sweep_to_csv(sweep_thresholds(tmpl, test, {}, sampled)));
    // Per-sample seeds depend on the sample index, not on evaluation order.
    const auto f1 = compute_fidelities(tmpl, test, sampled);
    const auto f_head = compute_fidelities(tmpl, std::span(test).first(3), sampled);
    for (std::size_t i = 0; i < 3; ++i) CHECK(f1[i] == f_head[i]);

    CHECK(code_of([&] { sweep_thresholds(tmpl, {}, {}, kExact); }) == ErrorCode::Data);
}

TEST_CASE("average fidelity report") {
    const std::vector<double> fids{1.0, 0.5};
    const std::vector<Label> labels{Label::Face, Label::NonFace};
    const auto avg = average_fidelity_report(fids, labels);
    CHECK(avg.mean_face == 1.0);
    CHECK(avg.mean_nonface == 0.5);
    const std::vector<Label> faces_only{Label::Face, Label::Face};
    CHECK(code_of([&] { average_fidelity_report(fids, faces_only); }) == ErrorCode::Data);
}

TEST_CASE("sweep CSV format") {
    const std::vector<double> fids{0.9, 0.8};
    const std::vector<Label> labels{Label::Face, Label::NonFace};
    const auto rep = sweep_from_fidelities(fids, labels, {0.85, 0.05, 0.90});
    CHECK(sweep_to_csv(rep) ==
          "threshold,tp,fp,tn,fn,accuracy\n"
          "0.850000,1,0,1,0,1.000000\n"
          "0.900000,0,0,1,1,0.500000\n");
    const auto table = sweep_to_table(rep);
    CHECK(table.find("best threshold 0.850000") != std::string::npos);
}

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

#include "qface/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qface/error.hpp"
#include "qface/rng.hpp"

namespace qface::app {

using classifier::Label;

swaptest::FidelityEstimate fidelity_images(const RunConfig& cfg, const std::filesystem::path& a,
                                           const std::filesystem::path& b) {
    validate(cfg);
    const auto va = encoding::normalize(dataio::preprocess(dataio::load_pgm(a), cfg.dim, cfg.square));
    const auto vb = encoding::normalize(dataio::preprocess(dataio::load_pgm(b), cfg.dim, cfg.square));
    return swaptest::estimate_fidelity(va, vb, estimator_of(cfg));
}

namespace {

dataio::DatasetSplit split_for(const RunConfig& cfg, std::size_t dim, std::size_t train_nonface_n,
                               std::size_t test_nonface_n) {
    validate(cfg);
    if (!cfg.manifest.empty()) {
        std::ifstream f(cfg.manifest);
        require(static_cast<bool>(f), ErrorCode::Io, "cannot open manifest " + cfg.manifest);
        std::stringstream ss;
        ss << f.rdbuf();
        const auto rows = dataio::parse_manifest(ss.str());
        auto split = dataio::split_from_manifest(rows, dim, cfg.square);
        split.seed = cfg.seed;
        return split;
    }
    require(!cfg.face_dir.empty(), ErrorCode::Config, "config: face_dir is required");
    dataio::NonfaceSource source;
    if (!cfg.nonface_dir.empty()) source.directory = cfg.nonface_dir;
    source.synthetic_count = cfg.nonface_synthetic;
    dataio::SplitOptions opt;
    opt.train_n = cfg.train_n;
    opt.train_nonface_n = train_nonface_n;
    opt.test_nonface_n = test_nonface_n;
    opt.dim = dim;
    opt.seed = cfg.seed;
    opt.square = cfg.square;
    return dataio::make_split(cfg.face_dir, source, opt);
}

std::vector<Label> labels_of(const std::vector<classifier::LabeledSample>& samples) {
    std::vector<Label> out;
    for (const auto& s : samples) out.push_back(s.label);
    return out;
}

}  // namespace

dataio::DatasetSplit sweep_split(const RunConfig& cfg, std::size_t dim) {
    return split_for(cfg, dim, 0, cfg.test_nonface_n);
}

dataio::DatasetSplit compare_split(const RunConfig& cfg) {
    return split_for(cfg, cfg.dim, cfg.train_nonface_n, 0);
}

SweepRun run_sweep(const RunConfig& cfg) {
    auto split = sweep_split(cfg, cfg.dim);
    const auto tmpl = classifier::build_template(split.template_vectors());
    const auto test = split.test_samples();
    const auto labels = labels_of(test);
    const auto fids = classifier::compute_fidelities(tmpl, test, estimator_of(cfg));
    SweepRun run{std::move(split), classifier::sweep_from_fidelities(fids, labels, sweep_range_of(cfg)), {}};
    if (!run.split.test_faces.empty() && !run.split.test_nonfaces.empty()) {
        run.averages = classifier::average_fidelity_report(fids, labels);
    }
    return run;
}

std::vector<Table1Row> run_table1(const RunConfig& cfg) {
    std::vector<Table1Row> rows;
    for (std::size_t dim : cfg.table1_dims) {
        const auto split = sweep_split(cfg, dim);
        const auto tmpl = classifier::build_template(split.template_vectors());
        const auto avg =
            classifier::average_fidelity_report(tmpl, split.test_samples(), estimator_of(cfg));
        rows.push_back({encoding::required_qubits(dim), dim, avg.mean_face, avg.mean_nonface,
                        split.test_faces.size(), split.test_nonfaces.size()});
    }
    return rows;
}

std::string table1_to_csv(const std::vector<Table1Row>& rows) {
    std::string out = "qubits,dim,mean_face,mean_nonface\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%zu,%.6f,%.6f\n", r.qubits, r.dim, r.mean_face,
                      r.mean_nonface);
        out += buf;
    }
    return out;
}

std::string table1_to_table(const std::vector<Table1Row>& rows) {
    std::string out = "qubits   dim  mean_face  mean_nonface  test_faces  test_nonfaces\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%6d %5zu  %9.6f  %12.6f  %10zu  %13zu\n", r.qubits, r.dim,
                      r.mean_face, r.mean_nonface, r.test_faces, r.test_nonfaces);
        out += buf;
    }
    return out;
}

CompareRun run_compare(const RunConfig& cfg) {
    auto split = compare_split(cfg);
    baselines::CompareOptions opt;
    opt.range = sweep_range_of(cfg);
    opt.estimator = estimator_of(cfg);
    opt.knn_k_max = cfg.knn_k_max;
    opt.svm.c = cfg.svm_c;
    opt.svm.gamma = cfg.svm_gamma.value_or(1.0 / static_cast<double>(cfg.dim));
    opt.svm.seed = cfg.seed;
    opt.svm_grid = cfg.svm_grid;
    const auto faces = split.template_vectors();
    const auto train = split.train_samples();
    const auto test = split.test_samples();
    auto report = baselines::compare_algorithms(faces, train, test, opt);
    return CompareRun{std::move(split), std::move(report)};
}

namespace {

std::vector<encoding::UnitFeatureVector> random_units(std::size_t n, std::size_t dim,
                                                      std::uint64_t seed) {
    std::vector<encoding::UnitFeatureVector> out;
    out.reserve(n);
    Rng rng(mix64(seed));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v(dim);
        for (double& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 + 1e-3;
        out.push_back(encoding::normalize(encoding::FeatureVector(std::move(v))));
    }
    return out;
}

}  // namespace

BenchReport run_bench(const RunConfig& cfg) {
    validate(cfg);
    using clock = std::chrono::steady_clock;
    constexpr double kMinRepSeconds = 2e-3;
    BenchReport report;

    const std::pair<const char*, swaptest::EstimatorMode> paths[] = {
        {"analytic", swaptest::EstimatorMode::Analytic},
        {"circuit", swaptest::EstimatorMode::CircuitExact},
    };
    for (const auto& [name, mode] : paths) {
        for (std::size_t dim : cfg.bench_dims) {
            const auto tmpl = random_units(1, dim, derive_seed(cfg.seed, dim)).front();
            for (std::size_t n : cfg.bench_samples) {
                const auto samples = random_units(n, dim, derive_seed(cfg.seed, dim * 1000003 + n));
                volatile double sink = 0.0;
                const auto batch = [&] {
                    double acc = 0.0;
                    for (const auto& s : samples) {
                        acc += swaptest::estimate_fidelity(tmpl, s, mode, 1, 0).value;
                    }
                    sink = sink + acc;
                };

                // Calibrate the inner repeat count so one repetition spans >= 2 ms.
                std::size_t inner = 1;
                while (true) {
                    const auto t0 = clock::now();
                    for (std::size_t r = 0; r < inner; ++r) batch();
                    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
                    if (dt >= kMinRepSeconds || inner >= (std::size_t{1} << 20)) break;
                    inner *= 2;
                }
                std::vector<double> per_batch;
                for (std::size_t rep = 0; rep < cfg.bench_reps; ++rep) {
                    const auto t0 = clock::now();
                    for (std::size_t r = 0; r < inner; ++r) batch();
                    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
                    per_batch.push_back(dt / static_cast<double>(inner));
                }
                std::sort(per_batch.begin(), per_batch.end());
                const std::size_t m = per_batch.size();
                const double median =
                    m % 2 ? per_batch[m / 2] : 0.5 * (per_batch[m / 2 - 1] + per_batch[m / 2]);
                if (median < 1e-3) report.resolution_warning = true;
                report.rows.push_back({name, dim, n, median, inner});
            }
        }
    }
    return report;
}

std::string bench_to_csv(const BenchReport& report) {
    std::string out = "path,dim,samples,median_seconds\n";
    char buf[128];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.9e\n", r.path.c_str(), r.dim, r.samples,
                      r.median_seconds);
        out += buf;
    }
    return out;
}

double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, ErrorCode::InvalidArgument,
            "linear fit: need at least two paired points");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (syy == 0.0) return 1.0;
    if (sxx == 0.0) return 0.0;
    return (sxy * sxy) / (sxx * syy);
}

}  // namespace qface::app

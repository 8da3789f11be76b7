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

// End-to-end runs behind the CLI subcommands. Each returns plain data; the
// *_csv helpers produce the files the CLI writes.

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "qface/baselines.hpp"
#include "qface/classifier.hpp"
#include "qface/config.hpp"
#include "qface/dataio.hpp"
#include "qface/swaptest.hpp"

namespace qface::app {

/// Both images go through the same preprocessing at cfg.dim.
swaptest::FidelityEstimate fidelity_images(const RunConfig& cfg, const std::filesystem::path& a,
                                           const std::filesystem::path& b);

/// Split for the threshold protocol: all non-faces are test samples.
dataio::DatasetSplit sweep_split(const RunConfig& cfg, std::size_t dim);
/// Split for the baseline comparison: train_nonface_n non-faces join training.
dataio::DatasetSplit compare_split(const RunConfig& cfg);

struct SweepRun {
    dataio::DatasetSplit split;
    classifier::SweepReport report;
    classifier::AverageFidelities averages;
};

SweepRun run_sweep(const RunConfig& cfg);

struct Table1Row {
    int qubits = 0;
    std::size_t dim = 0;
    double mean_face = 0.0;
    double mean_nonface = 0.0;
    std::size_t test_faces = 0;
    std::size_t test_nonfaces = 0;
};

std::vector<Table1Row> run_table1(const RunConfig& cfg);
/// `qubits,dim,mean_face,mean_nonface`
std::string table1_to_csv(const std::vector<Table1Row>& rows);
std::string table1_to_table(const std::vector<Table1Row>& rows);

struct CompareRun {
    dataio::DatasetSplit split;
    baselines::CompareReport report;
};

CompareRun run_compare(const RunConfig& cfg);

struct BenchRow {
    std::string path;  // "analytic" or "circuit"
    std::size_t dim = 0;
    std::size_t samples = 0;
    double median_seconds = 0.0;
    std::size_t inner_repeats = 1;  // batches per timed repetition
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool resolution_warning = false;  // some median fell below 1 ms
};

/// Wall time of one batch (template vs `samples` random unit vectors) for each
/// path x dim x sample count; median over cfg.bench_reps repetitions on a
/// monotonic clock. Short batches are repeated inside a repetition until it
/// lasts at least 2 ms and the per-batch time is reported.
BenchReport run_bench(const RunConfig& cfg);
/// `path,dim,samples,median_seconds`
std::string bench_to_csv(const BenchReport& report);

/// Least-squares line through (x, y); returns R^2 (1 when y is constant).
double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qface::app

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qface/dataio.hpp"
#include "qface/swaptest.hpp"

namespace qface::app {

inline constexpr std::uint64_t kDefaultSeed = 17;

/// Everything a command needs. Text form is one `key = value` per line;
/// `#` starts a comment. Unknown keys are Config errors.
struct RunConfig {
    std::size_t dim = 64;
    swaptest::EstimatorMode mode = swaptest::EstimatorMode::CircuitExact;
    std::uint64_t shots = swaptest::kDefaultShots;
    std::uint64_t seed = kDefaultSeed;
    double threshold_start = 0.70;
    double threshold_step = 0.01;
    double threshold_end = 1.00;

    std::string face_dir;
    std::string nonface_dir;  // empty: use the synthetic generator
    std::string manifest;     // non-empty: rebuild the split from this file
    std::size_t nonface_synthetic = 400;
    std::size_t train_n = 300;
    std::size_t train_nonface_n = 300;  // compare only
    std::size_t test_nonface_n = 300;   // sweep/table1 cap, 0 = all
    dataio::SquareMode square = dataio::SquareMode::Crop;
    std::string out = ".";

    std::vector<std::size_t> table1_dims{16, 64, 256};
    std::size_t knn_k_max = 20;
    bool svm_grid = true;
    double svm_c = 10.0;
    std::optional<double> svm_gamma;  // unset: 1/dim

    std::vector<std::size_t> bench_dims{16, 64, 256};
    std::vector<std::size_t> bench_samples{50, 100, 200};
    std::size_t bench_reps = 5;
};

/// Keys accepted by set_key, in serialization order.
const std::vector<std::string>& config_keys();

/// Parses and assigns one value. Throws Config on unknown key or bad value.
void set_key(RunConfig& cfg, std::string_view key, std::string_view value);
std::string get_key(const RunConfig& cfg, std::string_view key);

/// Applies every `key = value` line of `text` to cfg.
void apply_config_text(RunConfig& cfg, std::string_view text);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

/// Cross-field checks (power-of-two dims, sweep bounds, shots for sampled mode).
void validate(const RunConfig& cfg);

std::string to_config_text(const RunConfig& cfg);

swaptest::EstimatorConfig estimator_of(const RunConfig& cfg);
classifier::SweepRange sweep_range_of(const RunConfig& cfg);

}  // namespace qface::app

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

#include "qface/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qface/error.hpp"

namespace qface::app {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* want) {
    fail(ErrorCode::Config, "config: " + std::string(key) + " = '" + std::string(value) +
                                "' is not " + want);
}

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
    std::uint64_t out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || p != v.data() + v.size()) {
        bad_value(key, v, "a non-negative integer");
    }
    return out;
}

double parse_real(std::string_view key, std::string_view v) {
    // from_chars for double is available in libstdc++ 11+.
    double out = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || p != v.data() + v.size() || !std::isfinite(out)) {
        bad_value(key, v, "a finite real number");
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    bad_value(key, v, "a boolean");
}

std::vector<std::size_t> parse_list(std::string_view key, std::string_view v) {
    std::vector<std::size_t> out;
    while (true) {
        const auto comma = v.find(',');
        out.push_back(parse_u64(key, trim(v.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        v = v.substr(comma + 1);
    }
    return out;
}

std::string fmt_real(double v) {
    // Shortest form that round-trips.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt_list(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "dim",           "mode",           "shots",           "seed",
        "threshold_start", "threshold_step", "threshold_end", "face_dir",
        "nonface_dir",   "manifest",       "nonface_synthetic", "train_n",      "train_nonface_n",
        "test_nonface_n", "square",        "out",             "table1_dims",
        "knn_k_max",     "svm_grid",       "svm_c",           "svm_gamma",
        "bench_dims",    "bench_samples",  "bench_reps",
    };
    return keys;
}

void set_key(RunConfig& cfg, std::string_view key, std::string_view raw) {
    const std::string_view v = trim(raw);
    if (key == "dim") {
        cfg.dim = parse_u64(key, v);
    } else if (key == "mode") {
        const auto m = swaptest::parse_mode(v);
        if (!m) bad_value(key, v, "one of exact|sampled|analytic");
        cfg.mode = *m;
    } else if (key == "shots") {
        cfg.shots = parse_u64(key, v);
    } else if (key == "seed") {
        cfg.seed = parse_u64(key, v);
    } else if (key == "threshold_start") {
        cfg.threshold_start = parse_real(key, v);
    } else if (key == "threshold_step") {
        cfg.threshold_step = parse_real(key, v);
    } else if (key == "threshold_end") {
        cfg.threshold_end = parse_real(key, v);
    } else if (key == "face_dir") {
        cfg.face_dir = v;
    } else if (key == "nonface_dir") {
        cfg.nonface_dir = v;
    } else if (key == "manifest") {
        cfg.manifest = v;
    } else if (key == "nonface_synthetic") {
        cfg.nonface_synthetic = parse_u64(key, v);
    } else if (key == "train_n") {
        cfg.train_n = parse_u64(key, v);
    } else if (key == "train_nonface_n") {
        cfg.train_nonface_n = parse_u64(key, v);
    } else if (key == "test_nonface_n") {
        cfg.test_nonface_n = parse_u64(key, v);
    } else if (key == "square") {
        const auto s = dataio::parse_square_mode(v);
        if (!s) bad_value(key, v, "one of crop|squash");
        cfg.square = *s;
    } else if (key == "out") {
        cfg.out = v;
    } else if (key == "table1_dims") {
        cfg.table1_dims = parse_list(key, v);
    } else if (key == "knn_k_max") {
        cfg.knn_k_max = parse_u64(key, v);
    } else if (key == "svm_grid") {
        cfg.svm_grid = parse_bool(key, v);
    } else if (key == "svm_c") {
        cfg.svm_c = parse_real(key, v);
    } else if (key == "svm_gamma") {
        if (v == "auto") {
            cfg.svm_gamma.reset();
        } else {
            cfg.svm_gamma = parse_real(key, v);
        }
    } else if (key == "bench_dims") {
        cfg.bench_dims = parse_list(key, v);
    } else if (key == "bench_samples") {
        cfg.bench_samples = parse_list(key, v);
    } else if (key == "bench_reps") {
        cfg.bench_reps = parse_u64(key, v);
    } else {
        fail(ErrorCode::Config, "config: unknown key '" + std::string(key) + "'");
    }
}

std::string get_key(const RunConfig& cfg, std::string_view key) {
    if (key == "dim") return std::to_string(cfg.dim);
    if (key == "mode") return std::string(swaptest::to_string(cfg.mode));
    if (key == "shots") return std::to_string(cfg.shots);
    if (key == "seed") return std::to_string(cfg.seed);
    if (key == "threshold_start") return fmt_real(cfg.threshold_start);
    if (key == "threshold_step") return fmt_real(cfg.threshold_step);
    if (key == "threshold_end") return fmt_real(cfg.threshold_end);
    if (key == "face_dir") return cfg.face_dir;
    if (key == "nonface_dir") return cfg.nonface_dir;
    if (key == "manifest") return cfg.manifest;
    if (key == "nonface_synthetic") return std::to_string(cfg.nonface_synthetic);
    if (key == "train_n") return std::to_string(cfg.train_n);
    if (key == "train_nonface_n") return std::to_string(cfg.train_nonface_n);
    if (key == "test_nonface_n") return std::to_string(cfg.test_nonface_n);
    if (key == "square") return std::string(dataio::to_string(cfg.square));
    if (key == "out") return cfg.out;
    if (key == "table1_dims") return fmt_list(cfg.table1_dims);
    if (key == "knn_k_max") return std::to_string(cfg.knn_k_max);
    if (key == "svm_grid") return cfg.svm_grid ? "true" : "false";
    if (key == "svm_c") return fmt_real(cfg.svm_c);
    if (key == "svm_gamma") return cfg.svm_gamma ? fmt_real(*cfg.svm_gamma) : "auto";
    if (key == "bench_dims") return fmt_list(cfg.bench_dims);
    if (key == "bench_samples") return fmt_list(cfg.bench_samples);
    if (key == "bench_reps") return std::to_string(cfg.bench_reps);
    fail(ErrorCode::Config, "config: unknown key '" + std::string(key) + "'");
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorCode::Config,
                 "config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        try {
            set_key(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
        } catch (const Error& e) {
            fail(ErrorCode::Config, "config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
    std::ifstream f(path);
    require(static_cast<bool>(f), ErrorCode::Config, "cannot open config file " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    apply_config_text(cfg, ss.str());
}

void validate(const RunConfig& cfg) {
    const auto pow2 = [](std::size_t dim, const char* key) {
        require(encoding::is_power_of_two(dim), ErrorCode::Config,
                std::string("config: ") + key + " value " + std::to_string(dim) +
                    " is not a power of two >= 2");
        require(encoding::required_qubits(dim) <= qsim::kMaxQubits, ErrorCode::Config,
                std::string("config: ") + key + " value " + std::to_string(dim) +
                    " needs more qubits than the simulator supports");
    };
    pow2(cfg.dim, "dim");
    for (auto d : cfg.table1_dims) pow2(d, "table1_dims");
    for (auto d : cfg.bench_dims) pow2(d, "bench_dims");
    require(!cfg.table1_dims.empty() && !cfg.bench_dims.empty() && !cfg.bench_samples.empty(),
            ErrorCode::Config, "config: dimension and sample lists must be non-empty");
    for (auto s : cfg.bench_samples) {
        require(s >= 1, ErrorCode::Config, "config: bench_samples entries must be >= 1");
    }
    require(cfg.mode != swaptest::EstimatorMode::Sampled || cfg.shots >= 1, ErrorCode::Config,
            "config: sampled mode needs shots >= 1");
    require(cfg.threshold_step > 0.0, ErrorCode::Config, "config: threshold_step must be > 0");
    require(cfg.threshold_start < cfg.threshold_end, ErrorCode::Config,
            "config: threshold_start must be < threshold_end");
    require(cfg.threshold_start >= 0.0 && cfg.threshold_end <= 1.0, ErrorCode::Config,
            "config: thresholds must lie in [0, 1]");
    require(cfg.train_n >= 1, ErrorCode::Config, "config: train_n must be >= 1");
    require(cfg.knn_k_max >= 1, ErrorCode::Config, "config: knn_k_max must be >= 1");
    require(cfg.svm_c > 0.0, ErrorCode::Config, "config: svm_c must be > 0");
    require(!cfg.svm_gamma || *cfg.svm_gamma > 0.0, ErrorCode::Config,
            "config: svm_gamma must be > 0");
    require(cfg.bench_reps >= 5, ErrorCode::Config, "config: bench_reps must be >= 5");
}

std::string to_config_text(const RunConfig& cfg) {
    std::string out;
    for (const auto& key : config_keys()) out += key + " = " + get_key(cfg, key) + "\n";
    return out;
}

swaptest::EstimatorConfig estimator_of(const RunConfig& cfg) {
    return {cfg.mode, cfg.shots, cfg.seed};
}

classifier::SweepRange sweep_range_of(const RunConfig& cfg) {
    return {cfg.threshold_start, cfg.threshold_step, cfg.threshold_end};
}

}  // namespace qface::app

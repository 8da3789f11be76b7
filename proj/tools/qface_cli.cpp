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

// qface command-line frontend. Talks to the library only through qface.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qface/qface.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 2;
constexpr int kExitConfig = 3;
constexpr int kExitInternal = 1;

int exit_code_of(qf_status s) {
    switch (s) {
        case QF_OK: return kExitOk;
        case QF_ERR_IO:
        case QF_ERR_PARSE:
        case QF_ERR_DATA: return kExitData;
        case QF_ERR_CONFIG:
        case QF_ERR_INVALID_ARGUMENT:
        case QF_ERR_OUT_OF_RANGE: return kExitConfig;
        default: return kExitInternal;
    }
}

struct Failure {
    qf_status status;
};

void check(qf_status s) {
    if (s != QF_OK) throw Failure{s};
}

struct ConfigDeleter {
    void operator()(qf_config* c) const { qf_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<qf_config, ConfigDeleter>;

std::string get(const qf_config* cfg, const char* key) {
    size_t n = 0;
    check(qf_config_get(cfg, key, nullptr, 0, &n));
    std::string out(n, '\0');
    check(qf_config_get(cfg, key, out.data(), n + 1, &n));
    return out;
}

// Raw flag values, applied on top of env and config file in that order.
struct Flags {
    std::optional<std::string> config_file;
    std::map<std::string, std::string> values;
    bool out_given = false;
};

void add_value_flag(CLI::App* app, Flags& flags, const std::string& name, const std::string& key,
                    const std::string& help) {
    app->add_option_function<std::string>(
        name, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
}

void add_common_flags(CLI::App* app, Flags& flags) {
    app->add_option_function<std::string>(
        "--config", [&flags](const std::string& v) { flags.config_file = v; },
        "key = value config file");
    add_value_flag(app, flags, "--dim", "dim", "feature dimension (power of two)");
    add_value_flag(app, flags, "--mode", "mode", "exact|sampled|analytic");
    add_value_flag(app, flags, "--shots", "shots", "shots for sampled mode");
    add_value_flag(app, flags, "--seed", "seed", "base seed (overrides QFACE_SEED)");
    add_value_flag(app, flags, "--threshold-start", "threshold_start", "first sweep threshold");
    add_value_flag(app, flags, "--threshold-step", "threshold_step", "sweep step");
    add_value_flag(app, flags, "--threshold-end", "threshold_end", "last sweep threshold");
    add_value_flag(app, flags, "--face-dir", "face_dir", "directory of face PGMs");
    add_value_flag(app, flags, "--nonface-dir", "nonface_dir", "directory of non-face PGMs");
    add_value_flag(app, flags, "--nonface-synthetic", "nonface_synthetic",
                   "synthetic non-face count when no directory is given");
    add_value_flag(app, flags, "--train-n", "train_n", "faces used to build the template");
    add_value_flag(app, flags, "--train-nonface-n", "train_nonface_n",
                   "non-faces in the compare training split");
    add_value_flag(app, flags, "--test-nonface-n", "test_nonface_n",
                   "cap on sweep test non-faces (0 = all)");
    add_value_flag(app, flags, "--manifest", "manifest", "rebuild the split from a manifest");
    add_value_flag(app, flags, "--square", "square", "crop|squash");
    app->add_option_function<std::string>(
        "--out",
        [&flags](const std::string& v) {
            flags.values["out"] = v;
            flags.out_given = true;
        },
        "output directory");
}

ConfigPtr build_config(const Flags& flags) {
    qf_config* raw = nullptr;
    check(qf_config_create(&raw));
    ConfigPtr cfg(raw);
    if (const char* env = std::getenv("QFACE_SEED"); env && *env) {
        check(qf_config_set(cfg.get(), "seed", env));
    }
    if (flags.config_file) check(qf_config_load_file(cfg.get(), flags.config_file->c_str()));
    for (const auto& [key, value] : flags.values) check(qf_config_set(cfg.get(), key.c_str(), value.c_str()));
    check(qf_config_validate(cfg.get()));
    return cfg;
}

std::string prepare_out(const qf_config* cfg) {
    const std::string out = get(cfg, "out");
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create %s: %s\n", out.c_str(), ec.message().c_str());
        throw Failure{QF_ERR_IO};
    }
    check(qf_config_write_file(cfg, (std::filesystem::path(out) / "effective.config").c_str()));
    return out;
}

const char* mode_name(qf_mode m) {
    switch (m) {
        case QF_MODE_ANALYTIC: return "analytic";
        case QF_MODE_SAMPLED: return "sampled";
        default: return "exact";
    }
}

template <typename Getter>
std::string text_of(Getter g) {
    const size_t n = g(nullptr, 0);
    std::string out(n, '\0');
    g(out.data(), n + 1);
    return out;
}

int cmd_fidelity(const Flags& flags, const std::string& a, const std::string& b) {
    auto cfg = build_config(flags);
    qf_fidelity f{};
    check(qf_fidelity_images(cfg.get(), a.c_str(), b.c_str(), &f));
    std::printf("fidelity  %.6f\nmethod    %s\nshots     %llu\nstd_error %.6f\n", f.value,
                mode_name(f.method), static_cast<unsigned long long>(f.shots), f.std_error);
    if (flags.out_given) prepare_out(cfg.get());
    return kExitOk;
}

int cmd_sweep(const Flags& flags) {
    auto cfg = build_config(flags);
    const std::string out = prepare_out(cfg.get());
    qf_sweep* sweep = nullptr;
    check(qf_sweep_run(cfg.get(), &sweep));
    std::unique_ptr<qf_sweep, void (*)(qf_sweep*)> guard(sweep, qf_sweep_destroy);
    check(qf_sweep_write(sweep, out.c_str()));
    std::fputs(text_of([&](char* buf, size_t cap) { return qf_sweep_table(sweep, buf, cap); }).c_str(),
               stdout);
    double mf = 0, mn = 0;
    size_t train = 0, tf = 0, tn = 0;
    check(qf_sweep_means(sweep, &mf, &mn));
    check(qf_sweep_split_sizes(sweep, &train, &tf, &tn));
    std::printf("split: %zu template faces, %zu test faces, %zu test non-faces (square=%s)\n", train,
                tf, tn, get(cfg.get(), "square").c_str());
    std::printf("mean fidelity: face %.6f, non-face %.6f\n", mf, mn);
    return kExitOk;
}

int cmd_table1(const Flags& flags) {
    auto cfg = build_config(flags);
    const std::string out = prepare_out(cfg.get());
    qf_table1* table = nullptr;
    check(qf_table1_run(cfg.get(), &table));
    std::unique_ptr<qf_table1, void (*)(qf_table1*)> guard(table, qf_table1_destroy);
    check(qf_table1_write(table, out.c_str()));
    std::fputs(text_of([&](char* buf, size_t cap) { return qf_table1_table(table, buf, cap); }).c_str(),
               stdout);
    return kExitOk;
}

int cmd_compare(const Flags& flags) {
    auto cfg = build_config(flags);
    const std::string out = prepare_out(cfg.get());
    qf_compare* cmp = nullptr;
    check(qf_compare_run(cfg.get(), &cmp));
    std::unique_ptr<qf_compare, void (*)(qf_compare*)> guard(cmp, qf_compare_destroy);
    check(qf_compare_write(cmp, out.c_str()));
    std::printf("%-10s %-9s %s\n", "algorithm", "accuracy", "detail");
    for (size_t i = 0; i < qf_compare_row_count(cmp); ++i) {
        qf_compare_row row{};
        check(qf_compare_row_at(cmp, i, &row));
        std::printf("%-10s %.6f  %s\n", row.algorithm, row.accuracy, row.detail);
    }
    return kExitOk;
}

int cmd_bench(const Flags& flags) {
    auto cfg = build_config(flags);
    const std::string out = prepare_out(cfg.get());
    qf_bench* bench = nullptr;
    check(qf_bench_run(cfg.get(), &bench));
    std::unique_ptr<qf_bench, void (*)(qf_bench*)> guard(bench, qf_bench_destroy);
    check(qf_bench_write(bench, out.c_str()));
    std::printf("%-9s %5s %8s %16s\n", "path", "dim", "samples", "median_seconds");
    for (size_t i = 0; i < qf_bench_row_count(bench); ++i) {
        qf_bench_row row{};
        check(qf_bench_row_at(bench, i, &row));
        std::printf("%-9s %5zu %8zu %16.9e\n", row.path, row.dim, row.samples, row.median_seconds);
    }
    if (qf_bench_resolution_warning(bench)) {
        std::fprintf(stderr,
                     "warning: some medians are below 1 ms; timings near timer resolution\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qface: swap-test face/non-face classification on a state-vector simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qf_version());

    Flags flags;
    std::string image_a, image_b;

    auto* fid = app.add_subcommand("fidelity", "fidelity between two PGM images");
    fid->add_option("image_a", image_a, "first PGM")->required();
    fid->add_option("image_b", image_b, "second PGM")->required();
    auto* sweep = app.add_subcommand("sweep", "threshold sweep on the test split");
    auto* table1 = app.add_subcommand("table1", "mean fidelities per input size");
    auto* compare = app.add_subcommand("compare", "swap test vs k-NN vs SVM");
    auto* bench = app.add_subcommand("bench", "analytic vs circuit timing");
    for (auto* sub : {fid, sweep, table1, compare, bench}) add_common_flags(sub, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*fid) return cmd_fidelity(flags, image_a, image_b);
        if (*sweep) return cmd_sweep(flags);
        if (*table1) return cmd_table1(flags);
        if (*compare) return cmd_compare(flags);
        if (*bench) return cmd_bench(flags);
    } catch (const Failure& f) {
        if (f.status != QF_OK && *qf_last_error()) {
            std::fprintf(stderr, "error (%s): %s\n", qf_status_name(f.status), qf_last_error());
        }
        return exit_code_of(f.status);
    }
    return kExitInternal;
}

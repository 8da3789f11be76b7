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

#include "qface/qface.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "qface/commands.hpp"
#include "qface/config.hpp"
#include "qface/encoding.hpp"
#include "qface/error.hpp"
#include "qface/qsim.hpp"
#include "qface/swaptest.hpp"

using namespace qface;

struct qf_register {
    qsim::QuantumRegister rep;
};
struct qf_config {
    app::RunConfig rep;
};
struct qf_sweep {
    app::SweepRun rep;
};
struct qf_table1 {
    std::vector<app::Table1Row> rep;
};
struct qf_compare {
    app::CompareRun rep;
};
struct qf_bench {
    app::BenchReport rep;
};

namespace {

thread_local std::string g_last_error;

qf_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return QF_ERR_INVALID_ARGUMENT;
        case ErrorCode::OutOfRange: return QF_ERR_OUT_OF_RANGE;
        case ErrorCode::Io: return QF_ERR_IO;
        case ErrorCode::Parse: return QF_ERR_PARSE;
        case ErrorCode::Data: return QF_ERR_DATA;
        case ErrorCode::Config: return QF_ERR_CONFIG;
        case ErrorCode::Internal: return QF_ERR_INTERNAL;
    }
    return QF_ERR_INTERNAL;
}

template <typename F>
qf_status guarded(F&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        return QF_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return QF_ERR_OUT_OF_RANGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QF_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown exception";
        return QF_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    require(p != nullptr, ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

size_t copy_text(const std::string& text, char* buf, size_t cap) {
    if (buf && cap > 0) {
        const size_t n = std::min(cap - 1, text.size());
        std::memcpy(buf, text.data(), n);
        buf[n] = '\0';
    }
    return text.size();
}

template <size_t N>
void copy_fixed(const std::string& text, char (&dst)[N]) {
    copy_text(text, dst, N);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), ErrorCode::Io, "cannot write " + path.string());
    f << text;
    f.flush();
    require(static_cast<bool>(f), ErrorCode::Io, "write error on " + path.string());
}

std::filesystem::path prepare_dir(const char* out_dir) {
    need(out_dir, "out_dir");
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    require(!ec, ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
    return dir;
}

encoding::UnitFeatureVector unit_from(const double* v, size_t dim) {
    need(v, "vector");
    return encoding::UnitFeatureVector::from_unit(std::vector<double>(v, v + dim));
}

swaptest::EstimatorMode mode_from(qf_mode mode) {
    switch (mode) {
        case QF_MODE_EXACT: return swaptest::EstimatorMode::CircuitExact;
        case QF_MODE_ANALYTIC: return swaptest::EstimatorMode::Analytic;
        case QF_MODE_SAMPLED: return swaptest::EstimatorMode::Sampled;
    }
    fail(ErrorCode::InvalidArgument, "unknown estimator mode");
}

qf_fidelity to_c(const swaptest::FidelityEstimate& e) {
    qf_fidelity out{};
    out.value = e.value;
    out.method = e.method == swaptest::EstimatorMode::Analytic  ? QF_MODE_ANALYTIC
                 : e.method == swaptest::EstimatorMode::Sampled ? QF_MODE_SAMPLED
                                                                : QF_MODE_EXACT;
    out.shots = e.shots;
    out.std_error = e.std_error;
    return out;
}

void check_index(size_t index, size_t count) {
    require(index < count, ErrorCode::OutOfRange,
            "index " + std::to_string(index) + " >= " + std::to_string(count));
}

}  // namespace

extern "C" {

const char* qf_status_name(qf_status status) {
    switch (status) {
        case QF_OK: return "ok";
        case QF_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QF_ERR_OUT_OF_RANGE: return "out of range";
        case QF_ERR_IO: return "i/o error";
        case QF_ERR_PARSE: return "parse error";
        case QF_ERR_DATA: return "data error";
        case QF_ERR_CONFIG: return "configuration error";
        case QF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* qf_last_error(void) { return g_last_error.c_str(); }

const char* qf_version(void) { return "1.0.0"; }

// ---- registers -------------------------------------------------------------

qf_status qf_register_create(int num_qubits, qf_register** out) {
    return guarded([&] {
        need(out, "out");
        *out = new qf_register{qsim::new_register(num_qubits)};
    });
}

qf_status qf_register_from_amplitudes(const double* re, const double* im, size_t count,
                                      qf_register** out) {
    return guarded([&] {
        need(re, "re");
        need(out, "out");
        std::vector<qsim::Amplitude> amps(count);
        for (size_t i = 0; i < count; ++i) amps[i] = {re[i], im ? im[i] : 0.0};
        *out = new qf_register{qsim::QuantumRegister::from_amplitudes(std::move(amps))};
    });
}

qf_status qf_register_clone(const qf_register* reg, qf_register** out) {
    return guarded([&] {
        need(reg, "reg");
        need(out, "out");
        *out = new qf_register{reg->rep};
    });
}

void qf_register_destroy(qf_register* reg) { delete reg; }

int qf_register_num_qubits(const qf_register* reg) { return reg ? reg->rep.num_qubits() : 0; }

size_t qf_register_size(const qf_register* reg) { return reg ? reg->rep.size() : 0; }

qf_status qf_register_amplitude(const qf_register* reg, size_t index, double* re, double* im) {
    return guarded([&] {
        need(reg, "reg");
        check_index(index, reg->rep.size());
        const auto a = reg->rep[index];
        if (re) *re = a.real();
        if (im) *im = a.imag();
    });
}

qf_status qf_register_tensor(const qf_register* a, const qf_register* b, qf_register** out) {
    return guarded([&] {
        need(a, "a");
        need(b, "b");
        need(out, "out");
        *out = new qf_register{qsim::tensor_product(a->rep, b->rep)};
    });
}

qf_status qf_register_hadamard(qf_register* reg, int qubit) {
    return guarded([&] {
        need(reg, "reg");
        reg->rep = qsim::apply_hadamard(reg->rep, qubit);
    });
}

qf_status qf_register_cswap(qf_register* reg, int control, int target_a, int target_b) {
    return guarded([&] {
        need(reg, "reg");
        reg->rep = qsim::apply_controlled_swap(reg->rep, control, target_a, target_b);
    });
}

qf_status qf_register_probability_zero(const qf_register* reg, int qubit, double* out) {
    return guarded([&] {
        need(reg, "reg");
        need(out, "out");
        *out = qsim::probability_zero(reg->rep, qubit);
    });
}

qf_status qf_register_sample(const qf_register* reg, int qubit, uint64_t shots, uint64_t seed,
                             uint64_t* zero_count) {
    return guarded([&] {
        need(reg, "reg");
        need(zero_count, "zero_count");
        *zero_count = qsim::sample_ancilla(reg->rep, qubit, shots, seed);
    });
}

// ---- encoding --------------------------------------------------------------

qf_status qf_normalize(const double* values, size_t dim, double* out) {
    return guarded([&] {
        need(values, "values");
        need(out, "out");
        const auto unit =
            encoding::normalize(encoding::FeatureVector(std::vector<double>(values, values + dim)));
        std::copy(unit.values().begin(), unit.values().end(), out);
    });
}

qf_status qf_amplitude_encode(const double* values, size_t dim, qf_register** out) {
    return guarded([&] {
        need(out, "out");
        *out = new qf_register{encoding::amplitude_encode(unit_from(values, dim))};
    });
}

qf_status qf_basis_encode(const char* bits, qf_register** out) {
    return guarded([&] {
        need(bits, "bits");
        need(out, "out");
        *out = new qf_register{encoding::basis_encode(bits)};
    });
}

qf_status qf_required_qubits(size_t dim, int* out) {
    return guarded([&] {
        need(out, "out");
        *out = encoding::required_qubits(dim);
    });
}

// ---- swap test -------------------------------------------------------------

qf_status qf_swap_test_state(const qf_register* psi, const qf_register* phi, qf_register** out) {
    return guarded([&] {
        need(psi, "psi");
        need(phi, "phi");
        need(out, "out");
        *out = new qf_register{swaptest::build_swap_test_state(psi->rep, phi->rep)};
    });
}

qf_status qf_fidelity_from_p0(double p0, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = swaptest::fidelity_from_p0(p0);
    });
}

qf_status qf_estimate_fidelity(const double* psi, const double* phi, size_t dim, qf_mode mode,
                               uint64_t shots, uint64_t seed, qf_fidelity* out) {
    return guarded([&] {
        need(out, "out");
        *out = to_c(swaptest::estimate_fidelity(unit_from(psi, dim), unit_from(phi, dim),
                                                mode_from(mode), shots, seed));
    });
}

// ---- configuration ---------------------------------------------------------

qf_status qf_config_create(qf_config** out) {
    return guarded([&] {
        need(out, "out");
        *out = new qf_config{};
    });
}

void qf_config_destroy(qf_config* cfg) { delete cfg; }

qf_status qf_config_set(qf_config* cfg, const char* key, const char* value) {
    return guarded([&] {
        need(cfg, "cfg");
        need(key, "key");
        need(value, "value");
        app::set_key(cfg->rep, key, value);
    });
}

qf_status qf_config_get(const qf_config* cfg, const char* key, char* buf, size_t cap,
                        size_t* length) {
    return guarded([&] {
        need(cfg, "cfg");
        need(key, "key");
        const size_t n = copy_text(app::get_key(cfg->rep, key), buf, cap);
        if (length) *length = n;
    });
}

qf_status qf_config_load_file(qf_config* cfg, const char* path) {
    return guarded([&] {
        need(cfg, "cfg");
        need(path, "path");
        app::apply_config_file(cfg->rep, path);
    });
}

qf_status qf_config_validate(const qf_config* cfg) {
    return guarded([&] {
        need(cfg, "cfg");
        app::validate(cfg->rep);
    });
}

qf_status qf_config_write_file(const qf_config* cfg, const char* path) {
    return guarded([&] {
        need(cfg, "cfg");
        need(path, "path");
        write_text(path, app::to_config_text(cfg->rep));
    });
}

size_t qf_config_key_count(void) { return app::config_keys().size(); }

const char* qf_config_key_name(size_t index) {
    const auto& keys = app::config_keys();
    return index < keys.size() ? keys[index].c_str() : nullptr;
}

// ---- commands --------------------------------------------------------------

qf_status qf_fidelity_images(const qf_config* cfg, const char* path_a, const char* path_b,
                             qf_fidelity* out) {
    return guarded([&] {
        need(cfg, "cfg");
        need(path_a, "path_a");
        need(path_b, "path_b");
        need(out, "out");
        *out = to_c(app::fidelity_images(cfg->rep, path_a, path_b));
    });
}

qf_status qf_sweep_run(const qf_config* cfg, qf_sweep** out) {
    return guarded([&] {
        need(cfg, "cfg");
        need(out, "out");
        *out = new qf_sweep{app::run_sweep(cfg->rep)};
    });
}

void qf_sweep_destroy(qf_sweep* sweep) { delete sweep; }

size_t qf_sweep_row_count(const qf_sweep* sweep) {
    return sweep ? sweep->rep.report.rows.size() : 0;
}

qf_status qf_sweep_row_at(const qf_sweep* sweep, size_t index, qf_sweep_row* out) {
    return guarded([&] {
        need(sweep, "sweep");
        need(out, "out");
        check_index(index, sweep->rep.report.rows.size());
        const auto& r = sweep->rep.report.rows[index];
        *out = qf_sweep_row{r.threshold, r.tp, r.fp, r.tn, r.fn, r.accuracy};
    });
}

qf_status qf_sweep_best(const qf_sweep* sweep, double* threshold, double* accuracy) {
    return guarded([&] {
        need(sweep, "sweep");
        if (threshold) *threshold = sweep->rep.report.best_threshold;
        if (accuracy) *accuracy = sweep->rep.report.best_accuracy;
    });
}

qf_status qf_sweep_means(const qf_sweep* sweep, double* mean_face, double* mean_nonface) {
    return guarded([&] {
        need(sweep, "sweep");
        if (mean_face) *mean_face = sweep->rep.averages.mean_face;
        if (mean_nonface) *mean_nonface = sweep->rep.averages.mean_nonface;
    });
}

qf_status qf_sweep_split_sizes(const qf_sweep* sweep, size_t* train_faces, size_t* test_faces,
                               size_t* test_nonfaces) {
    return guarded([&] {
        need(sweep, "sweep");
        if (train_faces) *train_faces = sweep->rep.split.train_faces.size();
        if (test_faces) *test_faces = sweep->rep.split.test_faces.size();
        if (test_nonfaces) *test_nonfaces = sweep->rep.split.test_nonfaces.size();
    });
}

size_t qf_sweep_table(const qf_sweep* sweep, char* buf, size_t cap) {
    if (!sweep) return 0;
    return copy_text(classifier::sweep_to_table(sweep->rep.report), buf, cap);
}

qf_status qf_sweep_write(const qf_sweep* sweep, const char* out_dir) {
    return guarded([&] {
        need(sweep, "sweep");
        const auto dir = prepare_dir(out_dir);
        write_text(dir / "sweep.csv", classifier::sweep_to_csv(sweep->rep.report));
        write_text(dir / "sweep.txt", classifier::sweep_to_table(sweep->rep.report));
        write_text(dir / "split.manifest", dataio::split_manifest(sweep->rep.split));
    });
}

qf_status qf_table1_run(const qf_config* cfg, qf_table1** out) {
    return guarded([&] {
        need(cfg, "cfg");
        need(out, "out");
        *out = new qf_table1{app::run_table1(cfg->rep)};
    });
}

void qf_table1_destroy(qf_table1* table) { delete table; }

size_t qf_table1_row_count(const qf_table1* table) { return table ? table->rep.size() : 0; }

qf_status qf_table1_row_at(const qf_table1* table, size_t index, qf_table1_row* out) {
    return guarded([&] {
        need(table, "table");
        need(out, "out");
        check_index(index, table->rep.size());
        const auto& r = table->rep[index];
        *out = qf_table1_row{r.qubits, r.dim, r.mean_face, r.mean_nonface};
    });
}

size_t qf_table1_table(const qf_table1* table, char* buf, size_t cap) {
    if (!table) return 0;
    return copy_text(app::table1_to_table(table->rep), buf, cap);
}

qf_status qf_table1_write(const qf_table1* table, const char* out_dir) {
    return guarded([&] {
        need(table, "table");
        const auto dir = prepare_dir(out_dir);
        write_text(dir / "table1.csv", app::table1_to_csv(table->rep));
    });
}

qf_status qf_compare_run(const qf_config* cfg, qf_compare** out) {
    return guarded([&] {
        need(cfg, "cfg");
        need(out, "out");
        *out = new qf_compare{app::run_compare(cfg->rep)};
    });
}

void qf_compare_destroy(qf_compare* cmp) { delete cmp; }

size_t qf_compare_row_count(const qf_compare* cmp) {
    return cmp ? cmp->rep.report.rows.size() : 0;
}

qf_status qf_compare_row_at(const qf_compare* cmp, size_t index, qf_compare_row* out) {
    return guarded([&] {
        need(cmp, "cmp");
        need(out, "out");
        check_index(index, cmp->rep.report.rows.size());
        const auto& r = cmp->rep.report.rows[index];
        qf_compare_row row{};
        copy_fixed(r.algorithm, row.algorithm);
        row.accuracy = r.accuracy;
        copy_fixed(r.detail, row.detail);
        *out = row;
    });
}

size_t qf_compare_knn_count(const qf_compare* cmp) {
    return cmp ? cmp->rep.report.knn_by_k.size() : 0;
}

qf_status qf_compare_knn_at(const qf_compare* cmp, size_t index, size_t* k, double* accuracy) {
    return guarded([&] {
        need(cmp, "cmp");
        check_index(index, cmp->rep.report.knn_by_k.size());
        const auto& r = cmp->rep.report.knn_by_k[index];
        if (k) *k = r.k;
        if (accuracy) *accuracy = r.accuracy;
    });
}

qf_status qf_compare_write(const qf_compare* cmp, const char* out_dir) {
    return guarded([&] {
        need(cmp, "cmp");
        const auto dir = prepare_dir(out_dir);
        write_text(dir / "compare.csv", baselines::compare_to_csv(cmp->rep.report));
        write_text(dir / "knn_k.csv", baselines::knn_to_csv(cmp->rep.report));
        write_text(dir / "split.manifest", dataio::split_manifest(cmp->rep.split));
    });
}

qf_status qf_bench_run(const qf_config* cfg, qf_bench** out) {
    return guarded([&] {
        need(cfg, "cfg");
        need(out, "out");
        *out = new qf_bench{app::run_bench(cfg->rep)};
    });
}

void qf_bench_destroy(qf_bench* bench) { delete bench; }

size_t qf_bench_row_count(const qf_bench* bench) { return bench ? bench->rep.rows.size() : 0; }

qf_status qf_bench_row_at(const qf_bench* bench, size_t index, qf_bench_row* out) {
    return guarded([&] {
        need(bench, "bench");
        need(out, "out");
        check_index(index, bench->rep.rows.size());
        const auto& r = bench->rep.rows[index];
        qf_bench_row row{};
        copy_fixed(r.path, row.path);
        row.dim = r.dim;
        row.samples = r.samples;
        row.median_seconds = r.median_seconds;
        *out = row;
    });
}

int qf_bench_resolution_warning(const qf_bench* bench) {
    return bench && bench->rep.resolution_warning ? 1 : 0;
}

qf_status qf_bench_write(const qf_bench* bench, const char* out_dir) {
    return guarded([&] {
        need(bench, "bench");
        const auto dir = prepare_dir(out_dir);
        write_text(dir / "bench.csv", app::bench_to_csv(bench->rep));
    });
}

}  // extern "C"

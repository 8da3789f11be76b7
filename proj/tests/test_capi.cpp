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

// Exercises the shared library through its C header only.

#include "qface/qface.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const fs::path kData = QFACE_TEST_DATA;

std::string get(const qf_config* cfg, const char* key) {
    size_t n = 0;
    REQUIRE(qf_config_get(cfg, key, nullptr, 0, &n) == QF_OK);
    std::string out(n + 1, '\0');
    REQUIRE(qf_config_get(cfg, key, out.data(), out.size(), nullptr) == QF_OK);
    out.resize(n);
    return out;
}

std::vector<double> unit(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    double s = 0;
    for (auto& x : v) {
        x = g(rng);
        s += x * x;
    }
    for (auto& x : v) x /= std::sqrt(s);
    return v;
}

fs::path scratch(const char* tag) {
    auto p = fs::temp_directory_path() / (std::string("qface_capi_") + tag);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(qf_status_name(QF_OK)) == "ok");
    CHECK(std::string(qf_status_name(QF_ERR_CONFIG)) == "configuration error");
    CHECK(std::string(qf_status_name(static_cast<qf_status>(99))) == "unknown status");
    CHECK(std::string(qf_version()) == "1.0.0");
}

TEST_CASE("errors set the thread message and success clears it") {
    qf_register* reg = nullptr;
    CHECK(qf_register_create(25, &reg) == QF_ERR_OUT_OF_RANGE);
    CHECK(reg == nullptr);
    CHECK(std::strlen(qf_last_error()) > 0);
    CHECK(qf_register_create(3, &reg) == QF_OK);
    CHECK(std::string(qf_last_error()).empty());
    qf_register_destroy(reg);

    CHECK(qf_register_create(3, nullptr) == QF_ERR_INVALID_ARGUMENT);
    CHECK(qf_register_hadamard(nullptr, 0) == QF_ERR_INVALID_ARGUMENT);
    qf_register_destroy(nullptr);
    qf_config_destroy(nullptr);
    qf_sweep_destroy(nullptr);
    qf_table1_destroy(nullptr);
    qf_compare_destroy(nullptr);
    qf_bench_destroy(nullptr);
}

TEST_CASE("register operations") {
    qf_register* reg = nullptr;
    REQUIRE(qf_register_create(2, &reg) == QF_OK);
    CHECK(qf_register_num_qubits(reg) == 2);
    CHECK(qf_register_size(reg) == 4);
    REQUIRE(qf_register_hadamard(reg, 1) == QF_OK);
    double re = 0, im = 0;
    REQUIRE(qf_register_amplitude(reg, 2, &re, &im) == QF_OK);
    CHECK(std::abs(re - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(im == 0.0);
    CHECK(qf_register_amplitude(reg, 4, &re, &im) == QF_ERR_OUT_OF_RANGE);
    double p0 = 0;
    REQUIRE(qf_register_probability_zero(reg, 1, &p0) == QF_OK);
    CHECK(std::abs(p0 - 0.5) < 1e-15);
    uint64_t zeros = 0;
    REQUIRE(qf_register_sample(reg, 0, 100, 1, &zeros) == QF_OK);
    CHECK(zeros == 100);
    CHECK(qf_register_cswap(reg, 0, 0, 1) == QF_ERR_INVALID_ARGUMENT);
    CHECK(qf_register_hadamard(reg, 2) == QF_ERR_OUT_OF_RANGE);

    qf_register* copy = nullptr;
    REQUIRE(qf_register_clone(reg, &copy) == QF_OK);
    qf_register* joint = nullptr;
    REQUIRE(qf_register_tensor(reg, copy, &joint) == QF_OK);
    CHECK(qf_register_num_qubits(joint) == 4);
    qf_register_destroy(joint);
    qf_register_destroy(copy);
    qf_register_destroy(reg);

    const double bad[3] = {1, 0, 0};
    CHECK(qf_register_from_amplitudes(bad, nullptr, 3, &reg) == QF_ERR_INVALID_ARGUMENT);
    const double half[2] = {0.5, 0.5};
    CHECK(qf_register_from_amplitudes(half, nullptr, 2, &reg) == QF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("encoding and swap test") {
    const double raw[4] = {1, 2, 3, 4};
    double u[4];
    REQUIRE(qf_normalize(raw, 4, u) == QF_OK);
    CHECK(std::abs(u[3] - 4 / std::sqrt(30.0)) < 1e-15);
    const double zero[4] = {0, 0, 0, 0};
    CHECK(qf_normalize(zero, 4, u) == QF_ERR_INVALID_ARGUMENT);

    int q = 0;
    REQUIRE(qf_required_qubits(64, &q) == QF_OK);
    CHECK(q == 13);
    CHECK(qf_required_qubits(48, &q) != QF_OK);

    qf_register* a = nullptr;
    qf_register* b = nullptr;
    REQUIRE(qf_basis_encode("0", &a) == QF_OK);
    REQUIRE(qf_basis_encode("1", &b) == QF_OK);
    CHECK(qf_basis_encode("012", &a) == QF_ERR_INVALID_ARGUMENT);
    qf_register* st = nullptr;
    REQUIRE(qf_swap_test_state(a, b, &st) == QF_OK);
    CHECK(qf_register_num_qubits(st) == 3);
    double p0 = 0, f = -1;
    REQUIRE(qf_register_probability_zero(st, 2, &p0) == QF_OK);
    REQUIRE(qf_fidelity_from_p0(p0, &f) == QF_OK);
    CHECK(std::abs(f) < 1e-12);
    CHECK(qf_fidelity_from_p0(1.5, &f) == QF_ERR_INVALID_ARGUMENT);
    qf_register_destroy(st);
    qf_register_destroy(a);
    qf_register_destroy(b);

    const auto psi = unit(16, 1), phi = unit(16, 2);
    double overlap = 0;
    for (std::size_t i = 0; i < 16; ++i) overlap += psi[i] * phi[i];
    qf_fidelity exact{}, analytic{}, sampled{};
    REQUIRE(qf_estimate_fidelity(psi.data(), phi.data(), 16, QF_MODE_EXACT, 0, 0, &exact) == QF_OK);
    REQUIRE(qf_estimate_fidelity(psi.data(), phi.data(), 16, QF_MODE_ANALYTIC, 0, 0, &analytic) ==
            QF_OK);
    REQUIRE(qf_estimate_fidelity(psi.data(), phi.data(), 16, QF_MODE_SAMPLED, 4096, 3, &sampled) ==
            QF_OK);
    CHECK(std::abs(exact.value - overlap * overlap) < 1e-10);
    CHECK(std::abs(analytic.value - overlap * overlap) < 1e-12);
    CHECK(exact.method == QF_MODE_EXACT);
    CHECK(sampled.method == QF_MODE_SAMPLED);
    CHECK(sampled.shots == 4096);
    CHECK(sampled.std_error > 0.0);
    CHECK(qf_estimate_fidelity(psi.data(), phi.data(), 16, QF_MODE_SAMPLED, 0, 3, &sampled) ==
          QF_ERR_INVALID_ARGUMENT);
    CHECK(qf_estimate_fidelity(psi.data(), phi.data(), 16, static_cast<qf_mode>(9), 0, 0,
                               &sampled) == QF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config get/set follows snprintf") {
    qf_config* cfg = nullptr;
    REQUIRE(qf_config_create(&cfg) == QF_OK);
    CHECK(get(cfg, "dim") == "64");
    REQUIRE(qf_config_set(cfg, "face_dir", "/some/long/directory/name") == QF_OK);
    char small[5];
    size_t n = 0;
    REQUIRE(qf_config_get(cfg, "face_dir", small, sizeof small, &n) == QF_OK);
    CHECK(n == std::strlen("/some/long/directory/name"));
    CHECK(std::string(small) == "/som");
    CHECK(qf_config_set(cfg, "dimm", "64") == QF_ERR_CONFIG);
    CHECK(qf_config_set(cfg, "dim", "abc") == QF_ERR_CONFIG);
    REQUIRE(qf_config_set(cfg, "dim", "48") == QF_OK);
    CHECK(qf_config_validate(cfg) == QF_ERR_CONFIG);
    REQUIRE(qf_config_set(cfg, "dim", "16") == QF_OK);
    CHECK(qf_config_validate(cfg) == QF_OK);

    CHECK(qf_config_key_count() > 20);
    for (size_t i = 0; i < qf_config_key_count(); ++i) CHECK(qf_config_key_name(i) != nullptr);
    CHECK(qf_config_key_name(qf_config_key_count()) == nullptr);

    const auto dir = scratch("config");
    fs::create_directories(dir);
    const auto path = (dir / "run.config").string();
    REQUIRE(qf_config_write_file(cfg, path.c_str()) == QF_OK);
    qf_config* back = nullptr;
    REQUIRE(qf_config_create(&back) == QF_OK);
    REQUIRE(qf_config_load_file(back, path.c_str()) == QF_OK);
    for (size_t i = 0; i < qf_config_key_count(); ++i) {
        const char* key = qf_config_key_name(i);
        CHECK(get(back, key) == get(cfg, key));
    }
    CHECK(qf_config_load_file(back, (dir / "missing").string().c_str()) == QF_ERR_CONFIG);
    qf_config_destroy(back);
    qf_config_destroy(cfg);
    fs::remove_all(dir);
}

TEST_CASE("sweep, table1 and compare through handles") {
    qf_config* cfg = nullptr;
    REQUIRE(qf_config_create(&cfg) == QF_OK);
    const auto faces = (kData / "lfw_subset" / "faces").string();
    const auto objects = (kData / "lfw_subset" / "nonfaces").string();
    REQUIRE(qf_config_set(cfg, "face_dir", faces.c_str()) == QF_OK);
    REQUIRE(qf_config_set(cfg, "train_n", "60") == QF_OK);
    REQUIRE(qf_config_set(cfg, "nonface_synthetic", "40") == QF_OK);

    qf_sweep* sweep = nullptr;
    REQUIRE(qf_sweep_run(cfg, &sweep) == QF_OK);
    CHECK(qf_sweep_row_count(sweep) == 31);
    qf_sweep_row row{};
    REQUIRE(qf_sweep_row_at(sweep, 0, &row) == QF_OK);
    CHECK(row.threshold == doctest::Approx(0.70));
    CHECK(row.tp + row.fp + row.tn + row.fn == 80);
    CHECK(qf_sweep_row_at(sweep, 31, &row) == QF_ERR_OUT_OF_RANGE);
    double t = 0, acc = 0, mf = 0, mn = 0;
    REQUIRE(qf_sweep_best(sweep, &t, &acc) == QF_OK);
    CHECK(acc > 0.5);
    REQUIRE(qf_sweep_means(sweep, &mf, &mn) == QF_OK);
    CHECK(mf > mn);
    size_t tf = 0, tef = 0, ten = 0;
    REQUIRE(qf_sweep_split_sizes(sweep, &tf, &tef, &ten) == QF_OK);
    CHECK(tf == 60);
    CHECK(tef == 40);
    CHECK(ten == 40);
    const size_t len = qf_sweep_table(sweep, nullptr, 0);
    CHECK(len > 0);
    std::string table(len + 1, '\0');
    CHECK(qf_sweep_table(sweep, table.data(), table.size()) == len);
    CHECK(table.find("best threshold") != std::string::npos);

    const auto dir = scratch("runs");
    REQUIRE(qf_sweep_write(sweep, dir.string().c_str()) == QF_OK);
    CHECK(fs::exists(dir / "sweep.csv"));
    CHECK(fs::exists(dir / "sweep.txt"));
    CHECK(fs::exists(dir / "split.manifest"));
    qf_sweep_destroy(sweep);

    qf_table1* table1 = nullptr;
    REQUIRE(qf_table1_run(cfg, &table1) == QF_OK);
    REQUIRE(qf_table1_row_count(table1) == 3);
    qf_table1_row trow{};
    REQUIRE(qf_table1_row_at(table1, 2, &trow) == QF_OK);
    CHECK(trow.qubits == 17);
    CHECK(trow.dim == 256);
    REQUIRE(qf_table1_write(table1, dir.string().c_str()) == QF_OK);
    CHECK(fs::exists(dir / "table1.csv"));
    qf_table1_destroy(table1);

    REQUIRE(qf_config_set(cfg, "nonface_dir", objects.c_str()) == QF_OK);
    REQUIRE(qf_config_set(cfg, "train_nonface_n", "60") == QF_OK);
    REQUIRE(qf_config_set(cfg, "knn_k_max", "5") == QF_OK);
    REQUIRE(qf_config_set(cfg, "svm_grid", "false") == QF_OK);
    qf_compare* cmp = nullptr;
    REQUIRE(qf_compare_run(cfg, &cmp) == QF_OK);
    REQUIRE(qf_compare_row_count(cmp) == 3);
    qf_compare_row crow{};
    REQUIRE(qf_compare_row_at(cmp, 0, &crow) == QF_OK);
    CHECK(std::string(crow.algorithm) == "svm");
    REQUIRE(qf_compare_row_at(cmp, 2, &crow) == QF_OK);
    CHECK(std::string(crow.algorithm) == "quantum");
    CHECK(std::string(crow.detail).rfind("threshold=", 0) == 0);
    CHECK(qf_compare_knn_count(cmp) == 5);
    size_t k = 0;
    REQUIRE(qf_compare_knn_at(cmp, 4, &k, &acc) == QF_OK);
    CHECK(k == 5);
    CHECK(qf_compare_knn_at(cmp, 5, &k, &acc) == QF_ERR_OUT_OF_RANGE);
    REQUIRE(qf_compare_write(cmp, dir.string().c_str()) == QF_OK);
    CHECK(fs::exists(dir / "compare.csv"));
    CHECK(fs::exists(dir / "knn_k.csv"));
    qf_compare_destroy(cmp);

    qf_config_destroy(cfg);
    fs::remove_all(dir);
}

TEST_CASE("command failures map to status codes") {
    qf_config* cfg = nullptr;
    REQUIRE(qf_config_create(&cfg) == QF_OK);
    qf_sweep* sweep = nullptr;
    CHECK(qf_sweep_run(cfg, &sweep) == QF_ERR_CONFIG);
    CHECK(sweep == nullptr);
    REQUIRE(qf_config_set(cfg, "face_dir", "/nonexistent/faces") == QF_OK);
    CHECK(qf_sweep_run(cfg, &sweep) == QF_ERR_IO);
    CHECK(std::string(qf_last_error()).find("/nonexistent/faces") != std::string::npos);

    const auto bad = scratch("bad");
    fs::create_directories(bad);
    std::ofstream(bad / "broken.pgm") << "P7\n1 1\n255\n";
    qf_fidelity fid{};
    CHECK(qf_fidelity_images(cfg, (bad / "broken.pgm").string().c_str(),
                             (bad / "broken.pgm").string().c_str(), &fid) == QF_ERR_PARSE);
    std::ofstream(bad / "run.config") << "dim = 64\ncolour = blue\n";
    CHECK(qf_config_load_file(cfg, (bad / "run.config").string().c_str()) == QF_ERR_CONFIG);
    CHECK(std::string(qf_last_error()).find("line 2") != std::string::npos);
    fs::remove_all(bad);

    const auto a = (kData / "pgm" / "p2_pair_a.pgm").string();
    REQUIRE(qf_fidelity_images(cfg, a.c_str(), a.c_str(), &fid) == QF_OK);
    CHECK(std::abs(fid.value - 1.0) < 1e-10);
    qf_config_destroy(cfg);
}

TEST_CASE("bench handle") {
    qf_config* cfg = nullptr;
    REQUIRE(qf_config_create(&cfg) == QF_OK);
    REQUIRE(qf_config_set(cfg, "bench_dims", "4,8") == QF_OK);
    REQUIRE(qf_config_set(cfg, "bench_samples", "2") == QF_OK);
    qf_bench* bench = nullptr;
    REQUIRE(qf_bench_run(cfg, &bench) == QF_OK);
    REQUIRE(qf_bench_row_count(bench) == 4);
    qf_bench_row row{};
    REQUIRE(qf_bench_row_at(bench, 3, &row) == QF_OK);
    CHECK(std::string(row.path) == "circuit");
    CHECK(row.dim == 8);
    CHECK(row.median_seconds > 0.0);
    const int warn = qf_bench_resolution_warning(bench);
    CHECK((warn == 0 || warn == 1));
    const auto dir = scratch("bench");
    REQUIRE(qf_bench_write(bench, dir.string().c_str()) == QF_OK);
    CHECK(fs::exists(dir / "bench.csv"));
    qf_bench_destroy(bench);
    qf_config_destroy(cfg);
    fs::remove_all(dir);
}

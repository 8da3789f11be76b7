/*
 * Copyright 2026 The qface Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqface: swap-test face/non-face classification on a dense
 * state-vector simulator, with k-NN/SVM baselines and a benchmark harness.
 *
 * Conventions:
 *  - Every fallible call returns qf_status. On failure, qf_last_error()
 *    returns a message for the calling thread, valid until its next call.
 *  - Handles are opaque; each *_create / *_run has a matching *_destroy,
 *    which accepts NULL.
 *  - Output pointers are written only on QF_OK.
 *  - Text getters follow snprintf: they return the full length and write at
 *    most cap-1 characters plus a terminator.
 */

#ifndef QFACE_QFACE_H
#define QFACE_QFACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QFACE_BUILDING)
#    define QF_API __declspec(dllexport)
#  else
#    define QF_API __declspec(dllimport)
#  endif
#else
#  define QF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf_status {
    QF_OK = 0,
    QF_ERR_INVALID_ARGUMENT = 1,
    QF_ERR_OUT_OF_RANGE = 2,
    QF_ERR_IO = 3,
    QF_ERR_PARSE = 4,
    QF_ERR_DATA = 5,
    QF_ERR_CONFIG = 6,
    QF_ERR_INTERNAL = 7
} qf_status;

QF_API const char* qf_status_name(qf_status status);
QF_API const char* qf_last_error(void);
QF_API const char* qf_version(void);

/* ---- state vectors ------------------------------------------------------ */

typedef struct qf_register qf_register;

QF_API qf_status qf_register_create(int num_qubits, qf_register** out);
/* im may be NULL for a real state. count must be a power of two >= 2. */
QF_API qf_status qf_register_from_amplitudes(const double* re, const double* im, size_t count,
                                             qf_register** out);
QF_API qf_status qf_register_clone(const qf_register* reg, qf_register** out);
QF_API void qf_register_destroy(qf_register* reg);
QF_API int qf_register_num_qubits(const qf_register* reg);
QF_API size_t qf_register_size(const qf_register* reg);
QF_API qf_status qf_register_amplitude(const qf_register* reg, size_t index, double* re,
                                       double* im);
QF_API qf_status qf_register_tensor(const qf_register* a, const qf_register* b,
                                    qf_register** out);
QF_API qf_status qf_register_hadamard(qf_register* reg, int qubit);
QF_API qf_status qf_register_cswap(qf_register* reg, int control, int target_a, int target_b);
QF_API qf_status qf_register_probability_zero(const qf_register* reg, int qubit, double* out);
QF_API qf_status qf_register_sample(const qf_register* reg, int qubit, uint64_t shots,
                                    uint64_t seed, uint64_t* zero_count);

/* ---- encoding ----------------------------------------------------------- */

QF_API qf_status qf_normalize(const double* values, size_t dim, double* out);
/* values must already be unit norm. */
QF_API qf_status qf_amplitude_encode(const double* values, size_t dim, qf_register** out);
QF_API qf_status qf_basis_encode(const char* bits, qf_register** out);
QF_API qf_status qf_required_qubits(size_t dim, int* out);

/* ---- swap test ---------------------------------------------------------- */

typedef enum qf_mode { QF_MODE_EXACT = 0, QF_MODE_ANALYTIC = 1, QF_MODE_SAMPLED = 2 } qf_mode;

typedef struct qf_fidelity {
    double value;
    qf_mode method;
    uint64_t shots;
    double std_error;
} qf_fidelity;

QF_API qf_status qf_swap_test_state(const qf_register* psi, const qf_register* phi,
                                    qf_register** out);
QF_API qf_status qf_fidelity_from_p0(double p0, double* out);
/* psi and phi must be unit norm. */
QF_API qf_status qf_estimate_fidelity(const double* psi, const double* phi, size_t dim,
                                      qf_mode mode, uint64_t shots, uint64_t seed,
                                      qf_fidelity* out);

/* ---- run configuration -------------------------------------------------- */

typedef struct qf_config qf_config;

QF_API qf_status qf_config_create(qf_config** out);
QF_API void qf_config_destroy(qf_config* cfg);
QF_API qf_status qf_config_set(qf_config* cfg, const char* key, const char* value);
QF_API qf_status qf_config_get(const qf_config* cfg, const char* key, char* buf, size_t cap,
                               size_t* length);
/* Applies `key = value` lines from a file on top of the current values. */
QF_API qf_status qf_config_load_file(qf_config* cfg, const char* path);
QF_API qf_status qf_config_validate(const qf_config* cfg);
QF_API qf_status qf_config_write_file(const qf_config* cfg, const char* path);
QF_API size_t qf_config_key_count(void);
QF_API const char* qf_config_key_name(size_t index);

/* ---- commands ----------------------------------------------------------- */

QF_API qf_status qf_fidelity_images(const qf_config* cfg, const char* path_a,
                                    const char* path_b, qf_fidelity* out);

typedef struct qf_sweep qf_sweep;

typedef struct qf_sweep_row {
    double threshold;
    uint64_t tp, fp, tn, fn;
    double accuracy;
} qf_sweep_row;

QF_API qf_status qf_sweep_run(const qf_config* cfg, qf_sweep** out);
QF_API void qf_sweep_destroy(qf_sweep* sweep);
QF_API size_t qf_sweep_row_count(const qf_sweep* sweep);
QF_API qf_status qf_sweep_row_at(const qf_sweep* sweep, size_t index, qf_sweep_row* out);
QF_API qf_status qf_sweep_best(const qf_sweep* sweep, double* threshold, double* accuracy);
QF_API qf_status qf_sweep_means(const qf_sweep* sweep, double* mean_face, double* mean_nonface);
QF_API qf_status qf_sweep_split_sizes(const qf_sweep* sweep, size_t* train_faces,
                                      size_t* test_faces, size_t* test_nonfaces);
QF_API size_t qf_sweep_table(const qf_sweep* sweep, char* buf, size_t cap);
/* Writes sweep.csv, sweep.txt and split.manifest into out_dir (created if needed). */
QF_API qf_status qf_sweep_write(const qf_sweep* sweep, const char* out_dir);

typedef struct qf_table1 qf_table1;

typedef struct qf_table1_row {
    int qubits;
    size_t dim;
    double mean_face;
    double mean_nonface;
} qf_table1_row;

QF_API qf_status qf_table1_run(const qf_config* cfg, qf_table1** out);
QF_API void qf_table1_destroy(qf_table1* table);
QF_API size_t qf_table1_row_count(const qf_table1* table);
QF_API qf_status qf_table1_row_at(const qf_table1* table, size_t index, qf_table1_row* out);
QF_API size_t qf_table1_table(const qf_table1* table, char* buf, size_t cap);
/* Writes table1.csv. */
QF_API qf_status qf_table1_write(const qf_table1* table, const char* out_dir);

typedef struct qf_compare qf_compare;

typedef struct qf_compare_row {
    char algorithm[16];
    double accuracy;
    char detail[64];
} qf_compare_row;

QF_API qf_status qf_compare_run(const qf_config* cfg, qf_compare** out);
QF_API void qf_compare_destroy(qf_compare* cmp);
QF_API size_t qf_compare_row_count(const qf_compare* cmp);
QF_API qf_status qf_compare_row_at(const qf_compare* cmp, size_t index, qf_compare_row* out);
QF_API size_t qf_compare_knn_count(const qf_compare* cmp);
QF_API qf_status qf_compare_knn_at(const qf_compare* cmp, size_t index, size_t* k,
                                   double* accuracy);
/* Writes compare.csv, knn_k.csv and split.manifest. */
QF_API qf_status qf_compare_write(const qf_compare* cmp, const char* out_dir);

typedef struct qf_bench qf_bench;

typedef struct qf_bench_row {
    char path[16];
    size_t dim;
    size_t samples;
    double median_seconds;
} qf_bench_row;

QF_API qf_status qf_bench_run(const qf_config* cfg, qf_bench** out);
QF_API void qf_bench_destroy(qf_bench* bench);
QF_API size_t qf_bench_row_count(const qf_bench* bench);
QF_API qf_status qf_bench_row_at(const qf_bench* bench, size_t index, qf_bench_row* out);
/* Non-zero when some median fell below 1 ms (timer resolution). */
QF_API int qf_bench_resolution_warning(const qf_bench* bench);
/* Writes bench.csv. */
QF_API qf_status qf_bench_write(const qf_bench* bench, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* QFACE_QFACE_H */

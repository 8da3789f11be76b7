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

// Image ingestion and dataset assembly: Netpbm greyscale parsing, square
// cropping, box-filter downscaling, synthetic non-face images and seeded
// train/test splits.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qface/classifier.hpp"
#include "qface/encoding.hpp"
#include "qface/error.hpp"

namespace qface::dataio {

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> pixels;  // row-major, intensities in [0, 1]

    double at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

/// Validates dimensions, pixel count and range.
GrayImage make_image(std::size_t width, std::size_t height, std::vector<double> pixels);

enum class PgmErrorKind { BadMagic, BadHeader, BadMaxval, Truncated, BadSample };

std::string_view to_string(PgmErrorKind kind) noexcept;

class PgmError : public Error {
public:
    PgmError(PgmErrorKind kind, std::size_t offset, const std::string& what);

    PgmErrorKind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    PgmErrorKind kind_;
    std::size_t offset_;
    std::string detail_;
};

/// Parses P2 (ASCII) or P5 (binary) greymaps. Samples are divided by maxval;
/// two-byte big-endian samples are used when maxval > 255.
GrayImage parse_pgm(std::span<const std::uint8_t> bytes);
GrayImage load_pgm(const std::filesystem::path& path);

/// P5 with the given maxval (255 or 65535 typical).
std::vector<std::uint8_t> encode_pgm(const GrayImage& img, unsigned maxval = 255);
void save_pgm(const std::filesystem::path& path, const GrayImage& img, unsigned maxval = 255);

enum class SquareMode { Crop, Squash };

std::string_view to_string(SquareMode mode) noexcept;
std::optional<SquareMode> parse_square_mode(std::string_view text) noexcept;

/// Largest centred square; for odd excess the extra row/column is dropped
/// from the bottom/right.
GrayImage center_crop_square(const GrayImage& img);

/// Area-weighted box filter: each output pixel is the mean of the source
/// rectangle it covers, fractional edge coverage included.
GrayImage resize_area_average(const GrayImage& img, std::size_t out_w, std::size_t out_h);

/// Row-major copy; width*height must be a power of two.
encoding::FeatureVector flatten(const GrayImage& img);

/// Appends zeros up to the next power of two (at least 2).
std::vector<double> pad_to_power_of_two(std::span<const double> values);

/// Image shape used for a feature dimension: 2^ceil(k/2) wide, 2^floor(k/2) high
/// for dim = 2^k, so 64 -> 8x8 and 256 -> 16x16.
void shape_for_dim(std::size_t dim, std::size_t& width, std::size_t& height);

/// Square (crop or squash), resize to shape_for_dim(dim) and flatten.
encoding::FeatureVector preprocess(const GrayImage& img, std::size_t dim, SquareMode mode);

enum class NonfaceKind { Noise, Gradient, Checker, Blobs };

inline constexpr NonfaceKind kAllNonfaceKinds[] = {NonfaceKind::Noise, NonfaceKind::Gradient,
                                                   NonfaceKind::Checker, NonfaceKind::Blobs};

std::string_view to_string(NonfaceKind kind) noexcept;
std::optional<NonfaceKind> parse_nonface_kind(std::string_view text) noexcept;

/// Deterministic synthetic non-face image. Never all-black.
GrayImage generate_nonface(NonfaceKind kind, std::size_t width, std::size_t height,
                           std::uint64_t seed);

enum class Role { Train, Test };

std::string_view to_string(Role role) noexcept;

struct SplitEntry {
    std::string id;
    classifier::Label label = classifier::Label::Face;
    Role role = Role::Test;
    std::string source;  // file path, or "synthetic:<kind>:<seed>"
    encoding::FeatureVector raw;
    encoding::UnitFeatureVector unit;
};

struct DatasetSplit {
    std::vector<SplitEntry> train_faces;
    std::vector<SplitEntry> train_nonfaces;
    std::vector<SplitEntry> test_faces;
    std::vector<SplitEntry> test_nonfaces;
    std::uint64_t seed = 0;
    std::size_t dim = 0;

    std::vector<encoding::FeatureVector> template_vectors() const;  // raw train faces
    std::vector<classifier::LabeledSample> train_samples() const;   // faces then non-faces
    std::vector<classifier::LabeledSample> test_samples() const;    // faces then non-faces
};

struct NonfaceSource {
    std::optional<std::filesystem::path> directory;  // overrides the generator
    std::size_t synthetic_count = 300;
};

struct SplitOptions {
    std::size_t train_n = 300;           // faces used for training
    std::size_t train_nonface_n = 0;     // non-faces used for training (classical baselines)
    std::size_t test_nonface_n = 0;      // cap on test non-faces, 0 = all remaining
    std::size_t dim = 64;
    std::uint64_t seed = 0;
    SquareMode square = SquareMode::Crop;
};

/// Recursively lists *.pgm files under dir, sorted by path.
std::vector<std::filesystem::path> list_pgm_files(const std::filesystem::path& dir);

/// Faces are shuffled by seed and partitioned into train/test. Non-faces come
/// from the directory (also shuffled) or the generator, kinds in rotation.
/// Unreadable files are collected and reported together as one Data error.
DatasetSplit make_split(const std::filesystem::path& face_dir, const NonfaceSource& nonfaces,
                        const SplitOptions& options);

/// `id<TAB>label<TAB>role<TAB>source-path` per sample, train faces, train
/// non-faces, test faces, test non-faces in that order.
std::string split_manifest(const DatasetSplit& split);

struct ManifestRow {
    std::string id;
    classifier::Label label;
    Role role;
    std::string source;
};

std::vector<ManifestRow> parse_manifest(std::string_view text);

/// Rebuilds a split from manifest rows, re-reading files and regenerating
/// synthetic images, so a recorded run can be repeated exactly.
DatasetSplit split_from_manifest(std::span<const ManifestRow> rows, std::size_t dim,
                                 SquareMode square);

}  // namespace qface::dataio

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

#include "qface/dataio.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "qface/rng.hpp"

namespace qface::dataio {

namespace fs = std::filesystem;
using classifier::Label;

namespace {

// Uniform double in [0, 1) from the top 53 bits; identical on every standard library.
double u01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [lo, hi].
std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    Rng rng(mix64(seed));
    for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[uniform_index(rng, 0, i - 1)]);
    return idx;
}

}  // namespace

GrayImage make_image(std::size_t width, std::size_t height, std::vector<double> pixels) {
    require(width >= 1 && height >= 1, ErrorCode::InvalidArgument, "image: zero dimension");
    require(pixels.size() == width * height, ErrorCode::InvalidArgument,
            "image: pixel count does not match width*height");
    for (double p : pixels) {
        require(p >= 0.0 && p <= 1.0, ErrorCode::InvalidArgument,
                "image: intensity outside [0, 1]");
    }
    return GrayImage{width, height, std::move(pixels)};
}

// ---------------------------------------------------------------------------
// PGM

std::string_view to_string(PgmErrorKind kind) noexcept {
    switch (kind) {
        case PgmErrorKind::BadMagic: return "bad magic";
        case PgmErrorKind::BadHeader: return "bad header";
        case PgmErrorKind::BadMaxval: return "bad maxval";
        case PgmErrorKind::Truncated: return "truncated payload";
        case PgmErrorKind::BadSample: return "bad sample";
    }
    return "pgm error";
}

PgmError::PgmError(PgmErrorKind kind, std::size_t offset, const std::string& what)
    : Error(ErrorCode::Parse, "pgm: " + std::string(to_string(kind)) + " at byte " +
                                  std::to_string(offset) + ": " + what),
      kind_(kind),
      offset_(offset),
      detail_(what) {}

namespace {

class PgmReader {
public:
    explicit PgmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (is_space(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Unsigned decimal token; nullopt if no digits are present.
    std::optional<std::uint64_t> read_uint() {
        skip_space_and_comments();
        std::uint64_t v = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > (1ULL << 40)) return std::nullopt;
            ++pos_;
            ++digits;
        }
        if (digits == 0) return std::nullopt;
        return v;
    }

    std::uint8_t byte_at(std::size_t i) const { return bytes_[i]; }
    std::size_t size() const { return bytes_.size(); }
    void advance(std::size_t n) { pos_ += n; }

    static bool is_space(std::uint8_t c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw PgmError(PgmErrorKind::BadMagic, 0, "expected P2 or P5");
    }
    const bool binary = bytes[1] == '5';
    PgmReader in(bytes);
    in.advance(2);
    if (!in.at_end() && !PgmReader::is_space(in.byte_at(in.pos())) && in.byte_at(in.pos()) != '#') {
        throw PgmError(PgmErrorKind::BadMagic, 2, "magic not followed by whitespace");
    }

    const auto header_field = [&](const char* name) {
        const std::size_t at = (in.skip_space_and_comments(), in.pos());
        const auto v = in.read_uint();
        if (!v) {
            if (in.at_end()) throw PgmError(PgmErrorKind::Truncated, at, std::string("missing ") + name);
            throw PgmError(PgmErrorKind::BadHeader, at, std::string("cannot parse ") + name);
        }
        return std::pair{*v, at};
    };
    const auto [width, w_at] = header_field("width");
    const auto [height, h_at] = header_field("height");
    if (width == 0) throw PgmError(PgmErrorKind::BadHeader, w_at, "width is zero");
    if (height == 0) throw PgmError(PgmErrorKind::BadHeader, h_at, "height is zero");
    if (width * height > (1ULL << 28)) {
        throw PgmError(PgmErrorKind::BadHeader, w_at, "image too large");
    }
    const std::size_t maxval_at = (in.skip_space_and_comments(), in.pos());
    const auto maxval_opt = in.read_uint();
    if (!maxval_opt) {
        if (in.at_end()) throw PgmError(PgmErrorKind::Truncated, maxval_at, "missing maxval");
        throw PgmError(PgmErrorKind::BadMaxval, maxval_at, "cannot parse maxval");
    }
    const std::uint64_t maxval = *maxval_opt;
    if (maxval == 0 || maxval > 65535) {
        throw PgmError(PgmErrorKind::BadMaxval, maxval_at,
                       "maxval " + std::to_string(maxval) + " outside [1, 65535]");
    }

    const std::size_t count = width * height;
    std::vector<double> pixels(count);
    const double denom = static_cast<double>(maxval);
    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (in.at_end()) throw PgmError(PgmErrorKind::Truncated, in.pos(), "no raster");
        if (!PgmReader::is_space(in.byte_at(in.pos()))) {
            throw PgmError(PgmErrorKind::BadHeader, in.pos(), "expected whitespace after maxval");
        }
        in.advance(1);
        const std::size_t bps = maxval > 255 ? 2 : 1;
        const std::size_t start = in.pos();
        if (in.size() - start < count * bps) {
            throw PgmError(PgmErrorKind::Truncated, in.size(),
                           "raster has " + std::to_string(in.size() - start) + " bytes, need " +
                               std::to_string(count * bps));
        }
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t at = start + i * bps;
            unsigned v = in.byte_at(at);
            if (bps == 2) v = (v << 8) | in.byte_at(at + 1);
            if (v > maxval) {
                throw PgmError(PgmErrorKind::BadSample, at,
                               "sample " + std::to_string(v) + " exceeds maxval");
            }
            pixels[i] = v / denom;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            in.skip_space_and_comments();
            const std::size_t at = in.pos();
            const auto v = in.read_uint();
            if (!v) {
                if (in.at_end()) {
                    throw PgmError(PgmErrorKind::Truncated, at,
                                   "raster ends after " + std::to_string(i) + " of " +
                                       std::to_string(count) + " samples");
                }
                throw PgmError(PgmErrorKind::BadSample, at, "cannot parse sample");
            }
            if (*v > maxval) {
                throw PgmError(PgmErrorKind::BadSample, at,
                               "sample " + std::to_string(*v) + " exceeds maxval");
            }
            pixels[i] = static_cast<double>(*v) / denom;
        }
    }
    return GrayImage{width, height, std::move(pixels)};
}

GrayImage load_pgm(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    require(static_cast<bool>(f), ErrorCode::Io, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    require(!f.bad(), ErrorCode::Io, "read error on " + path.string());
    try {
        return parse_pgm(bytes);
    } catch (const PgmError& e) {
        throw PgmError(e.kind(), e.offset(), path.string() + ": " + e.detail());
    }
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img, unsigned maxval) {
    require(maxval >= 1 && maxval <= 65535, ErrorCode::InvalidArgument,
            "encode_pgm: maxval outside [1, 65535]");
    const std::string header = "P5\n" + std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n" + std::to_string(maxval) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    for (double p : img.pixels) {
        const auto v = static_cast<unsigned>(std::lround(std::clamp(p, 0.0, 1.0) * maxval));
        if (maxval > 255) out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
    }
    return out;
}

void save_pgm(const fs::path& path, const GrayImage& img, unsigned maxval) {
    const auto bytes = encode_pgm(img, maxval);
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), ErrorCode::Io, "cannot write " + path.string());
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    require(static_cast<bool>(f), ErrorCode::Io, "write error on " + path.string());
}

// ---------------------------------------------------------------------------
// Geometry

std::string_view to_string(SquareMode mode) noexcept {
    return mode == SquareMode::Crop ? "crop" : "squash";
}

std::optional<SquareMode> parse_square_mode(std::string_view text) noexcept {
    if (text == "crop") return SquareMode::Crop;
    if (text == "squash") return SquareMode::Squash;
    return std::nullopt;
}

GrayImage center_crop_square(const GrayImage& img) {
    const std::size_t side = std::min(img.width, img.height);
    const std::size_t x0 = (img.width - side) / 2;
    const std::size_t y0 = (img.height - side) / 2;
    GrayImage out{side, side, std::vector<double>(side * side)};
    for (std::size_t y = 0; y < side; ++y) {
        for (std::size_t x = 0; x < side; ++x) out.pixels[y * side + x] = img.at(x0 + x, y0 + y);
    }
    return out;
}

namespace {

struct Tap {
    std::size_t index;
    double weight;
};

// For each output cell, the source cells it overlaps and their share of its width.
std::vector<std::vector<Tap>> box_taps(std::size_t in, std::size_t out) {
    std::vector<std::vector<Tap>> taps(out);
    const double scale = static_cast<double>(in) / static_cast<double>(out);
    for (std::size_t o = 0; o < out; ++o) {
        const double lo = static_cast<double>(o) * scale;
        const double hi = static_cast<double>(o + 1) * scale;
        const auto first = static_cast<std::size_t>(std::floor(lo));
        const auto last = std::min(in, static_cast<std::size_t>(std::ceil(hi)));
        for (std::size_t i = first; i < last; ++i) {
            const double cover = std::min(hi, static_cast<double>(i + 1)) -
                                 std::max(lo, static_cast<double>(i));
            if (cover > 0.0) taps[o].push_back({i, cover / (hi - lo)});
        }
    }
    return taps;
}

}  // namespace

GrayImage resize_area_average(const GrayImage& img, std::size_t out_w, std::size_t out_h) {
    require(out_w >= 1 && out_h >= 1, ErrorCode::InvalidArgument,
            "resize: output dimensions must be >= 1");
    const auto tx = box_taps(img.width, out_w);
    const auto ty = box_taps(img.height, out_h);
    GrayImage out{out_w, out_h, std::vector<double>(out_w * out_h)};
    for (std::size_t oy = 0; oy < out_h; ++oy) {
        for (std::size_t ox = 0; ox < out_w; ++ox) {
            double acc = 0.0;
            for (const auto& ry : ty[oy]) {
                for (const auto& rx : tx[ox]) acc += ry.weight * rx.weight * img.at(rx.index, ry.index);
            }
            out.pixels[oy * out_w + ox] = std::clamp(acc, 0.0, 1.0);
        }
    }
    return out;
}

encoding::FeatureVector flatten(const GrayImage& img) {
    const std::size_t n = img.width * img.height;
    require(encoding::is_power_of_two(n), ErrorCode::InvalidArgument,
            "flatten: pixel count " + std::to_string(n) + " is not a power of two >= 2");
    return encoding::FeatureVector(img.pixels);
}

std::vector<double> pad_to_power_of_two(std::span<const double> values) {
    const std::size_t n = std::max<std::size_t>(2, std::bit_ceil(std::max<std::size_t>(values.size(), 1)));
    std::vector<double> out(values.begin(), values.end());
    out.resize(n, 0.0);
    return out;
}

void shape_for_dim(std::size_t dim, std::size_t& width, std::size_t& height) {
    const int k = encoding::log2_exact(dim);
    width = std::size_t{1} << ((k + 1) / 2);
    height = std::size_t{1} << (k / 2);
}

encoding::FeatureVector preprocess(const GrayImage& img, std::size_t dim, SquareMode mode) {
    std::size_t w = 0, h = 0;
    shape_for_dim(dim, w, h);
    const GrayImage squared = mode == SquareMode::Crop ? center_crop_square(img) : img;
    return flatten(resize_area_average(squared, w, h));
}

// ---------------------------------------------------------------------------
// Synthetic non-faces

std::string_view to_string(NonfaceKind kind) noexcept {
    switch (kind) {
        case NonfaceKind::Noise: return "noise";
        case NonfaceKind::Gradient: return "gradient";
        case NonfaceKind::Checker: return "checker";
        case NonfaceKind::Blobs: return "blobs";
    }
    return "noise";
}

std::optional<NonfaceKind> parse_nonface_kind(std::string_view text) noexcept {
    for (auto k : kAllNonfaceKinds) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

GrayImage generate_nonface(NonfaceKind kind, std::size_t w, std::size_t h, std::uint64_t seed) {
    require(w >= 1 && h >= 1, ErrorCode::InvalidArgument, "generate_nonface: zero dimension");
    Rng rng(mix64(seed ^ (static_cast<std::uint64_t>(kind) << 56)));
    GrayImage img{w, h, std::vector<double>(w * h, 0.0)};
    auto& px = img.pixels;

    switch (kind) {
        case NonfaceKind::Noise:
            for (double& p : px) p = u01(rng);
            break;

        case NonfaceKind::Gradient: {
            const double theta = 2.0 * std::numbers::pi * u01(rng);
            const double cx = std::cos(theta), cy = std::sin(theta);
            for (std::size_t y = 0; y < h; ++y) {
                for (std::size_t x = 0; x < w; ++x) px[y * w + x] = static_cast<double>(x) * cx + static_cast<double>(y) * cy;
            }
            auto [lo, hi] = std::minmax_element(px.begin(), px.end());
            double lo_v = *lo, range = *hi - *lo;
            if (range < 1e-9) {
                // Ramp orthogonal to a 1-pixel-thick image: fall back to index order.
                for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<double>(i);
                lo_v = 0.0;
                range = static_cast<double>(px.size() - 1);
            }
            if (range > 0.0) {
                for (double& p : px) p = (p - lo_v) / range;
                // Pin the extremes exactly.
                *std::min_element(px.begin(), px.end()) = 0.0;
                *std::max_element(px.begin(), px.end()) = 1.0;
            } else {
                px[0] = 1.0;
            }
            break;
        }

        case NonfaceKind::Checker: {
            const std::size_t max_period = std::max<std::size_t>(1, std::min(w, h) / 2);
            const std::size_t period = uniform_index(rng, 1, max_period);
            const double lo = 0.5 * u01(rng);
            const double hi = 0.5 + 0.5 * u01(rng);
            for (std::size_t y = 0; y < h; ++y) {
                for (std::size_t x = 0; x < w; ++x) {
                    px[y * w + x] = ((x / period + y / period) % 2 == 0) ? hi : lo;
                }
            }
            break;
        }

        case NonfaceKind::Blobs: {
            const double background = 0.1 + 0.8 * u01(rng);
            std::fill(px.begin(), px.end(), background);
            const std::size_t count = uniform_index(rng, 1, 5);
            const double wd = static_cast<double>(w), hd = static_cast<double>(h);
            for (std::size_t b = 0; b < count; ++b) {
                const double cx = u01(rng) * wd, cy = u01(rng) * hd;
                const double rx = (0.1 + 0.4 * u01(rng)) * wd, ry = (0.1 + 0.4 * u01(rng)) * hd;
                const double value = u01(rng);
                for (std::size_t y = 0; y < h; ++y) {
                    for (std::size_t x = 0; x < w; ++x) {
                        const double dx = (static_cast<double>(x) + 0.5 - cx) / rx;
                        const double dy = (static_cast<double>(y) + 0.5 - cy) / ry;
                        if (dx * dx + dy * dy <= 1.0) px[y * w + x] = value;
                    }
                }
            }
            break;
        }
    }
    if (std::all_of(px.begin(), px.end(), [](double p) { return p <= 0.0; })) px[0] = 1.0;
    return img;
}

// ---------------------------------------------------------------------------
// Splits

std::string_view to_string(Role role) noexcept { return role == Role::Train ? "train" : "test"; }

std::vector<encoding::FeatureVector> DatasetSplit::template_vectors() const {
    std::vector<encoding::FeatureVector> out;
    for (const auto& e : train_faces) out.push_back(e.raw);
    return out;
}

namespace {

void append_samples(std::vector<classifier::LabeledSample>& out, const std::vector<SplitEntry>& in) {
    for (const auto& e : in) out.push_back({e.unit, e.label, e.id});
}

struct Loaded {
    std::string id;
    std::string source;
    encoding::FeatureVector raw;
};

std::string id_for(const fs::path& file, const fs::path& root) {
    auto rel = file.lexically_relative(root);
    rel.replace_extension();
    return rel.generic_string();
}

std::vector<Loaded> load_directory(const fs::path& dir, std::size_t dim, SquareMode square,
                                   std::vector<std::string>& errors) {
    std::vector<Loaded> out;
    for (const auto& file : list_pgm_files(dir)) {
        try {
            auto raw = preprocess(load_pgm(file), dim, square);
            try {
                (void)encoding::normalize(raw);
            } catch (const Error&) {
                errors.push_back(file.string() + ": blank image cannot be amplitude encoded");
                continue;
            }
            out.push_back({id_for(file, dir), file.string(), std::move(raw)});
        } catch (const Error& e) {
            errors.push_back(e.what());
        }
    }
    return out;
}

encoding::FeatureVector synthetic_vector(NonfaceKind kind, std::uint64_t seed, std::size_t dim) {
    std::size_t w = 0, h = 0;
    shape_for_dim(dim, w, h);
    return flatten(generate_nonface(kind, w, h, seed));
}

std::string synthetic_source(NonfaceKind kind, std::uint64_t seed) {
    return "synthetic:" + std::string(to_string(kind)) + ":" + std::to_string(seed);
}

SplitEntry make_entry(Loaded&& item, Label label, Role role) {
    auto unit = encoding::normalize(item.raw);
    return SplitEntry{std::move(item.id), label, role, std::move(item.source), std::move(item.raw),
                      std::move(unit)};
}

void throw_collected(const std::vector<std::string>& errors) {
    if (errors.empty()) return;
    std::string msg = std::to_string(errors.size()) + " unreadable file(s):";
    for (const auto& e : errors) msg += "\n  " + e;
    fail(ErrorCode::Data, msg);
}

}  // namespace

std::vector<classifier::LabeledSample> DatasetSplit::train_samples() const {
    std::vector<classifier::LabeledSample> out;
    append_samples(out, train_faces);
    append_samples(out, train_nonfaces);
    return out;
}

std::vector<classifier::LabeledSample> DatasetSplit::test_samples() const {
    std::vector<classifier::LabeledSample> out;
    append_samples(out, test_faces);
    append_samples(out, test_nonfaces);
    return out;
}

std::vector<fs::path> list_pgm_files(const fs::path& dir) {
    std::error_code ec;
    require(fs::is_directory(dir, ec), ErrorCode::Io, "not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (ext == ".pgm") files.push_back(entry.path());
    }
    require(!ec, ErrorCode::Io, "cannot list " + dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end());
    return files;
}

DatasetSplit make_split(const fs::path& face_dir, const NonfaceSource& nonfaces,
                        const SplitOptions& opt) {
    encoding::log2_exact(opt.dim);
    std::vector<std::string> errors;
    auto faces = load_directory(face_dir, opt.dim, opt.square, errors);
    std::vector<Loaded> others;
    if (nonfaces.directory) {
        others = load_directory(*nonfaces.directory, opt.dim, opt.square, errors);
    } else {
        for (std::size_t i = 0; i < nonfaces.synthetic_count; ++i) {
            const auto kind = kAllNonfaceKinds[i % std::size(kAllNonfaceKinds)];
            const std::uint64_t seed = derive_seed(opt.seed ^ 0x6e6f6e66616365ULL, i);
            char id[64];
            std::snprintf(id, sizeof id, "synthetic_%s_%04zu", std::string(to_string(kind)).c_str(), i);
            others.push_back({id, synthetic_source(kind, seed), synthetic_vector(kind, seed, opt.dim)});
        }
    }
    throw_collected(errors);

    require(faces.size() > opt.train_n, ErrorCode::Data,
            "make_split: " + std::to_string(faces.size()) + " face images in " + face_dir.string() +
                ", need at least train_n + 1 = " + std::to_string(opt.train_n + 1));
    require(opt.train_n >= 1, ErrorCode::Data, "make_split: train_n must be >= 1");
    require(others.size() >= opt.train_nonface_n, ErrorCode::Data,
            "make_split: " + std::to_string(others.size()) + " non-face images, need " +
                std::to_string(opt.train_nonface_n) + " for training");

    DatasetSplit split;
    split.seed = opt.seed;
    split.dim = opt.dim;
    const auto face_order = shuffled_indices(faces.size(), opt.seed);
    for (std::size_t t = 0; t < face_order.size(); ++t) {
        auto& item = faces[face_order[t]];
        if (t < opt.train_n) {
            split.train_faces.push_back(make_entry(std::move(item), Label::Face, Role::Train));
        } else {
            split.test_faces.push_back(make_entry(std::move(item), Label::Face, Role::Test));
        }
    }
    // Generated non-faces are already in seeded random order.
    std::vector<std::size_t> other_order(others.size());
    for (std::size_t i = 0; i < others.size(); ++i) other_order[i] = i;
    if (nonfaces.directory) other_order = shuffled_indices(others.size(), derive_seed(opt.seed, 1));
    for (std::size_t t = 0; t < other_order.size(); ++t) {
        auto& item = others[other_order[t]];
        if (t < opt.train_nonface_n) {
            split.train_nonfaces.push_back(make_entry(std::move(item), Label::NonFace, Role::Train));
        } else if (opt.test_nonface_n == 0 || split.test_nonfaces.size() < opt.test_nonface_n) {
            split.test_nonfaces.push_back(make_entry(std::move(item), Label::NonFace, Role::Test));
        }
    }
    return split;
}

std::string split_manifest(const DatasetSplit& split) {
    std::string out;
    for (const auto* group :
         {&split.train_faces, &split.train_nonfaces, &split.test_faces, &split.test_nonfaces}) {
        for (const auto& e : *group) {
            out += e.id;
            out += '\t';
            out += classifier::to_string(e.label);
            out += '\t';
            out += to_string(e.role);
            out += '\t';
            out += e.source;
            out += '\n';
        }
    }
    return out;
}

std::vector<ManifestRow> parse_manifest(std::string_view text) {
    std::vector<ManifestRow> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        const auto bad = [&](const std::string& why) {
            fail(ErrorCode::Parse, "manifest line " + std::to_string(line_no) + ": " + why);
        };
        if (fields.size() != 4) bad("expected 4 tab-separated fields");
        ManifestRow row;
        row.id = fields[0];
        if (fields[1] == "face") {
            row.label = Label::Face;
        } else if (fields[1] == "nonface") {
            row.label = Label::NonFace;
        } else {
            bad("unknown label '" + std::string(fields[1]) + "'");
        }
        if (fields[2] == "train") {
            row.role = Role::Train;
        } else if (fields[2] == "test") {
            row.role = Role::Test;
        } else {
            bad("unknown role '" + std::string(fields[2]) + "'");
        }
        row.source = fields[3];
        if (row.id.empty() || row.source.empty()) bad("empty id or source");
        rows.push_back(std::move(row));
    }
    return rows;
}

DatasetSplit split_from_manifest(std::span<const ManifestRow> rows, std::size_t dim,
                                 SquareMode square) {
    encoding::log2_exact(dim);
    DatasetSplit split;
    split.dim = dim;
    std::vector<std::string> errors;
    for (const auto& row : rows) {
        try {
            std::optional<encoding::FeatureVector> raw;
            constexpr std::string_view kSynth = "synthetic:";
            if (row.source.starts_with(kSynth)) {
                const std::string_view rest = std::string_view(row.source).substr(kSynth.size());
                const auto colon = rest.find(':');
                const auto kind = parse_nonface_kind(rest.substr(0, colon));
                std::uint64_t seed = 0;
                const auto tail = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
                const auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), seed);
                require(kind && ec == std::errc{} && p == tail.data() + tail.size(), ErrorCode::Parse,
                        "bad synthetic source '" + row.source + "'");
                raw = synthetic_vector(*kind, seed, dim);
            } else {
                raw = preprocess(load_pgm(row.source), dim, square);
            }
            auto entry = make_entry(Loaded{row.id, row.source, std::move(*raw)}, row.label, row.role);
            auto& group = row.role == Role::Train
                              ? (row.label == Label::Face ? split.train_faces : split.train_nonfaces)
                              : (row.label == Label::Face ? split.test_faces : split.test_nonfaces);
            group.push_back(std::move(entry));
        } catch (const Error& e) {
            errors.push_back(e.what());
        }
    }
    throw_collected(errors);
    return split;
}

}  // namespace qface::dataio

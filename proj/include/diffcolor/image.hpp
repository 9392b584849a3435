#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "diffcolor/common.hpp"

namespace diffcolor {

// Interleaved RGB, values in [0, 1]. 8-bit only at I/O boundaries.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // height*width*3, row-major, r,g,b

    RgbImage() = default;
    RgbImage(int w, int h, float fill = 0.0f)
        : width(w), height(h), data(static_cast<size_t>(w) * h * 3, fill) {
        if (w < 1 || h < 1) throw std::invalid_argument("RgbImage: dimensions must be >= 1");
    }

    float& at(int y, int x, int c) { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
    float at(int y, int x, int c) const { return data[(static_cast<size_t>(y) * width + x) * 3 + c]; }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Single luminance channel in [0, 1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // height*width

    GrayImage() = default;
    GrayImage(int w, int h, float fill = 0.0f)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {
        if (w < 1 || h < 1) throw std::invalid_argument("GrayImage: dimensions must be >= 1");
    }

    float& at(int y, int x) { return data[static_cast<size_t>(y) * width + x]; }
    float at(int y, int x) const { return data[static_cast<size_t>(y) * width + x]; }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Planar CIE Lab. L in [0,100]; a,b nominally in [-128,127] but stored unclamped.
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<float> L, a, b;

    LabImage() = default;
    LabImage(int w, int h) : width(w), height(h) {
        if (w < 1 || h < 1) throw std::invalid_argument("LabImage: dimensions must be >= 1");
        size_t n = static_cast<size_t>(w) * h;
        L.assign(n, 0.0f);
        a.assign(n, 0.0f);
        b.assign(n, 0.0f);
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

// Planar full-range BT.601 YUV. Y in [0,1]; U,V zero-centered.
struct YuvImage {
    int width = 0;
    int height = 0;
    std::vector<float> Y, U, V;

    YuvImage() = default;
    YuvImage(int w, int h) : width(w), height(h) {
        if (w < 1 || h < 1) throw std::invalid_argument("YuvImage: dimensions must be >= 1");
        size_t n = static_cast<size_t>(w) * h;
        Y.assign(n, 0.0f);
        U.assign(n, 0.0f);
        V.assign(n, 0.0f);
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

inline uint8_t quantize8(float v) {
    float scaled = v * 255.0f;
    if (scaled <= 0.0f) return 0;
    if (scaled >= 255.0f) return 255;
    return static_cast<uint8_t>(std::lround(scaled));
}

inline float dequantize8(uint8_t v) { return static_cast<float>(v) / 255.0f; }

inline RgbImage replicate_gray(const GrayImage& g) {
    RgbImage out(g.width, g.height);
    for (size_t i = 0; i < g.data.size(); ++i) {
        out.data[i * 3 + 0] = g.data[i];
        out.data[i * 3 + 1] = g.data[i];
        out.data[i * 3 + 2] = g.data[i];
    }
    return out;
}

namespace detail {

// Catmull-Rom kernel
inline float cubic_weight(float x) {
    x = std::fabs(x);
    if (x < 1.0f) return 1.0f + x * x * (1.5f * x - 2.5f);
    if (x < 2.0f) return 2.0f - x * (4.0f - x * (2.5f - 0.5f * x));
    return 0.0f;
}

template <typename GetFn>
float bicubic_sample(GetFn&& get, int w, int h, float sx, float sy) {
    int x0 = static_cast<int>(std::floor(sx));
    int y0 = static_cast<int>(std::floor(sy));
    float acc = 0.0f, wsum = 0.0f;
    for (int dy = -1; dy <= 2; ++dy) {
        int yy = std::clamp(y0 + dy, 0, h - 1);
        float wy = cubic_weight(sy - static_cast<float>(y0 + dy));
        for (int dx = -1; dx <= 2; ++dx) {
            int xx = std::clamp(x0 + dx, 0, w - 1);
            float wx = cubic_weight(sx - static_cast<float>(x0 + dx));
            acc += wx * wy * get(yy, xx);
            wsum += wx * wy;
        }
    }
    return wsum != 0.0f ? acc / wsum : 0.0f;
}

}  // namespace detail

inline RgbImage resize_bicubic(const RgbImage& img, int new_w, int new_h) {
    if (new_w < 1 || new_h < 1) throw std::invalid_argument("resize_bicubic: bad target size");
    if (new_w == img.width && new_h == img.height) return img;
    RgbImage out(new_w, new_h);
    float fx = static_cast<float>(img.width) / new_w;
    float fy = static_cast<float>(img.height) / new_h;
    for (int y = 0; y < new_h; ++y) {
        float sy = (y + 0.5f) * fy - 0.5f;
        for (int x = 0; x < new_w; ++x) {
            float sx = (x + 0.5f) * fx - 0.5f;
            for (int c = 0; c < 3; ++c) {
                float v = detail::bicubic_sample(
                    [&](int yy, int xx) { return img.at(yy, xx, c); }, img.width, img.height, sx, sy);
                out.at(y, x, c) = std::clamp(v, 0.0f, 1.0f);
            }
        }
    }
    return out;
}

inline GrayImage resize_bicubic(const GrayImage& img, int new_w, int new_h) {
    if (new_w < 1 || new_h < 1) throw std::invalid_argument("resize_bicubic: bad target size");
    if (new_w == img.width && new_h == img.height) return img;
    GrayImage out(new_w, new_h);
    float fx = static_cast<float>(img.width) / new_w;
    float fy = static_cast<float>(img.height) / new_h;
    for (int y = 0; y < new_h; ++y) {
        float sy = (y + 0.5f) * fy - 0.5f;
        for (int x = 0; x < new_w; ++x) {
            float sx = (x + 0.5f) * fx - 0.5f;
            float v = detail::bicubic_sample(
                [&](int yy, int xx) { return img.at(yy, xx); }, img.width, img.height, sx, sy);
            out.at(y, x) = std::clamp(v, 0.0f, 1.0f);
        }
    }
    return out;
}

}  // namespace diffcolor

#pragma once

#include <cmath>
#include <span>

#include "diffcolor/image.hpp"

namespace diffcolor {

// sRGB <-> CIE Lab, D65, 2-degree observer. Piecewise sRGB transfer function
// with thresholds 0.04045 / 0.0031308. Matrix and white point derived from the
// sRGB primary chromaticities and the D65 white (0.3127, 0.3290).

namespace colorspace {

inline constexpr double kSrgbToXyz[3][3] = {
    {0.4123907993, 0.3575843394, 0.1804807884},
    {0.2126390059, 0.7151686788, 0.0721923154},
    {0.0193308187, 0.1191947798, 0.9505321522},
};
inline constexpr double kXyzToSrgb[3][3] = {
    {3.2409699419, -1.5373831776, -0.4986107603},
    {-0.9692436363, 1.8759675015, 0.0415550574},
    {0.0556300797, -0.2039769589, 1.0569715142},
};
inline constexpr double kWhiteX = 0.9504559271;
inline constexpr double kWhiteY = 1.0;
inline constexpr double kWhiteZ = 1.0890577508;

inline double srgb_to_linear(double c) {
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

inline double linear_to_srgb(double c) {
    return c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

inline double lab_f(double t) {
    constexpr double delta = 6.0 / 29.0;
    return t > delta * delta * delta ? std::cbrt(t) : t / (3.0 * delta * delta) + 4.0 / 29.0;
}

inline double lab_f_inv(double t) {
    constexpr double delta = 6.0 / 29.0;
    return t > delta ? t * t * t : 3.0 * delta * delta * (t - 4.0 / 29.0);
}

inline void rgb_to_lab_pixel(double r, double g, double b, double& L, double& a, double& bb) {
    double rl = srgb_to_linear(r), gl = srgb_to_linear(g), bl = srgb_to_linear(b);
    double x = kSrgbToXyz[0][0] * rl + kSrgbToXyz[0][1] * gl + kSrgbToXyz[0][2] * bl;
    double y = kSrgbToXyz[1][0] * rl + kSrgbToXyz[1][1] * gl + kSrgbToXyz[1][2] * bl;
    double z = kSrgbToXyz[2][0] * rl + kSrgbToXyz[2][1] * gl + kSrgbToXyz[2][2] * bl;
    double fx = lab_f(x / kWhiteX), fy = lab_f(y / kWhiteY), fz = lab_f(z / kWhiteZ);
    L = 116.0 * fy - 16.0;
    a = 500.0 * (fx - fy);
    bb = 200.0 * (fy - fz);
}

inline void lab_to_rgb_pixel(double L, double a, double b, double& r, double& g, double& bb) {
    double fy = (L + 16.0) / 116.0;
    double fx = fy + a / 500.0;
    double fz = fy - b / 200.0;
    double x = kWhiteX * lab_f_inv(fx);
    double y = kWhiteY * lab_f_inv(fy);
    double z = kWhiteZ * lab_f_inv(fz);
    double rl = kXyzToSrgb[0][0] * x + kXyzToSrgb[0][1] * y + kXyzToSrgb[0][2] * z;
    double gl = kXyzToSrgb[1][0] * x + kXyzToSrgb[1][1] * y + kXyzToSrgb[1][2] * z;
    double bl = kXyzToSrgb[2][0] * x + kXyzToSrgb[2][1] * y + kXyzToSrgb[2][2] * z;
    r = linear_to_srgb(std::clamp(rl, 0.0, 1.0));
    g = linear_to_srgb(std::clamp(gl, 0.0, 1.0));
    bb = linear_to_srgb(std::clamp(bl, 0.0, 1.0));
}

}  // namespace colorspace

inline LabImage rgb_to_lab(const RgbImage& img) {
    LabImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixel_count(); ++i) {
        double L, a, b;
        colorspace::rgb_to_lab_pixel(img.data[i * 3], img.data[i * 3 + 1], img.data[i * 3 + 2], L, a, b);
        out.L[i] = static_cast<float>(L);
        out.a[i] = static_cast<float>(a);
        out.b[i] = static_cast<float>(b);
    }
    return out;
}

// Out-of-gamut values clamp to [0,1].
inline RgbImage lab_to_rgb(const LabImage& img) {
    RgbImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixel_count(); ++i) {
        double r, g, b;
        colorspace::lab_to_rgb_pixel(img.L[i], img.a[i], img.b[i], r, g, b);
        out.data[i * 3] = static_cast<float>(std::clamp(r, 0.0, 1.0));
        out.data[i * 3 + 1] = static_cast<float>(std::clamp(g, 0.0, 1.0));
        out.data[i * 3 + 2] = static_cast<float>(std::clamp(b, 0.0, 1.0));
    }
    return out;
}

// L channel rescaled to [0,1].
inline GrayImage extract_luminance(const RgbImage& img) {
    GrayImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixel_count(); ++i) {
        double L, a, b;
        colorspace::rgb_to_lab_pixel(img.data[i * 3], img.data[i * 3 + 1], img.data[i * 3 + 2], L, a, b);
        out.data[i] = static_cast<float>(std::clamp(L / 100.0, 0.0, 1.0));
    }
    return out;
}

// Full-range BT.601.
inline YuvImage rgb_to_yuv(const RgbImage& img) {
    YuvImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixel_count(); ++i) {
        double r = img.data[i * 3], g = img.data[i * 3 + 1], b = img.data[i * 3 + 2];
        out.Y[i] = static_cast<float>(0.299 * r + 0.587 * g + 0.114 * b);
        out.U[i] = static_cast<float>(-0.14713 * r - 0.28886 * g + 0.436 * b);
        out.V[i] = static_cast<float>(0.615 * r - 0.51499 * g - 0.10001 * b);
    }
    return out;
}

inline RgbImage yuv_to_rgb(const YuvImage& img) {
    RgbImage out(img.width, img.height);
    for (size_t i = 0; i < img.pixel_count(); ++i) {
        double y = img.Y[i], u = img.U[i], v = img.V[i];
        double r = y + 1.13983 * v;
        double g = y - 0.39465 * u - 0.58060 * v;
        double b = y + 2.03211 * u;
        out.data[i * 3] = static_cast<float>(std::clamp(r, 0.0, 1.0));
        out.data[i * 3 + 1] = static_cast<float>(std::clamp(g, 0.0, 1.0));
        out.data[i * 3 + 2] = static_cast<float>(std::clamp(b, 0.0, 1.0));
    }
    return out;
}

struct ChannelMoments {
    double mean = 0.0;
    double stddev = 0.0;  // population
};

inline ChannelMoments channel_moments(std::span<const float> ch) {
    double sum = 0.0;
    for (float v : ch) sum += v;
    double mean = sum / static_cast<double>(ch.size());
    double var = 0.0;
    for (float v : ch) {
        double d = v - mean;
        var += d * d;
    }
    var /= static_cast<double>(ch.size());
    return {mean, std::sqrt(var)};
}

// Affine remap so the channel's population mean/std equal the targets.
// Near-zero source variance: mean shift only, with a warning.
inline void match_moments(std::vector<float>& ch, const ChannelMoments& target, const char* label = "") {
    ChannelMoments src = channel_moments(ch);
    constexpr double kMinStd = 1e-12;
    if (src.stddev < kMinStd) {
        log_line(LogLevel::warn, "match_moments channel=%s zero variance, mean shift only", label);
        double shift = target.mean - src.mean;
        for (float& v : ch) v = static_cast<float>(v + shift);
        return;
    }
    double scale = target.stddev / src.stddev;
    for (float& v : ch) {
        v = static_cast<float>((v - src.mean) * scale + target.mean);
    }
}

enum class ColorSpace { Lab, Yuv };
enum class PostprocessMode { off, luminance_only, full };

// Lab-space core: replaces L with the input luminance (exact, pre-quantization)
// and optionally matches the a/b moments to the reference. Result is pre-clamp.
inline LabImage postprocess_lab(const LabImage& out, const GrayImage& input_gray, const LabImage& ref,
                                bool match_chroma = true) {
    if (out.width != input_gray.width || out.height != input_gray.height ||
        out.width != ref.width || out.height != ref.height) {
        throw std::invalid_argument("postprocess_lab: dimension mismatch");
    }
    LabImage result = out;
    for (size_t i = 0; i < result.pixel_count(); ++i) {
        result.L[i] = input_gray.data[i] * 100.0f;
    }
    if (match_chroma) {
        match_moments(result.a, channel_moments(ref.a), "a");
        match_moments(result.b, channel_moments(ref.b), "b");
    }
    return result;
}

inline YuvImage postprocess_yuv(const YuvImage& out, const GrayImage& input_gray, const YuvImage& ref,
                                bool match_chroma = true) {
    if (out.width != input_gray.width || out.height != input_gray.height ||
        out.width != ref.width || out.height != ref.height) {
        throw std::invalid_argument("postprocess_yuv: dimension mismatch");
    }
    YuvImage result = out;
    for (size_t i = 0; i < result.pixel_count(); ++i) {
        result.Y[i] = input_gray.data[i];
    }
    if (match_chroma) {
        match_moments(result.U, channel_moments(ref.U), "U");
        match_moments(result.V, channel_moments(ref.V), "V");
    }
    return result;
}

// Luminance replacement first, then chroma moment matching; gamut clamping
// happens only at the final conversion back to RGB.
inline RgbImage postprocess(const RgbImage& out, const GrayImage& input_gray, const RgbImage& ref,
                            ColorSpace space = ColorSpace::Lab,
                            PostprocessMode mode = PostprocessMode::full) {
    if (mode == PostprocessMode::off) return out;
    bool match_chroma = mode == PostprocessMode::full;
    if (space == ColorSpace::Lab) {
        return lab_to_rgb(postprocess_lab(rgb_to_lab(out), input_gray, rgb_to_lab(ref), match_chroma));
    }
    return yuv_to_rgb(postprocess_yuv(rgb_to_yuv(out), input_gray, rgb_to_yuv(ref), match_chroma));
}

}  // namespace diffcolor

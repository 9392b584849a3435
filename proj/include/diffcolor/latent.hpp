#pragma once

#include <cmath>
#include <vector>

#include "diffcolor/common.hpp"

namespace diffcolor {

// Planar latent grid [channel][y][x] plus the schedule step it sits at.
struct LatentTensor {
    int height = 0;
    int width = 0;
    int channels = 0;
    int timestep = 0;
    std::vector<float> data;

    LatentTensor() = default;
    LatentTensor(int h, int w, int c, int t = 0)
        : height(h), width(w), channels(c), timestep(t),
          data(static_cast<size_t>(h) * w * c, 0.0f) {
        if (h < 1 || w < 1 || c < 1) throw std::invalid_argument("LatentTensor: bad shape");
    }

    float& at(int c, int y, int x) {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }
    float at(int c, int y, int x) const {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }
    size_t size() const { return data.size(); }
    size_t plane_size() const { return static_cast<size_t>(height) * width; }
    float* plane(int c) { return data.data() + static_cast<size_t>(c) * plane_size(); }
    const float* plane(int c) const { return data.data() + static_cast<size_t>(c) * plane_size(); }

    bool same_shape(const LatentTensor& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

inline void require_same_shape(const LatentTensor& a, const LatentTensor& b, const char* where) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument(strf("%s: shape mismatch (%dx%dx%d vs %dx%dx%d)", where,
                                         a.height, a.width, a.channels, b.height, b.width,
                                         b.channels));
    }
}

}  // namespace diffcolor

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ego/rng.hpp"

namespace ego {

/// Dense C x H x W grid of reals, row-major within each channel.
/// Serves both as the optimized latent (x0, x_t) and as intermediate
/// feature maps; float in production, double in gradient-test mode.
template <typename T>
struct Image {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<T> values;

    Image() = default;
    Image(int c, int h, int w)
        : channels(c), height(h), width(w), values(static_cast<std::size_t>(c) * h * w, T(0)) {
        if (c <= 0 || h <= 0 || w <= 0)
            throw std::invalid_argument("Image: dimensions must be positive");
    }

    std::size_t size() const { return values.size(); }
    int plane() const { return height * width; }

    T& at(int c, int y, int x) {
        return values[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    T at(int c, int y, int x) const {
        return values[(static_cast<std::size_t>(c) * height + y) * width + x];
    }

    T* channel(int c) { return values.data() + static_cast<std::size_t>(c) * plane(); }
    const T* channel(int c) const { return values.data() + static_cast<std::size_t>(c) * plane(); }

    bool same_shape(const Image& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }

    void fill(T v) { values.assign(values.size(), v); }

    bool all_finite() const {
        for (T v : values)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    template <typename U>
    Image<U> cast() const {
        Image<U> out(channels, height, width);
        for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = static_cast<U>(values[i]);
        return out;
    }
};

using LatentImage = Image<float>;

/// Intermediate denoiser activation plus where it came from.
template <typename T>
struct FeatureMap {
    Image<T> data;
    int timestep = 0;
    int tap = 0;
};

template <typename T>
void check_same_shape(const Image<T>& a, const Image<T>& b, const char* what) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                    std::to_string(a.channels) + "x" + std::to_string(a.height) +
                                    "x" + std::to_string(a.width) + " vs " +
                                    std::to_string(b.channels) + "x" + std::to_string(b.height) +
                                    "x" + std::to_string(b.width) + ")");
}

template <typename T>
Image<T> operator+(const Image<T>& a, const Image<T>& b) {
    check_same_shape(a, b, "operator+");
    Image<T> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += b.values[i];
    return out;
}

template <typename T>
Image<T> operator-(const Image<T>& a, const Image<T>& b) {
    check_same_shape(a, b, "operator-");
    Image<T> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

template <typename T>
Image<T> operator*(T s, const Image<T>& a) {
    Image<T> out = a;
    for (auto& v : out.values) v *= s;
    return out;
}

/// y += s * x
template <typename T>
void axpy(T s, const Image<T>& x, Image<T>& y) {
    check_same_shape(x, y, "axpy");
    for (std::size_t i = 0; i < x.size(); ++i) y.values[i] += s * x.values[i];
}

template <typename T>
T dot(const Image<T>& a, const Image<T>& b) {
    check_same_shape(a, b, "dot");
    T acc = T(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a.values[i] * b.values[i];
    return acc;
}

template <typename T>
T squared_norm(const Image<T>& a) {
    T acc = T(0);
    for (T v : a.values) acc += v * v;
    return acc;
}

template <typename T>
T max_abs_diff(const Image<T>& a, const Image<T>& b) {
    check_same_shape(a, b, "max_abs_diff");
    T m = T(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        T d = std::abs(a.values[i] - b.values[i]);
        if (d > m) m = d;
    }
    return m;
}

template <typename T>
Image<T> random_normal_image(int c, int h, int w, Rng& rng) {
    Image<T> out(c, h, w);
    for (auto& v : out.values) v = static_cast<T>(rng.normal());
    return out;
}

}  // namespace ego

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vcp {

/// Row-major 8-bit image, C = 1 (gray) or 3 (RGB), samples interleaved.
struct ImageTensor {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    ImageTensor() = default;
    ImageTensor(int w, int h, int c, std::uint8_t fill = 0)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {}

    std::uint8_t& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    bool same_shape(const ImageTensor& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
    bool operator==(const ImageTensor& o) const = default;
};

/// Rec.601 luma for RGB, plain mean for gray.
double mean_luminance(const ImageTensor& img);

/// Binary PPM (P6) for 3-channel, binary PGM (P5) for 1-channel images.
/// write_image picks the format from the channel count; read_image from the magic.
void write_image(const ImageTensor& img, const std::string& path);
ImageTensor read_image(const std::string& path);

}  // namespace vcp

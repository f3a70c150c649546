// SPDX-License-Identifier: Apache-2.0
#include "vcp/image.hpp"

#include <fstream>
#include <stdexcept>

namespace vcp {

double mean_luminance(const ImageTensor& img) {
    if (img.data.empty()) return 0.0;
    double sum = 0.0;
    if (img.channels == 3) {
        for (std::size_t i = 0; i + 2 < img.data.size(); i += 3)
            sum += 0.299 * img.data[i] + 0.587 * img.data[i + 1] + 0.114 * img.data[i + 2];
        return sum / (static_cast<double>(img.width) * img.height);
    }
    for (auto v : img.data) sum += v;
    return sum / static_cast<double>(img.data.size());
}

void write_image(const ImageTensor& img, const std::string& path) {
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("write_image: channels must be 1 or 3");
    if (img.data.size() != static_cast<std::size_t>(img.width) * img.height * img.channels)
        throw std::invalid_argument("write_image: data size does not match dimensions");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write image: " + path);
    out << (img.channels == 3 ? "P6" : "P5") << "\n"
        << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out) throw std::runtime_error("short write: " + path);
}

ImageTensor read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read image: " + path);
    std::string magic;
    in >> magic;
    int channels = 0;
    if (magic == "P6") channels = 3;
    else if (magic == "P5") channels = 1;
    else throw std::runtime_error("unsupported image format in " + path);
    int w = 0, h = 0, maxval = 0;
    in >> w >> h >> maxval;
    if (!in || w <= 0 || h <= 0 || maxval != 255)
        throw std::runtime_error("malformed image header in " + path);
    in.get();  // single whitespace after maxval
    ImageTensor img(w, h, channels);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.data.size()))
        throw std::runtime_error("truncated image data in " + path);
    return img;
}

}  // namespace vcp

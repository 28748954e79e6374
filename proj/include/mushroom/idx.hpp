#ifndef MUSHROOM_IDX_HPP
#define MUSHROOM_IDX_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "mushroom/errors.hpp"

// IDX container parsing for the MNIST-family datasets. Images are normalized
// to [0,1] (exactly v/255) at parse time; labels are raw class indices.

namespace mushroom {

struct ImageSet {
    std::uint32_t count = 0;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<float> pixels; // count*rows*cols, row-major per image

    std::uint32_t image_size() const { return rows * cols; }
    std::span<const float> image(std::uint32_t i) const {
        return {pixels.data() + static_cast<std::size_t>(i) * image_size(), image_size()};
    }
};

struct LabelSet {
    std::uint32_t count = 0;
    std::vector<std::uint8_t> labels;
};

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

ImageSet parse_idx_images(std::span<const std::uint8_t> raw);
LabelSet parse_idx_labels(std::span<const std::uint8_t> raw);

// Inverse of the parsers; serialize(parse(raw)) == raw for valid input.
std::vector<std::uint8_t> serialize_idx_images(const ImageSet& set);
std::vector<std::uint8_t> serialize_idx_labels(const LabelSet& set);

ImageSet load_idx_images(const std::filesystem::path& file);
LabelSet load_idx_labels(const std::filesystem::path& file);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& file);
void write_file_bytes(const std::filesystem::path& file,
                      std::span<const std::uint8_t> bytes);

} // namespace mushroom

#endif

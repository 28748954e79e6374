#include "mushroom/idx.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mushroom {

namespace {

std::uint32_t read_be32(std::span<const std::uint8_t> raw, std::size_t off) {
    return (std::uint32_t(raw[off]) << 24) | (std::uint32_t(raw[off + 1]) << 16) |
           (std::uint32_t(raw[off + 2]) << 8) | std::uint32_t(raw[off + 3]);
}

void write_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v >> 24));
    out.push_back(std::uint8_t(v >> 16));
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v));
}

} // namespace

ImageSet parse_idx_images(std::span<const std::uint8_t> raw) {
    if (raw.size() < 16) throw FormatError("idx image file shorter than its 16-byte header");
    std::uint32_t magic = read_be32(raw, 0);
    if (magic != kIdxImageMagic) {
        std::ostringstream os;
        os << "bad idx image magic 0x" << std::hex << magic << ", expected 0x803";
        throw FormatError(os.str());
    }
    ImageSet set;
    set.count = read_be32(raw, 4);
    set.rows = read_be32(raw, 8);
    set.cols = read_be32(raw, 12);
    std::size_t expected = std::size_t(set.count) * set.rows * set.cols;
    if (raw.size() - 16 != expected) {
        std::ostringstream os;
        os << "idx image payload holds " << raw.size() - 16 << " bytes, header claims "
           << expected;
        throw LengthError(os.str());
    }
    set.pixels.resize(expected);
    const float scale = 1.0f / 255.0f;
    for (std::size_t i = 0; i < expected; ++i)
        set.pixels[i] = float(raw[16 + i]) * scale;
    return set;
}

LabelSet parse_idx_labels(std::span<const std::uint8_t> raw) {
    if (raw.size() < 8) throw FormatError("idx label file shorter than its 8-byte header");
    std::uint32_t magic = read_be32(raw, 0);
    if (magic != kIdxLabelMagic) {
        std::ostringstream os;
        os << "bad idx label magic 0x" << std::hex << magic << ", expected 0x801";
        throw FormatError(os.str());
    }
    LabelSet set;
    set.count = read_be32(raw, 4);
    if (raw.size() - 8 != set.count) {
        std::ostringstream os;
        os << "idx label payload holds " << raw.size() - 8 << " bytes, header claims "
           << set.count;
        throw LengthError(os.str());
    }
    set.labels.assign(raw.begin() + 8, raw.end());
    return set;
}

std::vector<std::uint8_t> serialize_idx_images(const ImageSet& set) {
    std::vector<std::uint8_t> out;
    out.reserve(16 + set.pixels.size());
    write_be32(out, kIdxImageMagic);
    write_be32(out, set.count);
    write_be32(out, set.rows);
    write_be32(out, set.cols);
    for (float p : set.pixels)
        out.push_back(std::uint8_t(std::lround(p * 255.0f)));
    return out;
}

std::vector<std::uint8_t> serialize_idx_labels(const LabelSet& set) {
    std::vector<std::uint8_t> out;
    out.reserve(8 + set.labels.size());
    write_be32(out, kIdxLabelMagic);
    write_be32(out, set.count);
    out.insert(out.end(), set.labels.begin(), set.labels.end());
    return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file_bytes(const std::filesystem::path& file,
                      std::span<const std::uint8_t> bytes) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

ImageSet load_idx_images(const std::filesystem::path& file) {
    auto bytes = read_file_bytes(file);
    try {
        return parse_idx_images(bytes);
    } catch (const std::exception& e) {
        throw std::runtime_error(file.string() + ": " + e.what());
    }
}

LabelSet load_idx_labels(const std::filesystem::path& file) {
    auto bytes = read_file_bytes(file);
    try {
        return parse_idx_labels(bytes);
    } catch (const std::exception& e) {
        throw std::runtime_error(file.string() + ": " + e.what());
    }
}

} // namespace mushroom

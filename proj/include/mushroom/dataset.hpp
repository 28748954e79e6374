#ifndef MUSHROOM_DATASET_HPP
#define MUSHROOM_DATASET_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mushroom/idx.hpp"

namespace mushroom {

inline constexpr int kNumClasses = 10;

struct Dataset {
    ImageSet train_images;
    LabelSet train_labels;
    ImageSet test_images;
    LabelSet test_labels;
};

// The four-file layout under <data_dir>/<dataset_id>/.
struct DatasetFile {
    const char* name;
    const char* sha256; // empty when no reference digest is known
    const char* url;    // gzipped source for `data --fetch`
};

// Known dataset ids: "mnist", "fashion-mnist".
const std::array<DatasetFile, 4>& dataset_files(const std::string& dataset_id);
bool known_dataset(const std::string& dataset_id);

// Data directory resolution: explicit dir if nonempty, else $MUSHROOM_DATA_DIR.
std::filesystem::path resolve_data_dir(const std::string& explicit_dir);

// Loads the four files and validates pairing (counts match, labels < 10).
Dataset load_dataset(const std::string& dataset_id, const std::filesystem::path& data_dir);

// The first n entries of the seeded permutation of 0..total-1, in draw order.
// Trainers iterate this order directly; subsample() materializes the pairs.
std::vector<std::uint32_t> subsample_indices(std::uint32_t total, std::uint32_t n,
                                             std::uint64_t seed);

std::pair<ImageSet, LabelSet> subsample(const ImageSet& images, const LabelSet& labels,
                                        std::uint32_t n, std::uint64_t seed);

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_file(const std::filesystem::path& file);

} // namespace mushroom

#endif

#include "mushroom/dataset.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "mushroom/rng.hpp"

namespace mushroom {

namespace {

// Digests are for the uncompressed IDX files. FashionMNIST mirrors publish
// checksums for the gzipped archives only, so no uncompressed reference is
// pinned for it; `data` reports the computed digest instead of verifying.
const std::array<DatasetFile, 4> kMnistFiles = {{
    {"train-images-idx3-ubyte",
     "ba891046e6505d7aadcbbe25680a0738ad16aec93bde7f9b65e87a2fc25776db",
     "https://ossci-datasets.s3.amazonaws.com/mnist/train-images-idx3-ubyte.gz"},
    {"train-labels-idx1-ubyte",
     "65a50cbbf4e906d70832878ad85ccda5333a97f0f4c3dd2ef09a8a9eef7101c5",
     "https://ossci-datasets.s3.amazonaws.com/mnist/train-labels-idx1-ubyte.gz"},
    {"t10k-images-idx3-ubyte",
     "0fa7898d509279e482958e8ce81c8e77db3f2f8254e26661ceb7762c4d494ce7",
     "https://ossci-datasets.s3.amazonaws.com/mnist/t10k-images-idx3-ubyte.gz"},
    {"t10k-labels-idx1-ubyte",
     "ff7bcfd416de33731a308c3f266cc351222c34898ecbeaf847f06e48f7ec33f2",
     "https://ossci-datasets.s3.amazonaws.com/mnist/t10k-labels-idx1-ubyte.gz"},
}};

const std::array<DatasetFile, 4> kFashionFiles = {{
    {"train-images-idx3-ubyte", "",
     "http://fashion-mnist.s3-website.eu-central-1.amazonaws.com/train-images-idx3-ubyte.gz"},
    {"train-labels-idx1-ubyte", "",
     "http://fashion-mnist.s3-website.eu-central-1.amazonaws.com/train-labels-idx1-ubyte.gz"},
    {"t10k-images-idx3-ubyte", "",
     "http://fashion-mnist.s3-website.eu-central-1.amazonaws.com/t10k-images-idx3-ubyte.gz"},
    {"t10k-labels-idx1-ubyte", "",
     "http://fashion-mnist.s3-website.eu-central-1.amazonaws.com/t10k-labels-idx1-ubyte.gz"},
}};

} // namespace

const std::array<DatasetFile, 4>& dataset_files(const std::string& dataset_id) {
    if (dataset_id == "mnist") return kMnistFiles;
    if (dataset_id == "fashion-mnist") return kFashionFiles;
    throw std::invalid_argument("unknown dataset '" + dataset_id +
                                "', expected mnist or fashion-mnist");
}

bool known_dataset(const std::string& dataset_id) {
    return dataset_id == "mnist" || dataset_id == "fashion-mnist";
}

std::filesystem::path resolve_data_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("MUSHROOM_DATA_DIR"); env && *env) return env;
    throw std::runtime_error(
        "no data directory: set MUSHROOM_DATA_DIR or pass --data-dir");
}

Dataset load_dataset(const std::string& dataset_id,
                     const std::filesystem::path& data_dir) {
    const auto& files = dataset_files(dataset_id);
    auto dir = data_dir / dataset_id;
    Dataset ds;
    ds.train_images = load_idx_images(dir / files[0].name);
    ds.train_labels = load_idx_labels(dir / files[1].name);
    ds.test_images = load_idx_images(dir / files[2].name);
    ds.test_labels = load_idx_labels(dir / files[3].name);

    auto check_pair = [&](const ImageSet& im, const LabelSet& lb, const char* split) {
        if (im.count != lb.count) {
            std::ostringstream os;
            os << dataset_id << " " << split << ": " << im.count << " images but "
               << lb.count << " labels";
            throw LengthError(os.str());
        }
        for (std::size_t i = 0; i < lb.labels.size(); ++i) {
            if (lb.labels[i] >= kNumClasses) {
                std::ostringstream os;
                os << dataset_id << " " << split << ": label " << int(lb.labels[i])
                   << " at index " << i << " exceeds " << kNumClasses - 1;
                throw FormatError(os.str());
            }
        }
    };
    check_pair(ds.train_images, ds.train_labels, "train");
    check_pair(ds.test_images, ds.test_labels, "test");
    return ds;
}

std::vector<std::uint32_t> subsample_indices(std::uint32_t total, std::uint32_t n,
                                             std::uint64_t seed) {
    if (n > total) {
        std::ostringstream os;
        os << "subsample of " << n << " from " << total << " items";
        throw std::invalid_argument(os.str());
    }
    Rng rng = make_rng(seed);
    return sample_without_replacement(rng, total, n);
}

std::pair<ImageSet, LabelSet> subsample(const ImageSet& images, const LabelSet& labels,
                                        std::uint32_t n, std::uint64_t seed) {
    if (images.count != labels.count)
        throw std::invalid_argument("subsample: image/label counts differ");
    auto idx = subsample_indices(images.count, n, seed);
    ImageSet im;
    im.count = n;
    im.rows = images.rows;
    im.cols = images.cols;
    im.pixels.reserve(std::size_t(n) * images.image_size());
    LabelSet lb;
    lb.count = n;
    lb.labels.reserve(n);
    for (auto i : idx) {
        auto src = images.image(i);
        im.pixels.insert(im.pixels.end(), src.begin(), src.end());
        lb.labels.push_back(labels.labels[i]);
    }
    return {std::move(im), std::move(lb)};
}

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string sha256_file(const std::filesystem::path& file) {
    auto bytes = read_file_bytes(file);
    return sha256_hex(bytes);
}

} // namespace mushroom

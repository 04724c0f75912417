#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclesteg/image.hpp"
#include "cyclesteg/message_codec.hpp"
#include "cyclesteg/methods.hpp"
#include "cyclesteg/metrics.hpp"

namespace cyclesteg {

enum class ExperimentMode {
  SameCipherManyImages,    // "images": one row per cover image
  SameCipherManySizes,     // "sizes": one row per cover dimension
  VariableCipherOneImage,  // "cipher": one row per cipher size, single cover
};

std::string_view to_string(ExperimentMode mode) noexcept;
ExperimentMode parse_experiment_mode(std::string_view text);  // throws InvalidArgument

inline constexpr std::size_t kBytesPerKb = 1024;

// size_kb * 1024 pseudorandom bytes from a 64-bit Mersenne twister. The stream
// for a larger size extends the stream for a smaller one with the same seed.
Bytes generate_cipher(std::uint64_t seed, std::size_t size_kb);

// Key used for the keyed method when the caller supplies none.
StegoKey default_bench_key(std::uint64_t seed);

struct LabeledImage {
  std::string label;
  RgbImage image;
};

struct ExperimentSpec {
  ExperimentMode mode = ExperimentMode::VariableCipherOneImage;
  std::vector<LabeledImage> images;
  std::vector<std::size_t> cipher_sizes_kb;
  std::vector<MethodId> methods{kAllMethods.begin(), kAllMethods.end()};
  std::uint64_t seed = 1;
  std::optional<StegoKey> key;
  CmaxMode cmax_mode = CmaxMode::Fixed255;
  bool parallel = false;
};

struct ResultCell {
  std::optional<MetricsReport> metrics;
  std::string error;  // set when the cell failed

  bool ok() const noexcept { return metrics.has_value(); }
};

struct ResultRow {
  std::string label;
  std::vector<ResultCell> cells;  // parallel to ResultTable::methods
};

struct ResultTable {
  std::string title;
  std::string row_header;
  std::vector<MethodId> methods;  // always in kAllMethods order
  std::vector<ResultRow> rows;

  const ResultCell& cell(std::size_t row, MethodId method) const;
};

// Throws InvalidArgument when the spec is malformed (wrong image/size count
// for the mode). Per-cell codec failures are recorded in the cell instead.
ResultTable run_experiment(const ExperimentSpec& spec);

enum class TableFormat { Csv, Markdown };
TableFormat parse_table_format(std::string_view text);  // throws InvalidArgument

std::string emit_table(const ResultTable& table, TableFormat format);

// Inverse of the CSV rendering. Failed cells come back with their message;
// cmax details are not part of the CSV and are left at their defaults.
ResultTable parse_table_csv(std::string_view csv);

}  // namespace cyclesteg

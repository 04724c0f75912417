#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "cyclesteg/image.hpp"

namespace cyclesteg {

// Peak value used in PSNR: the fixed 8-bit maximum, or the largest sample
// observed across both images.
enum class CmaxMode { Fixed255, PaperObservedMax };

std::string_view to_string(CmaxMode mode) noexcept;  // "255" / "paper"
CmaxMode parse_cmax_mode(std::string_view text);      // throws InvalidArgument

struct MseResult {
  std::array<std::uint64_t, 3> squared_error_sum{};  // per channel
  std::array<double, 3> per_channel{};
  double combined = 0.0;  // mean of the three channels
};

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +inf when the images are identical
  CmaxMode cmax_mode = CmaxMode::Fixed255;
  int cmax_used = 255;
  std::array<double, 3> per_channel_mse{};

  bool identical() const noexcept { return mse == 0.0; }
};

// Throws DimensionMismatch.
MseResult mse(const RgbImage& cover, const RgbImage& stego);

// Largest sample value over all channels of both images.
int observed_cmax(const RgbImage& cover, const RgbImage& stego);

// 10 log10(cmax^2 / mse); +inf for mse == 0.
double psnr_from_mse(double mse_value, double cmax);

MetricsReport psnr(const RgbImage& cover, const RgbImage& stego,
                   CmaxMode mode = CmaxMode::Fixed255);

struct Histogram {
  std::array<std::array<std::uint64_t, 256>, 3> bins{};

  const std::array<std::uint64_t, 256>& channel(Channel c) const {
    return bins[static_cast<std::size_t>(c)];
  }
};

Histogram histogram(const RgbImage& image);

struct HistogramDelta {
  std::array<std::array<std::uint64_t, 256>, 3> abs_diff{};
  std::array<std::uint64_t, 3> l1{};
  std::uint64_t total_l1 = 0;
};

// Throws DimensionMismatch.
HistogramDelta histogram_delta(const RgbImage& cover, const RgbImage& stego);

// "channel,bin,count" rows for all three channels.
std::string histogram_csv(const Histogram& hist);

// "inf" for infinities, otherwise the shortest round-trip representation.
std::string format_double(double value);

struct MetricsRecord {
  std::string method;
  std::string image;
  std::uint64_t payload_bytes = 0;
  MetricsReport report;
};

// One line of space separated key=value pairs:
// method, image, payload_bytes, mse, psnr_db, cmax_mode.
std::string format_metrics_kv(const MetricsRecord& record);

}  // namespace cyclesteg

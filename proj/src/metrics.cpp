#include "cyclesteg/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "cyclesteg/error.hpp"

namespace cyclesteg {

std::string_view to_string(CmaxMode mode) noexcept {
  return mode == CmaxMode::Fixed255 ? "255" : "paper";
}

CmaxMode parse_cmax_mode(std::string_view text) {
  if (text == "255") return CmaxMode::Fixed255;
  if (text == "paper") return CmaxMode::PaperObservedMax;
  throw Error(ErrorCode::InvalidArgument,
              "unknown cmax mode '" + std::string(text) + "' (expected paper or 255)");
}

namespace {

void require_same_shape(const RgbImage& a, const RgbImage& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw Error(ErrorCode::DimensionMismatch,
                "image dimensions differ: " + std::to_string(a.width()) + "x" +
                    std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                    "x" + std::to_string(b.height()));
}

}  // namespace

MseResult mse(const RgbImage& cover, const RgbImage& stego) {
  require_same_shape(cover, stego);
  MseResult result;
  const auto n = static_cast<double>(cover.pixel_count());
  std::uint64_t total = 0;
  for (Channel c : kChannels) {
    const auto a = cover.plane(c).samples();
    const auto b = stego.plane(c).samples();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int d = int{b[i]} - int{a[i]};
      sum += static_cast<std::uint64_t>(d * d);
    }
    const auto idx = static_cast<std::size_t>(c);
    result.squared_error_sum[idx] = sum;
    result.per_channel[idx] = static_cast<double>(sum) / n;
    total += sum;
  }
  result.combined = static_cast<double>(total) / (3.0 * n);
  return result;
}

int observed_cmax(const RgbImage& cover, const RgbImage& stego) {
  int peak = 0;
  for (const RgbImage* image : {&cover, &stego})
    for (Channel c : kChannels) {
      const auto s = image->plane(c).samples();
      peak = std::max(peak, int{*std::max_element(s.begin(), s.end())});
    }
  return peak;
}

double psnr_from_mse(double mse_value, double cmax) {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(cmax * cmax / mse_value);
}

MetricsReport psnr(const RgbImage& cover, const RgbImage& stego, CmaxMode mode) {
  const MseResult m = mse(cover, stego);
  MetricsReport report;
  report.mse = m.combined;
  report.per_channel_mse = m.per_channel;
  report.cmax_mode = mode;
  report.cmax_used = mode == CmaxMode::Fixed255 ? 255 : observed_cmax(cover, stego);
  report.psnr_db = psnr_from_mse(m.combined, report.cmax_used);
  return report;
}

Histogram histogram(const RgbImage& image) {
  Histogram hist;
  for (Channel c : kChannels) {
    auto& bins = hist.bins[static_cast<std::size_t>(c)];
    for (std::uint8_t v : image.plane(c).samples()) ++bins[v];
  }
  return hist;
}

HistogramDelta histogram_delta(const RgbImage& cover, const RgbImage& stego) {
  require_same_shape(cover, stego);
  const Histogram a = histogram(cover);
  const Histogram b = histogram(stego);
  HistogramDelta delta;
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t v = 0; v < 256; ++v) {
      const auto x = a.bins[c][v];
      const auto y = b.bins[c][v];
      delta.abs_diff[c][v] = x > y ? x - y : y - x;
      delta.l1[c] += delta.abs_diff[c][v];
    }
    delta.total_l1 += delta.l1[c];
  }
  return delta;
}

std::string histogram_csv(const Histogram& hist) {
  std::ostringstream out;
  out << "channel,bin,count\n";
  for (Channel c : kChannels)
    for (std::size_t v = 0; v < 256; ++v)
      out << to_string(c) << ',' << v << ',' << hist.channel(c)[v] << '\n';
  return out.str();
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string format_metrics_kv(const MetricsRecord& record) {
  std::ostringstream out;
  out << "method=" << record.method << " image=" << record.image
      << " payload_bytes=" << record.payload_bytes
      << " mse=" << format_double(record.report.mse)
      << " psnr_db=" << format_double(record.report.psnr_db)
      << " cmax_mode=" << to_string(record.report.cmax_mode);
  return out.str();
}

}  // namespace cyclesteg

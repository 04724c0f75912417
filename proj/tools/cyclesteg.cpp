// cyclesteg: hide, recover and evaluate messages in PNG images with the
// cyclic RGB, blue-channel LSB and keyed (Karim) methods.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "cyclesteg/bench.hpp"
#include "cyclesteg/error.hpp"
#include "cyclesteg/methods.hpp"
#include "cyclesteg/metrics.hpp"
#include "cyclesteg/png_io.hpp"

namespace fs = std::filesystem;
using namespace cyclesteg;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kFormat = 3,
  kCapacity = 4,
  kKey = 5,
  kTruncated = 6,
  kDimension = 7,
};

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage or invalid argument\n"
    "  2  file not found / I/O error\n"
    "  3  unsupported image format\n"
    "  4  payload exceeds image capacity\n"
    "  5  key missing, unexpected or invalid\n"
    "  6  truncated header or body (length header larger than the image holds)\n"
    "  7  image dimension mismatch";

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::FileNotFound:
    case ErrorCode::IoError: return kIo;
    case ErrorCode::UnsupportedFormat: return kFormat;
    case ErrorCode::PayloadExceedsCapacity:
    case ErrorCode::RequestExceedsCapacity:
    case ErrorCode::PayloadTooLarge: return kCapacity;
    case ErrorCode::MissingKey:
    case ErrorCode::UnexpectedKey:
    case ErrorCode::InvalidKey: return kKey;
    case ErrorCode::TruncatedHeader:
    case ErrorCode::TruncatedBody: return kTruncated;
    case ErrorCode::DimensionMismatch: return kDimension;
    case ErrorCode::NonOctetLength:
    case ErrorCode::InvalidArgument: return kUsage;
  }
  return kUsage;
}

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, const Bytes& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

std::optional<StegoKey> parse_key(const std::string& hex) {
  if (hex.empty()) return std::nullopt;
  return StegoKey::from_hex(hex);
}

struct EmbedArgs {
  std::string cover, data_file, text, method, key, out;
};

int cmd_embed(const EmbedArgs& a) {
  const MethodId method = parse_method(a.method);
  const auto key = parse_key(a.key);
  const RgbImage cover = load_image(a.cover);
  const Bytes data = a.data_file.empty() ? Bytes(a.text.begin(), a.text.end())
                                         : read_file(a.data_file);
  const EmbedReport report = embed_message(cover, data, method, key);
  save_image(report.stego, a.out);

  MetricsRecord record{std::string(to_string(method)), a.cover, data.size(),
                       psnr(cover, report.stego, CmaxMode::Fixed255)};
  std::cout << format_metrics_kv(record) << " bits_embedded=" << report.bits_embedded
            << " samples_changed=" << report.samples_changed << '\n';
  return kOk;
}

struct ExtractArgs {
  std::string stego, method, key, out;
};

int cmd_extract(const ExtractArgs& a) {
  const MethodId method = parse_method(a.method);
  const auto key = parse_key(a.key);
  const RgbImage stego = load_image(a.stego);
  const Bytes data = extract_message(stego, method, key);
  write_file(a.out, data);
  std::cout << "extracted " << data.size() << " bytes to " << a.out << '\n';
  return kOk;
}

struct EvalArgs {
  std::string cover, stego, cmax = "255";
};

int cmd_eval(const EvalArgs& a) {
  const CmaxMode mode = parse_cmax_mode(a.cmax);
  const RgbImage cover = load_image(a.cover);
  const RgbImage stego = load_image(a.stego);
  const MetricsReport m = psnr(cover, stego, mode);
  const HistogramDelta delta = histogram_delta(cover, stego);

  std::cout << "MSE: " << format_double(m.mse) << '\n'
            << "MSE per channel: R " << format_double(m.per_channel_mse[0]) << ", G "
            << format_double(m.per_channel_mse[1]) << ", B "
            << format_double(m.per_channel_mse[2]) << '\n'
            << "PSNR: " << (m.identical() ? "inf" : format_double(m.psnr_db) + " dB") << '\n'
            << "Cmax: " << m.cmax_used << " (" << to_string(mode) << ")\n"
            << "Histogram L1: R " << delta.l1[0] << ", G " << delta.l1[1] << ", B "
            << delta.l1[2] << ", total " << delta.total_l1 << '\n';
  return kOk;
}

struct HistArgs {
  std::string image, out;
};

int cmd_hist(const HistArgs& a) {
  const std::string csv = histogram_csv(histogram(load_image(a.image)));
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    write_file(a.out, Bytes(csv.begin(), csv.end()));
  }
  return kOk;
}

struct BenchArgs {
  std::string mode;
  std::vector<std::string> images;
  std::vector<std::size_t> sizes_kb;
  std::uint64_t seed = 1;
  std::string key, format = "csv", cmax = "255";
};

int cmd_bench(const BenchArgs& a) {
  ExperimentSpec spec;
  spec.mode = parse_experiment_mode(a.mode);
  spec.seed = a.seed;
  spec.key = parse_key(a.key);
  spec.cmax_mode = parse_cmax_mode(a.cmax);
  spec.parallel = true;
  const TableFormat format = parse_table_format(a.format);
  if (!a.sizes_kb.empty())
    spec.cipher_sizes_kb = a.sizes_kb;
  else if (spec.mode == ExperimentMode::VariableCipherOneImage)
    spec.cipher_sizes_kb = {2, 4, 6, 8};
  else
    spec.cipher_sizes_kb = {2};
  for (const auto& path : a.images)
    spec.images.push_back({fs::path(path).filename().string(), load_image(path)});

  const ResultTable table = run_experiment(spec);
  std::cout << emit_table(table, format);
  if (format == TableFormat::Markdown) std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclesteg - cyclic RGB LSB steganography and benchmark tool"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  const std::vector<std::string> methods = {"lsb", "karim", "cyclic"};
  const std::vector<std::string> cmax_modes = {"paper", "255"};

  EmbedArgs embed_args;
  auto* embed = app.add_subcommand("embed", "Hide a message in a cover PNG");
  embed->add_option("--cover", embed_args.cover, "Cover PNG")->required();
  auto* data_opt = embed->add_option("--data", embed_args.data_file, "File with the secret bytes");
  auto* text_opt = embed->add_option("--text", embed_args.text, "Secret message given inline");
  data_opt->excludes(text_opt);
  embed->add_option("--method", embed_args.method, "Embedding method")
      ->required()
      ->check(CLI::IsMember(methods));
  embed->add_option("--key", embed_args.key, "Hex key (karim only)");
  embed->add_option("--out", embed_args.out, "Stego PNG to write")->required();

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "Recover a message from a stego PNG");
  extract->add_option("--stego", extract_args.stego, "Stego PNG")->required();
  extract->add_option("--method", extract_args.method, "Embedding method")
      ->required()
      ->check(CLI::IsMember(methods));
  extract->add_option("--key", extract_args.key, "Hex key (karim only)");
  extract->add_option("--out", extract_args.out, "File for the recovered bytes")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "MSE, PSNR and histogram change between two PNGs");
  eval->add_option("--cover", eval_args.cover, "Cover PNG")->required();
  eval->add_option("--stego", eval_args.stego, "Stego PNG")->required();
  eval->add_option("--cmax", eval_args.cmax, "PSNR peak: 255 or paper (max observed sample)")
      ->check(CLI::IsMember(cmax_modes));

  HistArgs hist_args;
  auto* hist = app.add_subcommand("hist", "Per-channel histogram as CSV (channel,bin,count)");
  hist->add_option("--image", hist_args.image, "PNG image")->required();
  hist->add_option("--out", hist_args.out, "CSV file (default: stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a PSNR comparison experiment");
  bench->add_option("--mode", bench_args.mode, "images, sizes or cipher")
      ->required()
      ->check(CLI::IsMember({"images", "sizes", "cipher"}));
  bench->add_option("--images", bench_args.images, "Cover PNGs")->required();
  bench->add_option("--sizes-kb", bench_args.sizes_kb,
                    "Cipher sizes in KB (default 2,4,6,8 for cipher mode, 2 otherwise)")
      ->delimiter(',');
  bench->add_option("--seed", bench_args.seed, "Seed for the pseudorandom cipher");
  bench->add_option("--key", bench_args.key, "Hex key for karim (default derived from seed)");
  bench->add_option("--format", bench_args.format, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
  bench->add_option("--cmax", bench_args.cmax, "PSNR peak: 255 or paper")
      ->check(CLI::IsMember(cmax_modes));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kUsage;
  }

  try {
    if (*embed) {
      if (!*data_opt && !*text_opt) {
        std::cerr << "embed: one of --data or --text is required\n";
        return kUsage;
      }
      return cmd_embed(embed_args);
    }
    if (*extract) return cmd_extract(extract_args);
    if (*eval) return cmd_eval(eval_args);
    if (*hist) return cmd_hist(hist_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

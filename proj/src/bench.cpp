#include "cyclesteg/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "cyclesteg/error.hpp"

namespace cyclesteg {

std::string_view to_string(ExperimentMode mode) noexcept {
  switch (mode) {
    case ExperimentMode::SameCipherManyImages: return "images";
    case ExperimentMode::SameCipherManySizes: return "sizes";
    case ExperimentMode::VariableCipherOneImage: return "cipher";
  }
  return "?";
}

ExperimentMode parse_experiment_mode(std::string_view text) {
  for (auto m : {ExperimentMode::SameCipherManyImages, ExperimentMode::SameCipherManySizes,
                 ExperimentMode::VariableCipherOneImage})
    if (to_string(m) == text) return m;
  throw Error(ErrorCode::InvalidArgument, "unknown bench mode '" + std::string(text) +
                                              "' (expected images, sizes or cipher)");
}

Bytes generate_cipher(std::uint64_t seed, std::size_t size_kb) {
  Bytes out(size_kb * kBytesPerKb);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < out.size(); i += 8) {
    std::uint64_t word = rng();
    for (std::size_t j = 0; j < 8 && i + j < out.size(); ++j, word >>= 8)
      out[i + j] = static_cast<std::uint8_t>(word & 0xFFu);
  }
  return out;
}

StegoKey default_bench_key(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x6b65795f6b61726dull);
  BitSequence bits;
  for (int w = 0; w < 2; ++w) {
    const std::uint64_t word = rng();
    for (int shift = 63; shift >= 0; --shift) bits.push_back((word >> shift) & 1u);
  }
  return StegoKey(std::move(bits));
}

const ResultCell& ResultTable::cell(std::size_t row, MethodId method) const {
  for (std::size_t i = 0; i < methods.size(); ++i)
    if (methods[i] == method) return rows.at(row).cells.at(i);
  throw Error(ErrorCode::InvalidArgument,
              "method '" + std::string(to_string(method)) + "' is not in the table");
}

namespace {

struct CellTask {
  std::size_t row;
  std::size_t column;
  const RgbImage* cover;
  const BitSequence* payload;
  MethodId method;
};

ResultCell run_cell(const CellTask& task, const std::optional<StegoKey>& key,
                    CmaxMode cmax_mode) {
  ResultCell cell;
  try {
    const auto& method_key = requires_key(task.method) ? key : std::nullopt;
    const EmbedReport embedded = embed_bits(*task.cover, *task.payload, task.method, method_key);
    const BitSequence recovered =
        extract_bits(embedded.stego, task.payload->size(), task.method, method_key);
    if (recovered != *task.payload) {
      cell.error = "extracted bits differ from embedded cipher";
      return cell;
    }
    cell.metrics = psnr(*task.cover, embedded.stego, cmax_mode);
  } catch (const Error& e) {
    cell.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return cell;
}

std::string dimension_label(const RgbImage& image) {
  return std::to_string(image.width()) + "x" + std::to_string(image.height());
}

}  // namespace

ResultTable run_experiment(const ExperimentSpec& spec) {
  ResultTable table;
  for (MethodId m : kAllMethods)
    if (std::find(spec.methods.begin(), spec.methods.end(), m) != spec.methods.end())
      table.methods.push_back(m);

  switch (spec.mode) {
    case ExperimentMode::SameCipherManyImages:
      table.row_header = "Image Name";
      break;
    case ExperimentMode::SameCipherManySizes:
      table.row_header = "Image Dimensions";
      break;
    case ExperimentMode::VariableCipherOneImage:
      table.row_header = "Cipher size (KB)";
      break;
  }
  table.title = "Comparison based on PSNR (" + std::string(to_string(spec.mode)) +
                ", seed " + std::to_string(spec.seed) + ", cmax " +
                std::string(to_string(spec.cmax_mode)) + ")";
  if (table.methods.empty()) return table;

  if (spec.images.empty())
    throw Error(ErrorCode::InvalidArgument, "bench needs at least one image");
  if (spec.mode == ExperimentMode::VariableCipherOneImage) {
    if (spec.images.size() != 1)
      throw Error(ErrorCode::InvalidArgument, "cipher mode takes exactly one image");
    if (spec.cipher_sizes_kb.empty())
      throw Error(ErrorCode::InvalidArgument, "cipher mode needs at least one cipher size");
  } else if (spec.cipher_sizes_kb.size() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(spec.mode)) + " mode takes exactly one cipher size");
  }

  std::optional<StegoKey> key = spec.key;
  if (!key && std::find(table.methods.begin(), table.methods.end(), MethodId::Karim) !=
                  table.methods.end())
    key = default_bench_key(spec.seed);

  // One cipher per distinct size, shared by every cell using it.
  std::map<std::size_t, BitSequence> payloads;
  for (std::size_t kb : spec.cipher_sizes_kb)
    if (!payloads.contains(kb)) payloads.emplace(kb, bytes_to_bits(generate_cipher(spec.seed, kb)));

  std::vector<CellTask> tasks;
  auto add_row = [&](std::string label, const RgbImage& cover, std::size_t kb) {
    const std::size_t row = table.rows.size();
    table.rows.push_back({std::move(label), std::vector<ResultCell>(table.methods.size())});
    for (std::size_t col = 0; col < table.methods.size(); ++col)
      tasks.push_back({row, col, &cover, &payloads.at(kb), table.methods[col]});
  };

  if (spec.mode == ExperimentMode::VariableCipherOneImage) {
    table.title += " on " + spec.images.front().label + " " +
                   dimension_label(spec.images.front().image);
    for (std::size_t kb : spec.cipher_sizes_kb)
      add_row(std::to_string(kb), spec.images.front().image, kb);
  } else {
    const std::size_t kb = spec.cipher_sizes_kb.front();
    table.title += ", " + std::to_string(kb) + " KB cipher";
    for (const auto& img : spec.images)
      add_row(spec.mode == ExperimentMode::SameCipherManyImages ? img.label
                                                                : dimension_label(img.image),
              img.image, kb);
  }

  if (spec.parallel) {
    std::vector<std::future<ResultCell>> futures;
    futures.reserve(tasks.size());
    for (const auto& task : tasks)
      futures.push_back(std::async(std::launch::async, run_cell, std::cref(task),
                                   std::cref(key), spec.cmax_mode));
    for (std::size_t i = 0; i < tasks.size(); ++i)
      table.rows[tasks[i].row].cells[tasks[i].column] = futures[i].get();
  } else {
    for (const auto& task : tasks)
      table.rows[task.row].cells[task.column] = run_cell(task, key, spec.cmax_mode);
  }
  return table;
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::Csv;
  if (text == "md") return TableFormat::Markdown;
  throw Error(ErrorCode::InvalidArgument,
              "unknown table format '" + std::string(text) + "' (expected csv or md)");
}

namespace {

constexpr std::string_view kErrorPrefix = "error: ";

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::vector<std::string>> parse_csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool pending = false;  // something has been read for the current record
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        pending = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        pending = true;
        break;
      case '\r':
        break;
      case '\n':
        record.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(record));
        record.clear();
        pending = false;
        break;
      default:
        field += c;
        pending = true;
    }
  }
  if (in_quotes) throw Error(ErrorCode::InvalidArgument, "unterminated quoted CSV field");
  if (pending) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

double parse_number(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::InvalidArgument, "not a number in CSV: '" + text + "'");
  return value;
}

std::string fixed4(double value) {
  if (std::isinf(value)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

std::string emit_csv(const ResultTable& table) {
  std::ostringstream out;
  out << csv_field(table.row_header);
  for (MethodId m : table.methods)
    out << ',' << to_string(m) << "_psnr_db," << to_string(m) << "_mse";
  out << '\n';
  for (const auto& row : table.rows) {
    out << csv_field(row.label);
    for (const auto& cell : row.cells) {
      if (cell.ok())
        out << ',' << format_double(cell.metrics->psnr_db) << ','
            << format_double(cell.metrics->mse);
      else
        out << ',' << csv_field(std::string(kErrorPrefix) + cell.error) << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_markdown(const ResultTable& table) {
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back();
  grid.back().push_back(table.row_header);
  for (MethodId m : table.methods) grid.back().push_back(std::string(display_name(m)) + " PSNR (dB)");
  for (const auto& row : table.rows) {
    grid.emplace_back();
    grid.back().push_back(row.label);
    for (const auto& cell : row.cells)
      grid.back().push_back(cell.ok() ? fixed4(cell.metrics->psnr_db) : "failed");
  }
  std::vector<std::size_t> widths(grid.front().size(), 3);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());

  std::ostringstream out;
  out << "**" << table.title << "**\n\n";
  auto emit_line = [&](const std::vector<std::string>& line) {
    out << '|';
    for (std::size_t i = 0; i < line.size(); ++i) {
      const std::string pad(widths[i] - line[i].size(), ' ');
      // Labels left aligned, numbers right aligned.
      out << ' ' << (i == 0 ? line[i] + pad : pad + line[i]) << " |";
    }
    out << '\n';
  };
  emit_line(grid.front());
  out << '|';
  for (std::size_t i = 0; i < widths.size(); ++i)
    out << ' ' << (i == 0 ? std::string(widths[i], '-') : std::string(widths[i] - 1, '-') + ":")
        << " |";
  out << '\n';
  for (std::size_t r = 1; r < grid.size(); ++r) emit_line(grid[r]);
  for (const auto& row : table.rows)
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      if (!row.cells[i].ok())
        out << "\n- " << row.label << " / " << display_name(table.methods[i]) << ": "
            << row.cells[i].error;
  return out.str();
}

}  // namespace

std::string emit_table(const ResultTable& table, TableFormat format) {
  return format == TableFormat::Csv ? emit_csv(table) : emit_markdown(table);
}

ResultTable parse_table_csv(std::string_view csv) {
  const auto records = parse_csv_records(csv);
  if (records.empty()) throw Error(ErrorCode::InvalidArgument, "empty CSV table");
  const auto& header = records.front();
  if (header.size() % 2 != 1)
    throw Error(ErrorCode::InvalidArgument, "CSV header must have a label column plus pairs");

  ResultTable table;
  table.row_header = header[0];
  for (std::size_t i = 1; i < header.size(); i += 2) {
    const std::string& col = header[i];
    const auto cut = col.rfind("_psnr_db");
    if (cut == std::string::npos || header[i + 1] != col.substr(0, cut) + "_mse")
      throw Error(ErrorCode::InvalidArgument, "unexpected CSV column '" + col + "'");
    table.methods.push_back(parse_method(col.substr(0, cut)));
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size())
      throw Error(ErrorCode::InvalidArgument,
                  "CSV row " + std::to_string(r) + " has " + std::to_string(rec.size()) +
                      " fields, expected " + std::to_string(header.size()));
    ResultRow row{rec[0], {}};
    for (std::size_t i = 1; i < rec.size(); i += 2) {
      ResultCell cell;
      if (rec[i].starts_with(kErrorPrefix)) {
        cell.error = rec[i].substr(kErrorPrefix.size());
      } else {
        MetricsReport m;
        m.psnr_db = parse_number(rec[i]);
        m.mse = parse_number(rec[i + 1]);
        cell.metrics = m;
      }
      row.cells.push_back(std::move(cell));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cyclesteg

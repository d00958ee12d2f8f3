#include "tempograph/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "tempograph/error.hpp"

namespace tempograph {

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool parse_number(std::string_view text, double &out) {
  if (text.empty())
    return false;
  if (text.front() == '+')
    text.remove_prefix(1);
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc{} && res.ptr == text.data() + text.size();
}

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r')
    line.remove_suffix(1);
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return fields;
}

CsvTable read_csv(std::istream &in) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r")
      continue;
    if (!have_header) {
      t.header = split_csv_line(line);
      have_header = true;
    } else {
      t.rows.push_back(split_csv_line(line));
    }
  }
  if (!have_header)
    throw FileError("csv: missing header line");
  return t;
}

CsvTable read_csv_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FileError("cannot open '" + path + "'");
  return read_csv(in);
}

void write_csv(std::ostream &out, const CsvTable &table) {
  auto line = [&](const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i)
        out << ',';
      out << fields[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto &r : table.rows)
    line(r);
}

std::vector<ProcessorSpec> read_processor_csv(std::istream &in) {
  static const std::vector<std::string> kHeader = {
      "name", "year", "transistors", "die_area_mm2", "clock_mhz"};
  const CsvTable t = read_csv(in);
  if (t.header != kHeader)
    throw FileError("processor csv: header must be "
                    "name,year,transistors,die_area_mm2,clock_mhz");
  if (t.rows.empty())
    throw InvalidInput("processor csv: no data rows");

  std::vector<ProcessorSpec> specs;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto &row = t.rows[r];
    // Row 1 is the header.
    const std::string where = "processor csv row " + std::to_string(r + 2);
    if (row.size() != kHeader.size())
      throw FileError(where + ": expected 5 fields, got " +
                      std::to_string(row.size()));
    double values[4];
    for (int c = 0; c < 4; ++c) {
      if (!parse_number(row[c + 1], values[c]))
        throw FileError(where + ", column " + kHeader[c + 1] +
                        ": not a number '" + row[c + 1] + "'");
      if (!(values[c] > 0.0))
        throw InvalidInput(where + ", column " + kHeader[c + 1] +
                           ": must be positive");
    }
    if (values[0] != static_cast<int>(values[0]))
      throw FileError(where + ", column year: not an integer");
    ProcessorSpec s;
    s.name = row[0];
    s.year = static_cast<int>(values[0]);
    s.transistor_count = values[1];
    s.die_area = values[2] * 1.0e-6;
    s.clock_frequency = values[3] * 1.0e6;
    try {
      validate(s);
    } catch (const InvalidInput &e) {
      throw InvalidInput(where + ": " + e.what());
    }
    specs.push_back(std::move(s));
  }
  return specs;
}

std::vector<ProcessorSpec> read_processor_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FileError("cannot open '" + path + "'");
  return read_processor_csv(in);
}

CsvTable history_csv(std::span<const HistoryRow> rows) {
  CsvTable t;
  t.header = {"name", "year", "proc_transfer_rel", "cache_transfer_rel",
              "dispersion"};
  for (const HistoryRow &r : rows)
    t.rows.push_back({r.name, std::to_string(r.year),
                      format_number(r.proc_transfer_rel),
                      format_number(r.cache_transfer_rel),
                      format_number(r.dispersion)});
  return t;
}

CsvTable timeline_csv(const Timeline &timeline) {
  CsvTable t;
  t.header = {"time", "gate", "net", "value", "provisional"};
  for (const TimedEvent &e : timeline)
    t.rows.push_back({format_number(e.time), e.gate_id, e.net,
                      std::string(1, to_char(e.value)),
                      e.provisional ? "1" : "0"});
  return t;
}

} // namespace tempograph

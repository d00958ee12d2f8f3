#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempograph/dispersion.hpp"
#include "tempograph/gate_sim.hpp"

namespace tempograph {

// Shortest representation that parses back to the same double, always with
// '.' as decimal separator.
std::string format_number(double v);

// Locale-independent strict parse of a whole field.
bool parse_number(std::string_view text, double &out);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split_csv_line(std::string_view line);
CsvTable read_csv(std::istream &in);
CsvTable read_csv_file(const std::string &path);
void write_csv(std::ostream &out, const CsvTable &table);

// Header: name,year,transistors,die_area_mm2,clock_mhz
std::vector<ProcessorSpec> read_processor_csv(std::istream &in);
std::vector<ProcessorSpec> read_processor_csv(const std::string &path);

CsvTable history_csv(std::span<const HistoryRow> rows);
CsvTable timeline_csv(const Timeline &timeline);

} // namespace tempograph

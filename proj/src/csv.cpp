#include "ehmm/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "ehmm/errors.hpp"

namespace ehmm {

std::string format_value(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::vector<double> read_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw InvalidInput("dataset: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x")
    throw InvalidInput("dataset: expected header 't,x', got '" + line + "'");
  std::vector<double> data;
  std::int64_t expected_t = 1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw InvalidInput("dataset: malformed row '" + line + "'");
    std::int64_t t = 0;
    auto [tp, terr] = std::from_chars(line.data(), line.data() + comma, t);
    if (terr != std::errc{} || tp != line.data() + comma)
      throw InvalidInput("dataset: bad round index in '" + line + "'");
    if (t != expected_t)
      throw InvalidInput("dataset: rounds must start at 1 and be consecutive");
    ++expected_t;
    try {
      data.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw InvalidInput("dataset: bad outcome in '" + line + "'");
    }
  }
  if (data.empty()) throw InvalidInput("dataset: no rows");
  return data;
}

std::vector<double> read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("dataset: cannot open '" + path + "'");
  return read_dataset_csv(in);
}

void write_dataset_csv(std::ostream& out, const std::vector<double>& data) {
  out << "t,x\n";
  for (std::size_t i = 0; i < data.size(); ++i)
    out << (i + 1) << ',' << format_value(data[i]) << '\n';
}

}  // namespace ehmm

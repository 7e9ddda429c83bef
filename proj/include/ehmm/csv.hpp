#ifndef EHMM_CSV_HPP
#define EHMM_CSV_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ehmm {

/// 12 significant digits, '.' decimal point; "inf"/"nan" pass through.
std::string format_value(double value);

/// Reads a `t,x` dataset: header required, rounds must start at 1 and be
/// consecutive. Returns the outcomes.
std::vector<double> read_dataset_csv(std::istream& in);
std::vector<double> read_dataset_file(const std::string& path);

/// Writes a `t,x` dataset.
void write_dataset_csv(std::ostream& out, const std::vector<double>& data);

}  // namespace ehmm

#endif  // EHMM_CSV_HPP

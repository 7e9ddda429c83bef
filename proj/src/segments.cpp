#include "ehmm/segments.hpp"

#include <charconv>

namespace ehmm {

Segmentation::Segmentation(std::vector<Segment> cells)
    : cells_(std::move(cells)) {
  if (cells_.empty()) throw InvalidInput("Segmentation: empty cell list");
  if (cells_.front().start != 1)
    throw InvalidInput("Segmentation: first cell must start at round 1");
  for (std::size_t i = 1; i < cells_.size(); ++i)
    if (cells_[i].start != cells_[i - 1].end + 1)
      throw InvalidInput("Segmentation: cells must be contiguous");
}

Segmentation Segmentation::from_cut_mask(std::int64_t horizon,
                                         std::uint64_t cut_mask) {
  if (horizon < 1) throw InvalidInput("Segmentation: horizon must be >= 1");
  if (horizon > 1 && (cut_mask >> (horizon - 1)) != 0)
    throw InvalidInput("Segmentation: cut mask has bits beyond the horizon");
  std::vector<Segment> cells;
  std::int64_t start = 1;
  for (std::int64_t t = 1; t < horizon; ++t) {
    if (cut_mask & (std::uint64_t{1} << (t - 1))) {
      cells.emplace_back(start, t);
      start = t + 1;
    }
  }
  cells.emplace_back(start, horizon);
  return Segmentation(std::move(cells));
}

std::string Segmentation::to_string(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(cells_[i].start);
    out.push_back(':');
    out += std::to_string(cells_[i].end);
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidInput("Segmentation: bad integer '" + std::string(text) + "'");
  return value;
}

}  // namespace

Segmentation Segmentation::parse(std::string_view text, char sep) {
  std::vector<Segment> cells;
  while (!text.empty()) {
    const auto cut = text.find(sep);
    std::string_view item = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{}
                                         : text.substr(cut + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw InvalidInput("Segmentation: expected start:end, got '" +
                         std::string(item) + "'");
    cells.emplace_back(parse_int(item.substr(0, colon)),
                       parse_int(item.substr(colon + 1)));
  }
  return Segmentation(std::move(cells));
}

std::vector<Segmentation> enumerate_segmentations(std::int64_t horizon) {
  if (horizon < 1 || horizon > 20)
    throw LimitExceeded("enumerate_segmentations: horizon must be in 1..20");
  const std::uint64_t count = std::uint64_t{1} << (horizon - 1);
  std::vector<Segmentation> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    out.push_back(Segmentation::from_cut_mask(horizon, mask));
  return out;
}

}  // namespace ehmm

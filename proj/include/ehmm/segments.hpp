#ifndef EHMM_SEGMENTS_HPP
#define EHMM_SEGMENTS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ehmm/errors.hpp"

namespace ehmm {

/// A contiguous block of rounds start..end, 1-based and inclusive.
struct Segment {
  std::int64_t start = 1;
  std::int64_t end = 1;

  Segment() = default;
  Segment(std::int64_t s, std::int64_t e) : start(s), end(e) {
    if (s < 1 || e < s) throw InvalidInput("Segment: need 1 <= start <= end");
  }
  std::int64_t length() const { return end - start + 1; }
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// An ordered list of pairwise disjoint segments covering 1..T exactly.
class Segmentation {
 public:
  explicit Segmentation(std::vector<Segment> cells);

  static Segmentation single(std::int64_t horizon) {
    return Segmentation({Segment(1, horizon)});
  }
  // Bit i of `cut_mask` set means a boundary between rounds i+1 and i+2.
  static Segmentation from_cut_mask(std::int64_t horizon,
                                    std::uint64_t cut_mask);

  const std::vector<Segment>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  std::int64_t horizon() const { return cells_.back().end; }

  std::string to_string(char sep = ';') const;
  static Segmentation parse(std::string_view text, char sep = ';');

  friend bool operator==(const Segmentation& a, const Segmentation& b) {
    return a.cells_ == b.cells_;
  }

 private:
  std::vector<Segment> cells_;
};

/// All segmentations of 1..T, ordered by cut mask. There are 2^(T-1) of
/// them, so T is capped at 20.
std::vector<Segmentation> enumerate_segmentations(std::int64_t horizon);

/// Assigns a model/expert identifier to every cell of a segmentation.
/// Labels are stored positionally, aligned with the segmentation's cells.
template <typename M>
class Labelling {
 public:
  Labelling(const Segmentation& seg, std::vector<M> labels)
      : cells_(seg.cells()), labels_(std::move(labels)) {
    if (labels_.size() != cells_.size())
      throw InvalidInput("Labelling: one label per cell required");
  }

  const M& label(std::size_t cell_index) const { return labels_.at(cell_index); }
  const M& label_for(const Segment& cell) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i] == cell) return labels_[i];
    throw InvalidInput("Labelling: segment is not a cell of the segmentation");
  }
  const std::vector<M>& labels() const { return labels_; }
  const std::vector<Segment>& cells() const { return cells_; }
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<Segment> cells_;
  std::vector<M> labels_;
};

}  // namespace ehmm

#endif  // EHMM_SEGMENTS_HPP

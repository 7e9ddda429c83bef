#ifndef EHMM_DISTRIBUTION_HPP
#define EHMM_DISTRIBUTION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ehmm/errors.hpp"
#include "ehmm/log_math.hpp"

namespace ehmm {

/// A finite probability distribution with deterministic iteration order.
/// Entries are sorted by key, strictly positive, and sum to 1 within 1e-12.
/// Construction renormalizes inputs whose sum is within 1e-9 of 1 and
/// rejects anything worse.
template <typename K>
class FiniteDist {
 public:
  using Entry = std::pair<K, double>;

  FiniteDist() = default;  // empty; only valid as a placeholder

  static FiniteDist from_entries(std::vector<Entry> entries) {
    std::vector<Entry> kept;
    kept.reserve(entries.size());
    double sum = 0.0;
    for (const auto& [k, p] : entries) {
      if (std::isnan(p) || p < 0.0)
        throw InvalidInput("FiniteDist: negative probability");
      if (p == 0.0) continue;  // degenerate inputs drop zero entries
      kept.emplace_back(k, p);
      sum += p;
    }
    if (kept.empty()) throw InvalidInput("FiniteDist: no positive mass");
    if (std::abs(sum - 1.0) > 1e-9)
      throw InvalidInput("FiniteDist: probabilities sum to " +
                         std::to_string(sum) + ", not 1");
    std::sort(kept.begin(), kept.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < kept.size(); ++i)
      if (!(kept[i - 1].first < kept[i].first))
        throw InvalidInput("FiniteDist: duplicate key");
    if (sum != 1.0)
      for (auto& [k, p] : kept) p /= sum;
    return FiniteDist(std::move(kept));
  }

  static FiniteDist point_mass(const K& k) {
    return FiniteDist(std::vector<Entry>{{k, 1.0}});
  }

  static FiniteDist uniform(std::span<const K> keys) {
    std::vector<Entry> entries;
    entries.reserve(keys.size());
    for (const K& k : keys) entries.emplace_back(k, 1.0 / double(keys.size()));
    return from_entries(std::move(entries));
  }

  double prob(const K& k) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), k,
        [](const Entry& e, const K& key) { return e.first < key; });
    if (it == entries_.end() || it->first < k || k < it->first) return 0.0;
    return it->second;
  }

  bool contains(const K& k) const { return prob(k) > 0.0; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  double total() const {
    double s = 0.0;
    for (const auto& [k, p] : entries_) s += p;
    return s;
  }

 private:
  explicit FiniteDist(std::vector<Entry> entries)
      : entries_(std::move(entries)) {}
  std::vector<Entry> entries_;
};

/// A finite distribution (or unnormalized weight vector) held in the log
/// domain. Entries are sorted by key and strictly above -infinity, so the
/// support is exact no matter how small the mass gets.
template <typename K>
class LogDist {
 public:
  using Entry = std::pair<K, double>;  // natural-log weights

  LogDist() = default;

  static LogDist from_finite(const FiniteDist<K>& d) {
    std::vector<Entry> entries;
    entries.reserve(d.size());
    for (const auto& [k, p] : d) entries.emplace_back(k, std::log(p));
    return LogDist(std::move(entries));
  }

  // Trusted path for callers that build entries sorted, unique and finite
  // by construction (the forward pass). Checked in debug builds only.
  static LogDist adopt_sorted(std::vector<Entry>&& entries) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].second == kNegInf)
        throw InvalidInput("LogDist: -inf entry");
      if (i > 0 && !(entries[i - 1].first < entries[i].first))
        throw InvalidInput("LogDist: keys not strictly increasing");
    }
#endif
    return LogDist(std::move(entries));
  }

  // Entries must be sorted with strictly increasing keys; -inf entries are
  // dropped so the stored support stays exact.
  static LogDist from_sorted_log_entries(std::vector<Entry> entries) {
    std::vector<Entry> kept;
    kept.reserve(entries.size());
    for (auto& e : entries) {
      if (e.second == kNegInf) continue;
      if (!kept.empty() && !(kept.back().first < e.first))
        throw InvalidInput("LogDist: keys not strictly increasing");
      kept.push_back(e);
    }
    return LogDist(std::move(kept));
  }

  double log_total() const {
    double m = kNegInf;
    for (const auto& [k, w] : entries_)
      if (w > m) m = w;
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (const auto& [k, w] : entries_) s += std::exp(w - m);
    return m + std::log(s);
  }

  // Shifts all entries so log_total becomes 0; returns the shift.
  double normalize() {
    const double z = log_total();
    for (auto& [k, w] : entries_) w -= z;
    return z;
  }

  double log_weight(const K& k) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), k,
        [](const Entry& e, const K& key) { return e.first < key; });
    if (it == entries_.end() || it->first < k || k < it->first) return kNegInf;
    return it->second;
  }

  std::vector<Entry>& mutable_entries() { return entries_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Direct-domain view; entries whose exp underflows to 0 are dropped.
  FiniteDist<K> to_finite() const {
    std::vector<typename FiniteDist<K>::Entry> out;
    out.reserve(entries_.size());
    for (const auto& [k, w] : entries_) {
      const double p = std::exp(w);
      if (p > 0.0) out.emplace_back(k, p);
    }
    return FiniteDist<K>::from_entries(std::move(out));
  }

 private:
  explicit LogDist(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  std::vector<Entry> entries_;
};

}  // namespace ehmm

#endif  // EHMM_DISTRIBUTION_HPP

#pragma once

// Todd–Coxeter enumeration of the cosets of the trivial subgroup (HLT
// strategy with lookahead).

#include "sqk/group/presentation.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace sqk::group {

struct CosetStats {
  std::uint64_t defined = 0;    // coset definitions made
  std::uint64_t collapsed = 0;  // cosets killed by coincidences
  std::uint64_t max_live = 0;
  std::uint64_t lookaheads = 0;
};

// Mutable enumeration state. Column 2i is generator i+1, column 2i+1 its
// inverse; -1 marks an undefined entry.
class CosetTable {
 public:
  CosetTable(const Presentation& p, std::uint64_t max_cosets);

  // Runs HLT to completion or until the row budget is exhausted even after a
  // lookahead pass. Returns true on completion.
  bool run();

  std::uint64_t live_cosets() const;
  const CosetStats& stats() const { return stats_; }
  // Entry (c, x) = d implies (d, x⁻¹) = c, on live cosets.
  bool is_consistent() const;
  // Every relator traces to the identity from every live coset.
  bool relators_close() const;

 private:
  struct Full {};
  int col(Letter x) const { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }
  std::int64_t define(std::int64_t c, int x);
  void scan_and_fill(std::int64_t c, const std::vector<int>& cols);
  bool scan_only(std::int64_t c, const std::vector<int>& cols);
  void coincidence(std::int64_t a, std::int64_t b);
  void merge(std::int64_t a, std::int64_t b);
  std::int64_t rep(std::int64_t c);
  void lookahead();
  void compact(std::int64_t& cursor);
  std::int64_t& at(std::int64_t c, int x) { return table_[static_cast<std::size_t>(c * ncols_ + x)]; }
  std::int64_t at(std::int64_t c, int x) const { return table_[static_cast<std::size_t>(c * ncols_ + x)]; }

  int ncols_;
  std::uint64_t cap_;
  std::vector<std::vector<int>> relator_cols_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> parent_;  // parent_[c] == c iff c is live
  std::vector<std::int64_t> queue_;
  std::int64_t rows_ = 0;
  std::uint64_t live_ = 0;
  CosetStats stats_;
};

struct CosetResult {
  bool complete = false;
  std::uint64_t order = 0;  // valid when complete
  std::uint64_t max_cosets = 0;
  CosetStats stats;
  nlohmann::json to_json() const;
};

// Overflow is reported through complete = false, not thrown.
CosetResult todd_coxeter(const Presentation& p, std::uint64_t max_cosets = 1'000'000);

}  // namespace sqk::group

#include "sqk/group/coset.hpp"

#include "sqk/error.hpp"

namespace sqk::group {

CosetTable::CosetTable(const Presentation& p, std::uint64_t max_cosets)
    : ncols_(2 * p.generators()), cap_(max_cosets) {
  if (max_cosets < 1) throw InvalidArgument("max_cosets must be >= 1");
  for (const auto& r : p.relators()) {
    std::vector<int> cols;
    for (Letter x : r) cols.push_back(col(x));
    relator_cols_.push_back(std::move(cols));
  }
  table_.assign(static_cast<std::size_t>(ncols_), -1);
  parent_.push_back(0);
  rows_ = 1;
  live_ = 1;
  stats_.defined = 1;
  stats_.max_live = 1;
}

std::int64_t CosetTable::rep(std::int64_t c) {
  std::int64_t r = c;
  while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
  while (parent_[static_cast<std::size_t>(c)] != r) {
    std::int64_t next = parent_[static_cast<std::size_t>(c)];
    parent_[static_cast<std::size_t>(c)] = r;
    c = next;
  }
  return r;
}

std::int64_t CosetTable::define(std::int64_t c, int x) {
  if (static_cast<std::uint64_t>(rows_) >= cap_) throw Full{};
  const std::int64_t d = rows_++;
  table_.resize(static_cast<std::size_t>(rows_ * ncols_), -1);
  parent_.push_back(d);
  at(c, x) = d;
  at(d, x ^ 1) = c;
  ++live_;
  ++stats_.defined;
  if (live_ > stats_.max_live) stats_.max_live = live_;
  return d;
}

void CosetTable::merge(std::int64_t a, std::int64_t b) {
  a = rep(a);
  b = rep(b);
  if (a == b) return;
  if (a > b) std::swap(a, b);
  parent_[static_cast<std::size_t>(b)] = a;
  queue_.push_back(b);
  --live_;
  ++stats_.collapsed;
}

void CosetTable::coincidence(std::int64_t a, std::int64_t b) {
  queue_.clear();
  merge(a, b);
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    const std::int64_t g = queue_[qi];
    for (int x = 0; x < ncols_; ++x) {
      const std::int64_t d = at(g, x);
      if (d < 0) continue;
      at(d, x ^ 1) = -1;
      const std::int64_t mu = rep(g);
      const std::int64_t nu = rep(d);
      if (at(mu, x) >= 0) {
        merge(nu, at(mu, x));
      } else if (at(nu, x ^ 1) >= 0) {
        merge(mu, at(nu, x ^ 1));
      } else {
        at(mu, x) = nu;
        at(nu, x ^ 1) = mu;
      }
    }
  }
  queue_.clear();
}

void CosetTable::scan_and_fill(std::int64_t c, const std::vector<int>& w) {
  if (w.empty()) return;
  std::int64_t f = c, b = c;
  std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
  for (;;) {
    while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
    if (i > j) {
      if (f != c) coincidence(f, c);
      return;
    }
    while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
      return;
    }
    if (i == j) {
      at(f, w[i]) = b;
      at(b, w[i] ^ 1) = f;
      return;
    }
    define(f, w[i]);
  }
}

// Scan without defining; records a deduction or coincidence when the scan
// meets itself. Returns false if c died meanwhile.
bool CosetTable::scan_only(std::int64_t c, const std::vector<int>& w) {
  if (w.empty()) return true;
  std::int64_t f = c, b = c;
  std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
  while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
  if (i > j) {
    if (f != c) coincidence(f, c);
    return parent_[static_cast<std::size_t>(c)] == c;
  }
  while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
  if (j < i) {
    coincidence(f, b);
  } else if (i == j) {
    at(f, w[i]) = b;
    at(b, w[i] ^ 1) = f;
  }
  return parent_[static_cast<std::size_t>(c)] == c;
}

void CosetTable::lookahead() {
  ++stats_.lookaheads;
  for (std::int64_t c = 0; c < rows_; ++c) {
    if (parent_[static_cast<std::size_t>(c)] != c) continue;
    for (const auto& r : relator_cols_)
      if (!scan_only(c, r)) break;
  }
}

void CosetTable::compact(std::int64_t& cursor) {
  std::vector<std::int64_t> remap(static_cast<std::size_t>(rows_), -1);
  std::int64_t next = 0;
  for (std::int64_t c = 0; c < rows_; ++c)
    if (parent_[static_cast<std::size_t>(c)] == c) remap[static_cast<std::size_t>(c)] = next++;
  std::vector<std::int64_t> t(static_cast<std::size_t>(next * ncols_), -1);
  for (std::int64_t c = 0; c < rows_; ++c) {
    const std::int64_t nc = remap[static_cast<std::size_t>(c)];
    if (nc < 0) continue;
    for (int x = 0; x < ncols_; ++x) {
      const std::int64_t d = at(c, x);
      t[static_cast<std::size_t>(nc * ncols_ + x)] = d < 0 ? -1 : remap[static_cast<std::size_t>(d)];
    }
  }
  // the cursor moves to the first live coset at or after it
  std::int64_t nc = next;
  for (std::int64_t c = cursor; c < rows_; ++c)
    if (remap[static_cast<std::size_t>(c)] >= 0) {
      nc = remap[static_cast<std::size_t>(c)];
      break;
    }
  cursor = nc;
  table_ = std::move(t);
  rows_ = next;
  parent_.resize(static_cast<std::size_t>(next));
  for (std::int64_t c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
}

bool CosetTable::run() {
  std::int64_t c = 0;
  while (c < rows_) {
    if (parent_[static_cast<std::size_t>(c)] != c) {
      ++c;
      continue;
    }
    try {
      for (const auto& r : relator_cols_) {
        scan_and_fill(c, r);
        if (parent_[static_cast<std::size_t>(c)] != c) break;
      }
      if (parent_[static_cast<std::size_t>(c)] == c)
        for (int x = 0; x < ncols_; ++x)
          if (at(c, x) < 0) define(c, x);
      ++c;
    } catch (const Full&) {
      const std::int64_t before = rows_;
      lookahead();
      compact(c);
      if (rows_ >= before && static_cast<std::uint64_t>(rows_) >= cap_) return false;
    }
  }
  return true;
}

std::uint64_t CosetTable::live_cosets() const { return live_; }

bool CosetTable::is_consistent() const {
  for (std::int64_t c = 0; c < rows_; ++c) {
    if (parent_[static_cast<std::size_t>(c)] != c) continue;
    for (int x = 0; x < ncols_; ++x) {
      const std::int64_t d = at(c, x);
      if (d < 0) continue;
      if (parent_[static_cast<std::size_t>(d)] != d || at(d, x ^ 1) != c) return false;
    }
  }
  return true;
}

bool CosetTable::relators_close() const {
  for (std::int64_t c = 0; c < rows_; ++c) {
    if (parent_[static_cast<std::size_t>(c)] != c) continue;
    for (const auto& r : relator_cols_) {
      std::int64_t f = c;
      for (int x : r) {
        f = at(f, x);
        if (f < 0) return false;
      }
      if (f != c) return false;
    }
  }
  return true;
}

nlohmann::json CosetResult::to_json() const {
  nlohmann::json j = {{"complete", complete},
                      {"max_cosets", max_cosets},
                      {"stats",
                       {{"defined", stats.defined},
                        {"collapsed", stats.collapsed},
                        {"max_live", stats.max_live},
                        {"lookaheads", stats.lookaheads}}}};
  if (complete) j["order"] = order;
  else j["overflow"] = true;
  return j;
}

CosetResult todd_coxeter(const Presentation& p, std::uint64_t max_cosets) {
  CosetTable t(p, max_cosets);
  CosetResult r;
  r.max_cosets = max_cosets;
  r.complete = t.run();
  if (r.complete) {
    if (!t.is_consistent() || !t.relators_close())
      throw InvariantViolation("coset enumeration finished with an inconsistent table");
    r.order = t.live_cosets();
  }
  r.stats = t.stats();
  return r;
}

}  // namespace sqk::group

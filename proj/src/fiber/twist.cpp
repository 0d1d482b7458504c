#include "sqk/fiber/twist.hpp"

#include "sqk/error.hpp"
#include "sqk/fiber/data.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

namespace sqk::fiber {

FiberedCurveWord::FiberedCurveWord(std::vector<FiberEntry> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  std::vector<std::size_t> cross;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = entries_[i];
    if (e.kind == FiberEntry::Kind::Jump) {
      if (e.jump != 1 && e.jump != -1) throw InvalidArgument("jump markers must be +1 or -1");
    } else {
      if (e.exit.quad < 0 || e.exit.quad >= kSextants) throw InvalidArgument("fibered word: sextant out of range");
      cross.push_back(i);
    }
  }
  for (std::size_t c = 0; c < cross.size(); ++c) {
    const std::size_t i = cross[c];
    const std::size_t next = cross[(c + 1) % cross.size()];
    int jumps = 0;
    for (std::size_t t = (i + 1) % n; t != next; t = (t + 1) % n) jumps += entries_[t].jump;
    const HalfEdge land = partner(entries_[i].exit);
    if (mod6(land.quad + jumps) != entries_[next].exit.quad)
      throw InvalidArgument("fibered word is not closed at entry " + std::to_string(i) + ": lands in sextant " +
                            std::to_string(land.quad) + " with jump " + std::to_string(jumps) +
                            " but continues in sextant " + std::to_string(entries_[next].exit.quad));
  }
}

FiberedCurveWord FiberedCurveWord::from_word(const CurveWord& w) {
  std::vector<FiberEntry> e;
  e.reserve(w.size());
  for (const auto& x : w.exits()) e.push_back(FiberEntry::crossing(x));
  return FiberedCurveWord(std::move(e));
}

int FiberedCurveWord::jump_sum() const {
  int s = 0;
  for (const auto& e : entries_) s += e.jump;
  return s;
}

std::size_t FiberedCurveWord::jump_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const FiberEntry& e) { return e.kind == FiberEntry::Kind::Jump; }));
}

CurveWord twist_curve_word(Chirality chirality) {
  CurveWord g = trace_components(twist_curve_gamma()).at(0);
  return chirality == Chirality::Mirror ? g.mirrored() : g;
}

long gamma_shift(const CurveWord& gamma) {
  const std::size_t n = gamma.size();
  if (n == 0 || n % kSextants != 0) throw InvalidArgument("twist curve must meet every sextant equally");
  const CurveWord back = gamma.monodromy(-1);
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) ok = back.exits()[t] == gamma.exits()[(t + s) % n];
    if (!ok) continue;
    const long sl = static_cast<long>(s), nl = static_cast<long>(n);
    if (sl == nl / kSextants) return sl;
    if (sl == nl - nl / kSextants) return sl - nl;
    throw InvalidArgument("monodromy moves the twist curve by " + std::to_string(s) + " of " + std::to_string(n) +
                          " steps, not one sixth");
  }
  throw InvalidArgument("monodromy does not preserve the twist curve with its orientation");
}

FiberedCurveWord torus_twist(const CurveWord& c, long k, const CurveWord& gamma) {
  if (!c.is_reduced()) throw NotReduced("torus twist needs the curve in minimal position with the twist curve");
  if (k == 0 || c.empty()) return FiberedCurveWord::from_word(c);
  const long shift = gamma_shift(gamma);
  const std::size_t g = gamma.size();

  auto xs = crossings(c, gamma);
  std::sort(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) { return a.u_visit < b.u_visit; });
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i].u_visit == xs[i - 1].u_visit)
      throw InvalidArgument("two crossings with the twist curve start at the same visit; order is ambiguous");

  const long reps = k < 0 ? -k : k;
  const int ksign = k < 0 ? -1 : 1;
  std::vector<FiberEntry> out;
  std::size_t next = 0;
  for (std::size_t t = 0; t < c.size(); ++t) {
    while (next < xs.size() && xs[next].u_visit == t) {
      const Crossing& x = xs[next++];
      const int d = x.sign * ksign;  // +1: travel to ρ^{-1}(P), then jump up
      // steps along γ's orientation needed to reach ρ^{-d}(P)
      const long along = d * shift;
      for (long r = 0; r < reps; ++r) {
        const long len = along < 0 ? -along : along;
        for (long j = 0; j < len; ++j) {
          if (along > 0) {
            out.push_back(FiberEntry::crossing(gamma.exits()[(x.v_visit + static_cast<std::size_t>(j)) % g]));
          } else {
            const std::size_t at = (x.v_visit + g * static_cast<std::size_t>(len) - static_cast<std::size_t>(j)) % g;
            out.push_back(FiberEntry::crossing(partner(gamma.exits()[(at + g - 1) % g])));
          }
        }
        out.push_back(FiberEntry::jump_by(d));
      }
    }
    out.push_back(FiberEntry::crossing(c.exits()[t]));
  }
  return FiberedCurveWord(std::move(out));
}

FiberedCurveWord torus_twist(const NormalMultiCurve& c, long k, Chirality chirality) {
  auto comps = trace_components(c);
  if (comps.size() != 1)
    throw InvalidArgument("torus twist needs a connected curve; got " + std::to_string(comps.size()) + " components");
  return torus_twist(comps[0], k, twist_curve_word(chirality));
}

CurveWord pushdown_word(const FiberedCurveWord& w, std::uint64_t cap, std::uint64_t* steps) {
  if (w.jump_sum() != 0)
    throw UnbalancedJumps("jump markers sum to " + std::to_string(w.jump_sum()) +
                          ": the curve is not isotopic into a fiber");
  std::uint64_t count = steps ? *steps : 0;
  std::vector<HalfEdge> ex;
  ex.reserve(w.crossing_count());
  int level = 0;
  for (const auto& e : w.entries()) {
    if (e.kind == FiberEntry::Kind::Jump) {
      level += e.jump;
      if (++count > cap)
        throw StepCapExceeded("pushdown exceeded the step cap of " + std::to_string(cap) + " elementary moves");
    } else {
      ex.push_back({mod6(e.exit.quad - level), e.exit.side});
    }
  }
  CurveWord r = CurveWord::from_exits(std::move(ex)).reduced(cap, &count);
  if (steps) *steps = count;
  return r;
}

NormalMultiCurve pushdown(const FiberedCurveWord& w, std::uint64_t cap) {
  const CurveWord r = pushdown_word(w, cap);
  if (r.empty()) return NormalMultiCurve();
  return NormalMultiCurve::from_word(r);
}

namespace {

struct FamilyCache {
  std::mutex mu;
  std::map<Chirality, std::vector<CurveWord>> words;
};

FamilyCache& cache() {
  static FamilyCache c;
  return c;
}

}  // namespace

std::vector<NormalMultiCurve> build_Vn_sequence(int n, Chirality chirality) {
  if (n < 0) throw InvalidArgument("build_Vn needs n >= 0");
  const CurveWord gamma = twist_curve_word(chirality);
  std::vector<CurveWord> have;
  {
    std::lock_guard lock(cache().mu);
    have = cache().words[chirality];
  }
  if (have.empty()) {
    const NormalMultiCurve v0 = base_curve_V0();
    have.push_back(trace_components(chirality == Chirality::Mirror ? mirror(v0) : v0).at(0));
  }
  const std::size_t known = have.size();
  while (static_cast<int>(have.size()) <= n) {
    CurveWord next = pushdown_word(torus_twist(have.back(), +1, gamma));
    // canonical orientation and start, so results never depend on cache state
    have.push_back(trace_components(NormalMultiCurve::from_word(next)).at(0));
  }
  if (have.size() > known) {
    std::lock_guard lock(cache().mu);
    auto& slot = cache().words[chirality];
    if (slot.size() < have.size()) slot = have;
  }
  std::vector<NormalMultiCurve> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.emplace_back(have[static_cast<std::size_t>(i)].weights());
  return out;
}

std::vector<NormalMultiCurve> twist_sequence(const NormalMultiCurve& start, int n, const CurveWord& gamma) {
  if (n < 0) throw InvalidArgument("twist sequence length must be >= 0");
  auto comps = trace_components(start);
  if (comps.size() != 1) throw InvalidArgument("twist sequence needs a connected starting curve");
  std::vector<NormalMultiCurve> out{start};
  CurveWord cur = comps[0];
  for (int i = 0; i < n; ++i) {
    const NormalMultiCurve next = NormalMultiCurve::from_word(pushdown_word(torus_twist(cur, +1, gamma)));
    cur = trace_components(next).at(0);
    out.push_back(next);
  }
  return out;
}

NormalMultiCurve build_Vn(int n, Chirality chirality) { return build_Vn_sequence(n, chirality).back(); }

bool equal_up_to_monodromy(const NormalMultiCurve& a, const NormalMultiCurve& b) {
  for (int k = 0; k < kSextants; ++k)
    if (apply_monodromy(b, k) == a) return true;
  return false;
}

}  // namespace sqk::fiber

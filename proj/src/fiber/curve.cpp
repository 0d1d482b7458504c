#include "sqk/fiber/curve.hpp"

#include "sqk/error.hpp"
#include "arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace sqk::fiber {

using namespace arrangement;

ArcType arc_type(Side a, Side b) {
  if (a == b) throw InvalidArgument("arc enters and leaves through the same side");
  if (a > b) std::swap(a, b);
  using S = Side;
  if (a == S::Outer && b == S::Inner) return ArcType::OI;
  if (a == S::Outer && b == S::PrevLine) return ArcType::OLm;
  if (a == S::Outer && b == S::NextLine) return ArcType::OLp;
  if (a == S::Inner && b == S::PrevLine) return ArcType::ILm;
  if (a == S::NextLine && b == S::Inner) return ArcType::ILp;
  return ArcType::LL;
}

std::pair<Side, Side> arc_sides(ArcType t) {
  switch (t) {
    case ArcType::OI: return {Side::Outer, Side::Inner};
    case ArcType::OLm: return {Side::Outer, Side::PrevLine};
    case ArcType::OLp: return {Side::Outer, Side::NextLine};
    case ArcType::ILm: return {Side::Inner, Side::PrevLine};
    case ArcType::ILp: return {Side::Inner, Side::NextLine};
    case ArcType::LL: return {Side::NextLine, Side::PrevLine};
  }
  return {Side::Outer, Side::Inner};
}

std::uint64_t default_step_cap() {
  if (const char* env = std::getenv("TOOLKIT_MAX_STEPS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}


// ---------------------------------------------------------------------------
// CurveWord

CurveWord CurveWord::from_exits(std::vector<HalfEdge> exits) {
  const std::size_t n = exits.size();
  for (std::size_t t = 0; t < n; ++t) {
    if (exits[t].quad < 0 || exits[t].quad >= kSextants)
      throw InvalidArgument("curve word: sextant index out of range");
  }
  for (std::size_t t = 0; t < n; ++t) {
    const HalfEdge land = partner(exits[t]);
    if (land.quad != exits[(t + 1) % n].quad)
      throw InvalidArgument("curve word is not closed: exit " + std::to_string(t) + " through " +
                            side_name(exits[t]) + " does not reach sextant " +
                            std::to_string(exits[(t + 1) % n].quad));
  }
  return CurveWord(std::move(exits));
}

Visit CurveWord::visit(std::size_t t) const {
  const std::size_t n = exits_.size();
  const HalfEdge& e = exits_[t % n];
  const HalfEdge in = partner(exits_[(t + n - 1) % n]);
  return {e.quad, in.side, e.side};
}

bool CurveWord::is_reduced() const {
  const std::size_t n = exits_.size();
  for (std::size_t t = 0; t < n; ++t)
    if (partner(exits_[t]) == exits_[(t + 1) % n]) return false;
  return true;
}

CurveWord CurveWord::reduced(std::uint64_t cap, std::uint64_t* steps) const {
  std::uint64_t count = steps ? *steps : 0;
  auto bump = [&] {
    if (++count > cap)
      throw StepCapExceeded("bigon reduction exceeded the step cap of " + std::to_string(cap) +
                            " elementary moves (set TOOLKIT_MAX_STEPS to raise it)");
  };
  // Linear pass with a stack, then cancel across the seam.
  std::vector<HalfEdge> st;
  st.reserve(exits_.size());
  for (const HalfEdge& e : exits_) {
    if (!st.empty() && partner(st.back()) == e) {
      st.pop_back();
      bump();
    } else {
      st.push_back(e);
    }
  }
  std::size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && partner(st[hi - 1]) == st[lo]) {
    ++lo;
    --hi;
    bump();
  }
  if (steps) *steps = count;
  return CurveWord(std::vector<HalfEdge>(st.begin() + static_cast<std::ptrdiff_t>(lo),
                                         st.begin() + static_cast<std::ptrdiff_t>(hi)));
}

CurveWord CurveWord::monodromy(int k) const {
  std::vector<HalfEdge> out = exits_;
  for (auto& e : out) e.quad = mod6(e.quad + k);
  return CurveWord(std::move(out));
}

CurveWord CurveWord::reversed() const {
  // Walking backwards, visit t is left through the side it was entered by.
  const std::size_t n = exits_.size();
  std::vector<HalfEdge> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t t = (2 * n - 1 - i) % n;
    out.push_back(partner(exits_[(t + n - 1) % n]));
  }
  return CurveWord(std::move(out));
}

namespace {
Side mirror_side(Side s) {
  if (s == Side::NextLine) return Side::PrevLine;
  if (s == Side::PrevLine) return Side::NextLine;
  return s;
}
}  // namespace

CurveWord CurveWord::mirrored() const {
  std::vector<HalfEdge> out = exits_;
  for (auto& e : out) e = {mod6(-e.quad), mirror_side(e.side)};
  return CurveWord(std::move(out));
}

CurveWord CurveWord::rotated_to(std::size_t start) const {
  std::vector<HalfEdge> out(exits_.size());
  for (std::size_t i = 0; i < exits_.size(); ++i) out[i] = exits_[(start + i) % exits_.size()];
  return CurveWord(std::move(out));
}

Weights CurveWord::weights() const {
  Weights w{};
  for (std::size_t t = 0; t < exits_.size(); ++t) {
    const Visit v = visit(t);
    ++w[v.quad][static_cast<int>(arc_type(v.in, v.out))];
  }
  return w;
}

bool CurveWord::is_peripheral() const {
  if (exits_.empty()) return false;
  int cls = -1;
  for (std::size_t t = 0; t < exits_.size(); ++t) {
    const Visit v = visit(t);
    const int a = side_index(v.in), b = side_index(v.out);
    int corner;
    if ((a + 1) % 4 == b) corner = b;
    else if ((b + 1) % 4 == a) corner = a;
    else return false;
    const int c = vertex_class(v.quad, corner);
    if (cls >= 0 && c != cls) return false;
    cls = c;
  }
  return true;
}

bool CurveWord::same_cycle(const CurveWord& other) const {
  if (size() != other.size()) return false;
  if (empty()) return true;
  const std::size_t n = size();
  auto rotation_of = [&](const CurveWord& cand) {
    for (std::size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = exits_[i] == cand.exits_[(s + i) % n];
      if (ok) return true;
    }
    return false;
  };
  return rotation_of(other) || rotation_of(other.reversed());
}

namespace {
const char* side_tag(Side s) {
  switch (s) {
    case Side::Outer: return "O";
    case Side::NextLine: return "L+";
    case Side::Inner: return "I";
    case Side::PrevLine: return "L-";
  }
  return "?";
}

Side side_from_tag(const std::string& t) {
  if (t == "O") return Side::Outer;
  if (t == "L+") return Side::NextLine;
  if (t == "I") return Side::Inner;
  if (t == "L-") return Side::PrevLine;
  throw InvalidArgument("unknown side tag '" + t + "' (expected O, L+, I, L-)");
}
}  // namespace

nlohmann::json CurveWord::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : exits_) arr.push_back({e.quad, side_tag(e.side)});
  return arr;
}

CurveWord CurveWord::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("curve word must be an array of [sextant, side] exits");
  std::vector<HalfEdge> ex;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_string())
      throw InvalidArgument("curve word entry must be [sextant, side]");
    ex.push_back({e[0].get<int>(), side_from_tag(e[1].get<std::string>())});
  }
  return from_exits(std::move(ex));
}

// ---------------------------------------------------------------------------
// NormalMultiCurve

NormalMultiCurve::NormalMultiCurve(const Weights& w) : w_(w) {
  for (int s = 0; s < kSextants; ++s) {
    for (int t = 0; t < kArcTypes; ++t)
      if (w_[s][t] < 0)
        throw InvariantViolation("negative weight " + std::string(kArcTypeNames[t]) + " in sextant " +
                                 std::to_string(s));
    if (w_[s][0] > 0 && w_[s][5] > 0)
      throw InvariantViolation("sextant " + std::to_string(s) +
                               ": OI and LL arcs cross (quadrilateral embeddability, OI·LL must be 0)");
  }
  for (int s = 0; s < kSextants; ++s)
    for (Side side : kSides) {
      const HalfEdge p = partner({s, side});
      if (count_on(w_[s], side) != count_on(w_[p.quad], p.side))
        throw InvariantViolation("matching fails across " + side_name({s, side}) + ": sextant " +
                                 std::to_string(s) + " has " + std::to_string(count_on(w_[s], side)) +
                                 " endpoints, sextant " + std::to_string(p.quad) + " has " +
                                 std::to_string(count_on(w_[p.quad], p.side)));
    }
}

NormalMultiCurve NormalMultiCurve::from_word(const CurveWord& w) {
  if (!w.is_reduced()) throw NotReduced("curve word has a backtrack (bigon); reduce it first");
  NormalMultiCurve c(w.weights());
  auto comps = trace_components(c);
  if (comps.size() != 1 || !comps[0].same_cycle(w))
    throw NotEmbedded("curve word is not simple: its normal coordinates trace to " +
                      std::to_string(comps.size()) + " component(s) different from the word");
  return c;
}

NormalMultiCurve NormalMultiCurve::from_words(const std::vector<CurveWord>& ws) {
  NormalMultiCurve total;
  for (const auto& w : ws) total = total + from_word(w);
  return total;
}

bool NormalMultiCurve::empty() const { return normal_arcs() == 0; }

std::int64_t NormalMultiCurve::normal_arcs() const {
  std::int64_t n = 0;
  for (const auto& row : w_)
    for (auto v : row) n += v;
  return n;
}

std::int64_t NormalMultiCurve::side_count(int s, Side side) const { return count_on(w_[mod6(s)], side); }

std::int64_t NormalMultiCurve::annulus_arcs() const {
  std::int64_t e = 0;
  for (int s = 0; s < kSextants; ++s) e += count_on(w_[s], Side::Outer) + count_on(w_[s], Side::Inner);
  return e / 2;
}

NormalMultiCurve NormalMultiCurve::operator+(const NormalMultiCurve& o) const {
  Weights w{};
  for (int s = 0; s < kSextants; ++s)
    for (int t = 0; t < kArcTypes; ++t) w[s][t] = w_[s][t] + o.w_[s][t];
  return NormalMultiCurve(w);
}

nlohmann::json NormalMultiCurve::to_json() const {
  nlohmann::json sx = nlohmann::json::array();
  for (int s = 0; s < kSextants; ++s) {
    nlohmann::json row = nlohmann::json::object();
    for (int t = 0; t < kArcTypes; ++t) row[kArcTypeNames[t]] = w_[s][t];
    sx.push_back(row);
  }
  nlohmann::json tr = nlohmann::json::array();
  for (const auto& c : trace_components(*this)) tr.push_back(c.to_json());
  return {{"sextants", sx}, {"trace", tr}};
}

NormalMultiCurve NormalMultiCurve::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sextants") || !j["sextants"].is_array() || j["sextants"].size() != kSextants)
    throw InvalidArgument("normal multicurve JSON needs \"sextants\": an array of 6 weight objects");
  Weights w{};
  for (int s = 0; s < kSextants; ++s) {
    const auto& row = j["sextants"][s];
    if (!row.is_object()) throw InvalidArgument("sextant entry must be an object");
    for (const auto& [key, val] : row.items()) {
      auto it = std::find_if(kArcTypeNames.begin(), kArcTypeNames.end(), [&](const char* n) { return key == n; });
      if (it == kArcTypeNames.end()) throw InvalidArgument("unknown arc type '" + key + "'");
      if (!val.is_number_integer()) throw InvalidArgument("arc weight must be an integer");
      w[s][static_cast<std::size_t>(it - kArcTypeNames.begin())] = val.get<std::int64_t>();
    }
  }
  NormalMultiCurve c(w);
  if (j.contains("trace")) {
    const auto& tr = j["trace"];
    if (!tr.is_array()) throw InvalidArgument("\"trace\" must be an array of components");
    auto comps = trace_components(c);
    if (tr.size() != comps.size())
      throw InvariantViolation("trace lists " + std::to_string(tr.size()) + " component(s) but the weights trace to " +
                               std::to_string(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (!CurveWord::from_json(tr[i]).same_cycle(comps[i]))
        throw InvariantViolation("trace component " + std::to_string(i) + " does not match the weights");
  }
  return c;
}

// ---------------------------------------------------------------------------
// Tracing

std::vector<arrangement::TracedComponent> arrangement::trace(const Weights& w) {
  std::array<std::array<std::int64_t, 4>, kSextants> base{};
  std::int64_t total = 0;
  for (int s = 0; s < kSextants; ++s)
    for (Side side : kSides) {
      base[s][side_index(side)] = total;
      total += count_on(w[s], side);
    }
  std::vector<char> used(static_cast<std::size_t>(total), 0);
  std::vector<TracedComponent> comps;
  for (int s = 0; s < kSextants; ++s)
    for (Side side : kSides) {
      const std::int64_t n = count_on(w[s], side);
      for (std::int64_t idx = 0; idx < n; ++idx) {
        if (used[base[s][side_index(side)] + idx]) continue;
        std::vector<HalfEdge> exits;
        int q = s;
        Side sd = side;
        std::int64_t ix = idx;
        while (!used[base[q][side_index(sd)] + ix]) {
          used[base[q][side_index(sd)] + ix] = 1;
          const auto [os, oix] = other_end(w[q], sd, ix);
          used[base[q][side_index(os)] + oix] = 1;
          exits.push_back({q, os});
          const HalfEdge p = partner({q, os});
          const std::int64_t m = count_on(w[q], os);
          q = p.quad;
          sd = p.side;
          ix = m - 1 - oix;
        }
        comps.push_back({CurveWord::from_exits(std::move(exits)), s, side, idx});
      }
    }
  return comps;
}

std::vector<CurveWord> trace_components(const NormalMultiCurve& c) {
  std::vector<CurveWord> out;
  for (auto& t : arrangement::trace(c.weights())) out.push_back(std::move(t.word));
  return out;
}

std::vector<NormalMultiCurve> components(const NormalMultiCurve& c) {
  std::vector<NormalMultiCurve> out;
  for (const auto& w : trace_components(c)) out.emplace_back(w.weights());
  return out;
}

NormalMultiCurve apply_monodromy(const NormalMultiCurve& c, int k) {
  Weights w{};
  for (int s = 0; s < kSextants; ++s) w[mod6(s + k)] = c.weights()[s];
  return NormalMultiCurve(w);
}

NormalMultiCurve mirror(const NormalMultiCurve& c) {
  Weights w{};
  for (int s = 0; s < kSextants; ++s) {
    auto row = c.weights()[s];
    std::swap(row[static_cast<int>(ArcType::OLm)], row[static_cast<int>(ArcType::OLp)]);
    std::swap(row[static_cast<int>(ArcType::ILm)], row[static_cast<int>(ArcType::ILp)]);
    w[mod6(-s)] = row;
  }
  return NormalMultiCurve(w);
}

// ---------------------------------------------------------------------------
// Counts and slope

ProjectionCounts projection_counts(const CurveWord& w) {
  if (w.empty()) throw InvalidArgument("projection counts of the empty curve");
  if (!w.is_reduced()) throw NotReduced("curve is not in minimal position: a bigon with a side remains");
  if (w.is_peripheral()) throw NotReduced("curve links a branch point and is inessential");
  const Weights ws = w.weights();
  ProjectionCounts r;
  for (int s = 0; s < kSextants; ++s) {
    r.sextant_crossings += count_on(ws[s], Side::NextLine);
    r.outer_crossings += count_on(ws[s], Side::Outer);
    r.inner_crossings += count_on(ws[s], Side::Inner);
  }
  return r;
}

ProjectionCounts projection_counts(const NormalMultiCurve& c) {
  auto comps = trace_components(c);
  if (comps.size() != 1)
    throw InvalidArgument("projection counts need a connected curve; got " + std::to_string(comps.size()) +
                          " components");
  return projection_counts(comps[0]);
}

Slope slope_of(const NormalMultiCurve& c) {
  const ProjectionCounts pc = projection_counts(c);
  Slope s = make_slope(pc.sextant_crossings, pc.outer_crossings);
  if (!lift_check(s))
    throw NotLiftable("slope " + s.str() + " has even denominator: the curve is not a homeomorphic lift");
  return s;
}

// ---------------------------------------------------------------------------
// Disjointness through coordinates

bool disjoint_by_sum(const NormalMultiCurve& a, const NormalMultiCurve& b) {
  Weights w{};
  for (int s = 0; s < kSextants; ++s)
    for (int t = 0; t < kArcTypes; ++t) {
      w[s][t] = a.weights()[s][t] + b.weights()[s][t];
    }
  for (int s = 0; s < kSextants; ++s)
    if (w[s][0] > 0 && w[s][5] > 0) return false;
  const NormalMultiCurve sum(w);
  std::multiset<Weights> want, got;
  for (const auto& c : {a, b})
    for (const auto& x : trace_components(c)) want.insert(x.weights());
  for (const auto& x : trace_components(sum)) got.insert(x.weights());
  return want == got;
}

}  // namespace sqk::fiber

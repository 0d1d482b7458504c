#include "sqk/group/ac.hpp"

#include "sqk/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sqk::group {

namespace {

Word rotate(const Word& w, std::size_t k) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + k) % w.size()];
  return out;
}

Word least_cyclic_form(const Word& w) {
  Word best = w;
  const Word inv = inverse(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word a = rotate(w, k), b = rotate(inv, k);
    if (a < best) best = std::move(a);
    if (b < best) best = std::move(b);
  }
  return best;
}

std::string key_of(const std::vector<Word>& rel) {
  std::string s;
  for (const auto& r : rel) {
    s += to_string(r);
    s += '|';
  }
  return s;
}

}  // namespace

nlohmann::json ACMove::to_json() const {
  if (kind == Kind::Invert) return {{"move", "invert"}, {"i", i}, {"rot_i", rot_i}};
  return {{"move", "multiply"}, {"i", i}, {"j", j}, {"sign", sign}, {"rot_i", rot_i}, {"rot_j", rot_j}};
}

Presentation canonical(const Presentation& p) {
  std::vector<Word> rel;
  for (const auto& r : p.relators()) rel.push_back(least_cyclic_form(r));
  std::sort(rel.begin(), rel.end());
  return Presentation(p.generators(), std::move(rel));
}

std::string canonical_key(const Presentation& p) { return key_of(canonical(p).relators()); }

Presentation apply_move(const Presentation& p, const ACMove& m) {
  std::vector<Word> rel = p.relators();
  if (m.i >= rel.size()) throw InvalidArgument("AC move: relator index out of range");
  if (m.kind == ACMove::Kind::Invert) {
    rel[m.i] = inverse(rel[m.i]);
  } else {
    if (m.j >= rel.size() || m.j == m.i) throw InvalidArgument("AC move: multiply needs a different relator");
    const Word ri = rotate(rel[m.i], m.rot_i);
    const Word rj = rotate(m.sign > 0 ? rel[m.j] : inverse(rel[m.j]), m.rot_j);
    Word prod = cyclic_reduce(concat(ri, rj));
    if (prod.empty()) throw InvalidArgument("AC move would produce an empty relator");
    rel[m.i] = std::move(prod);
  }
  return Presentation(p.generators(), std::move(rel));
}

std::vector<ACNeighbor> ac_neighbors(const Presentation& s, std::size_t max_total_length) {
  std::vector<ACNeighbor> out;
  std::unordered_set<std::string> seen{canonical_key(s)};
  const auto& rel = s.relators();
  const std::size_t base_len = s.total_length();
  auto consider = [&](const ACMove& m) {
    // cheap length filter before building the presentation
    if (m.kind == ACMove::Kind::Multiply) {
      const Word ri = rotate(rel[m.i], m.rot_i);
      const Word rj = rotate(m.sign > 0 ? rel[m.j] : inverse(rel[m.j]), m.rot_j);
      const Word prod = cyclic_reduce(concat(ri, rj));
      if (prod.empty()) return;
      if (base_len - rel[m.i].size() + prod.size() > max_total_length) return;
    }
    Presentation next = canonical(apply_move(s, m));
    std::string k = key_of(next.relators());
    if (!seen.insert(std::move(k)).second) return;
    out.push_back({m, std::move(next)});
  };
  for (std::size_t i = 0; i < rel.size(); ++i) consider({ACMove::Kind::Invert, i, 0, 1, 0, 0});
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j) {
      if (i == j) continue;
      for (int sign : {1, -1})
        for (std::size_t a = 0; a < rel[i].size(); ++a)
          for (std::size_t b = 0; b < rel[j].size(); ++b) consider({ACMove::Kind::Multiply, i, j, sign, a, b});
    }
  return out;
}

bool is_trivial_form(const Presentation& p, std::size_t target_total_length) {
  if (p.total_length() > target_total_length) return false;
  std::set<int> gens;
  for (const auto& r : p.relators())
    if (r.size() == 1) gens.insert(std::abs(r[0]));
  return static_cast<int>(gens.size()) == p.generators();
}

nlohmann::json ACSearchResult::to_json() const {
  nlohmann::json j = {{"found", found},
                      {"start", start.to_json()},
                      {"states_visited", states_visited},
                      {"frontier_size", frontier_size},
                      {"depth_reached", depth_reached}};
  if (found) {
    nlohmann::json mv = nlohmann::json::array(), st = nlohmann::json::array();
    for (const auto& m : moves) mv.push_back(m.to_json());
    for (const auto& p : path) st.push_back(p.str());
    j["moves"] = mv;
    j["path"] = st;
    j["path_length"] = moves.size();
  } else {
    j["reason"] = reason;
  }
  return j;
}

ACSearchResult ac_search(const Presentation& start_in, const ACSearchOptions& opts) {
  if (opts.max_length == 0 || opts.max_states == 0)
    throw InvalidArgument("ac_search needs positive max_length and max_states");
  Presentation start = start_in;
  if (opts.stabilize) {
    std::vector<Word> rel = start.relators();
    const int c = start.generators() + 1;
    rel.push_back({c});
    start = Presentation(c, std::move(rel));
  }
  const std::size_t target = opts.target_total_length ? opts.target_total_length
                                                      : static_cast<std::size_t>(start.generators());
  ACSearchResult res{false, "", canonical(start), {}, {}, 0, 0, 0};

  struct Node {
    Presentation state;
    std::int64_t parent;
    ACMove move;
    std::uint64_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  nodes.push_back({res.start, -1, {}, 0});
  seen.insert(key_of(res.start.relators()));
  std::size_t head = 0;

#ifndef NDEBUG
  const auto snf0 = abelianization_snf(res.start);
#endif

  auto finish = [&](std::size_t idx) {
    res.found = true;
    std::vector<std::size_t> chain;
    for (std::int64_t k = static_cast<std::int64_t>(idx); k >= 0; k = nodes[static_cast<std::size_t>(k)].parent)
      chain.push_back(static_cast<std::size_t>(k));
    std::reverse(chain.begin(), chain.end());
    for (std::size_t t = 0; t < chain.size(); ++t) {
      res.path.push_back(nodes[chain[t]].state);
      if (t) res.moves.push_back(nodes[chain[t]].move);
    }
  };

  if (is_trivial_form(res.start, target)) {
    finish(0);
  } else if (res.start.total_length() > opts.max_length) {
    res.reason = "start exceeds max_length";
  } else {
    while (head < nodes.size()) {
      const std::size_t cur = head++;
      res.depth_reached = std::max(res.depth_reached, nodes[cur].depth);
      const Presentation state = nodes[cur].state;
      for (auto& nb : ac_neighbors(state, opts.max_length)) {
        std::string k = key_of(nb.state.relators());
        if (!seen.insert(k).second) continue;
#ifndef NDEBUG
        if (abelianization_snf(nb.state) != snf0)
          throw InvariantViolation("AC move changed the abelianization");
#endif
        nodes.push_back({std::move(nb.state), static_cast<std::int64_t>(cur), nb.move, nodes[cur].depth + 1});
        if (is_trivial_form(nodes.back().state, target)) {
          finish(nodes.size() - 1);
          break;
        }
        if (nodes.size() >= opts.max_states) break;
      }
      if (res.found) break;
      if (nodes.size() >= opts.max_states) {
        res.reason = "state cap";
        break;
      }
    }
    if (!res.found && res.reason.empty()) res.reason = "exhausted";
  }
  res.states_visited = nodes.size();
  res.frontier_size = nodes.size() - std::min(head, nodes.size());
  return res;
}

bool replay_certifies(const ACSearchResult& r, std::size_t target_total_length) {
  if (!r.found || r.path.size() != r.moves.size() + 1) return false;
  Presentation cur = r.start;
  if (!(cur == r.path[0])) return false;
  for (std::size_t t = 0; t < r.moves.size(); ++t) {
    cur = canonical(apply_move(cur, r.moves[t]));
    if (!(cur == r.path[t + 1])) return false;
  }
  return is_trivial_form(cur, target_total_length);
}

}  // namespace sqk::group

#pragma once

// Andrews–Curtis moves on balanced presentations, treating relators as
// cyclic words. A state is identified by its canonical key: each relator
// replaced by the least rotation of itself or its inverse, then sorted.
//
// Moves (each followed by cyclic reduction):
//   invert    r_i ↦ r_i⁻¹
//   multiply  r_i ↦ ρ r_j^ε, where ρ, r_j are any cyclic rotations: since
//             conjugation is invisible on cyclic words, this is r_i · (a
//             conjugate of r_j^ε) with the conjugator chosen so the product
//             stays short.
// Conjugation by a generator is the identity on cyclic words and is not
// listed separately.

#include "sqk/group/presentation.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqk::group {

struct ACMove {
  enum class Kind { Invert, Multiply };
  Kind kind = Kind::Invert;
  std::size_t i = 0;        // relator replaced
  std::size_t j = 0;        // relator multiplied in
  int sign = 1;             // exponent of r_j
  std::size_t rot_i = 0;    // rotation applied to r_i
  std::size_t rot_j = 0;    // rotation applied to r_j^sign
  nlohmann::json to_json() const;
};

// Canonical form of a presentation (relator order, rotation, inversion).
Presentation canonical(const Presentation& p);
std::string canonical_key(const Presentation& p);

// Applies one move to the relators as given (no canonicalization).
Presentation apply_move(const Presentation& p, const ACMove& m);

struct ACNeighbor {
  ACMove move;
  Presentation state;  // canonical
};

// All distinct canonical states one move away from `s`, in generation order,
// excluding s itself. Neighbors whose total length exceeds max_total_length
// are dropped.
std::vector<ACNeighbor> ac_neighbors(const Presentation& s,
                                     std::size_t max_total_length = static_cast<std::size_t>(-1));

// Every generator occurs as a one-letter relator and the total length is at
// most target_total_length.
bool is_trivial_form(const Presentation& p, std::size_t target_total_length);

struct ACSearchOptions {
  std::size_t target_total_length = 0;  // 0 = number of generators
  std::size_t max_length = 0;           // cap on total relator length
  std::size_t max_states = 0;           // cap on distinct states visited
  bool stabilize = false;               // add generator c and relator c first
};

struct ACSearchResult {
  bool found = false;
  std::string reason;  // NotFound: "exhausted" or "state cap"
  Presentation start;  // canonical, after optional stabilization
  std::vector<ACMove> moves;
  std::vector<Presentation> path;  // canonical states, path[0] = start
  std::uint64_t states_visited = 0;
  std::uint64_t frontier_size = 0;
  std::uint64_t depth_reached = 0;
  nlohmann::json to_json() const;
};

// Breadth-first search in deterministic expansion order.
ACSearchResult ac_search(const Presentation& start, const ACSearchOptions& opts);

// Re-applies the moves from result.start and checks every intermediate state
// and the trivial end state.
bool replay_certifies(const ACSearchResult& r, std::size_t target_total_length);

}  // namespace sqk::group

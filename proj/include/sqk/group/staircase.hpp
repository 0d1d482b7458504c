#pragma once

// Schematic traversal of a closed curve in the infinite cyclic cover of M,
// recording where it meets the spheres S_a, S_b (crossings), where it passes
// between lifts of the fiber (jumps), and where it runs through the bicollar
// of the torus T (passages, where twisting inserts crossings).

#include "sqk/group/word.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sqk::group {

struct StaircaseEvent {
  enum class Kind { Crossing, Jump, Passage };
  Kind kind = Kind::Crossing;
  char label = 0;  // 'a' or 'b' for Crossing and Passage
  int sign = 1;    // ±1: crossing orientation, jump direction, or passage normal
  int level = 0;   // index of the fiber lift the event sits in
};

class StaircaseDiagram {
 public:
  explicit StaircaseDiagram(std::vector<StaircaseEvent> events);
  const std::vector<StaircaseEvent>& events() const { return events_; }
  std::size_t passage_count() const;

  nlohmann::json to_json() const;
  static StaircaseDiagram from_json(const nlohmann::json& j);

 private:
  std::vector<StaircaseEvent> events_;
};

// Crossing labels with signs in traversal order, freely reduced. Throws
// InvalidArgument if a crossing is unlabeled.
Word read_staircase(const StaircaseDiagram& d);

// n twists along T: after each passage (label x, normal sign σ) insert n
// crossings x^σ. Passages are kept, so insertions compose additively.
StaircaseDiagram twist_insertion(const StaircaseDiagram& d, int n);

}  // namespace sqk::group

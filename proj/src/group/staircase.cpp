#include "sqk/group/staircase.hpp"

#include "sqk/error.hpp"

#include <algorithm>

namespace sqk::group {

namespace {

const char* kind_name(StaircaseEvent::Kind k) {
  switch (k) {
    case StaircaseEvent::Kind::Crossing: return "crossing";
    case StaircaseEvent::Kind::Jump: return "jump";
    case StaircaseEvent::Kind::Passage: return "passage";
  }
  return "?";
}

}  // namespace

StaircaseDiagram::StaircaseDiagram(std::vector<StaircaseEvent> events) : events_(std::move(events)) {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const auto& e = events_[i];
    if (e.sign != 1 && e.sign != -1)
      throw InvalidArgument("staircase event " + std::to_string(i) + ": sign must be +1 or -1");
    if (e.kind != StaircaseEvent::Kind::Jump && e.label != 0 && e.label != 'a' && e.label != 'b')
      throw InvalidArgument("staircase event " + std::to_string(i) + ": label must be 'a' or 'b'");
    if (e.kind == StaircaseEvent::Kind::Passage && e.label == 0)
      throw InvalidArgument("staircase event " + std::to_string(i) + ": passage without a crossing label");
  }
}

std::size_t StaircaseDiagram::passage_count() const {
  return static_cast<std::size_t>(std::count_if(events_.begin(), events_.end(), [](const StaircaseEvent& e) {
    return e.kind == StaircaseEvent::Kind::Passage;
  }));
}

nlohmann::json StaircaseDiagram::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : events_) {
    nlohmann::json j = {{"kind", kind_name(e.kind)}, {"sign", e.sign}, {"level", e.level}};
    if (e.kind != StaircaseEvent::Kind::Jump) j["label"] = e.label ? std::string(1, e.label) : std::string();
    arr.push_back(j);
  }
  return {{"events", arr}};
}

StaircaseDiagram StaircaseDiagram::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
    throw InvalidArgument("staircase JSON needs an \"events\" array");
  std::vector<StaircaseEvent> ev;
  for (const auto& e : j["events"]) {
    StaircaseEvent x;
    const std::string kind = e.value("kind", "");
    if (kind == "crossing") x.kind = StaircaseEvent::Kind::Crossing;
    else if (kind == "jump") x.kind = StaircaseEvent::Kind::Jump;
    else if (kind == "passage") x.kind = StaircaseEvent::Kind::Passage;
    else throw InvalidArgument("unknown staircase event kind '" + kind + "'");
    x.sign = e.value("sign", 1);
    x.level = e.value("level", 0);
    const std::string label = e.value("label", "");
    if (label.size() > 1) throw InvalidArgument("staircase label must be a single letter");
    x.label = label.empty() ? 0 : label[0];
    ev.push_back(x);
  }
  return StaircaseDiagram(std::move(ev));
}

Word read_staircase(const StaircaseDiagram& d) {
  Word w;
  for (std::size_t i = 0; i < d.events().size(); ++i) {
    const auto& e = d.events()[i];
    if (e.kind != StaircaseEvent::Kind::Crossing) continue;
    if (e.label == 0) throw InvalidArgument("staircase crossing " + std::to_string(i) + " has no sphere label");
    w.push_back((e.label - 'a' + 1) * e.sign);
  }
  return free_reduce(w);
}

StaircaseDiagram twist_insertion(const StaircaseDiagram& d, int n) {
  if (n < 0) throw InvalidArgument("twist_insertion needs n >= 0");
  if (d.passage_count() == 0) throw InvalidArgument("diagram marks no bicollar passages to twist");
  std::vector<StaircaseEvent> out;
  for (const auto& e : d.events()) {
    out.push_back(e);
    if (e.kind != StaircaseEvent::Kind::Passage) continue;
    for (int i = 0; i < n; ++i) out.push_back({StaircaseEvent::Kind::Crossing, e.label, e.sign, e.level});
  }
  return StaircaseDiagram(std::move(out));
}

}  // namespace sqk::group

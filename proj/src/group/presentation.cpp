#include "sqk/group/presentation.hpp"

#include "sqk/error.hpp"
#include "sqk/smith.hpp"

#include <cstdlib>

namespace sqk::group {

Presentation::Presentation(int generators, std::vector<Word> relators) : generators_(generators) {
  if (generators < 0) throw InvalidArgument("negative generator count");
  for (const Word& r : relators) {
    for (Letter x : r)
      if (x == 0 || std::abs(x) > generators)
        throw InvalidArgument("relator letter " + std::to_string(x) + " outside generators 1.." +
                              std::to_string(generators));
    Word c = cyclic_reduce(r);
    if (c.empty()) throw InvalidArgument("empty relator");
    relators_.push_back(std::move(c));
  }
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.size();
  return n;
}

std::string Presentation::str() const {
  std::string s = "<";
  for (int g = 1; g <= generators_; ++g) {
    if (g > 1) s += ",";
    s += to_string({g});
  }
  s += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) s += ", ";
    s += to_string(relators_[i]);
  }
  return s + ">";
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : relators_) rel.push_back(word_to_json(r));
  return {{"generators", generators_}, {"relators", rel}};
}

Presentation Presentation::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_number_integer())
    throw InvalidArgument("presentation JSON needs an integer \"generators\"");
  std::vector<Word> rel;
  if (j.contains("relators")) {
    if (!j["relators"].is_array()) throw InvalidArgument("\"relators\" must be an array");
    for (const auto& r : j["relators"]) rel.push_back(word_from_json(r));
  }
  return Presentation(j["generators"].get<int>(), std::move(rel));
}

Presentation presentation_Pn(int n) { return Presentation(2, {braid_relator(), mu_relator(n)}); }

std::vector<BigInt> abelianization_snf(const Presentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators()) m.push_back(exponent_vector(r, p.generators()));
  return smith_invariant_factors(std::move(m), static_cast<std::size_t>(p.generators()));
}

}  // namespace sqk::group

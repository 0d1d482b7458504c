#pragma once

#include "sqk/group/word.hpp"

#include <json.hpp>

#include <vector>

namespace sqk::group {

class Presentation {
 public:
  // Relators are cyclically reduced on entry; an empty relator (before or
  // after reduction) or a letter outside 1..generators is rejected.
  Presentation(int generators, std::vector<Word> relators);

  int generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t total_length() const;
  std::string str() const;  // <a,b | abaBAB, bbbAA>

  nlohmann::json to_json() const;
  static Presentation from_json(const nlohmann::json& j);

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  int generators_;
  std::vector<Word> relators_;
};

// ⟨a, b | aba = bab, aⁿ = bⁿ⁺¹⟩ as {braid_relator(), mu_relator(n)}.
Presentation presentation_Pn(int n);

// Invariant factors of the relator exponent matrix (rows = relators).
std::vector<BigInt> abelianization_snf(const Presentation& p);

}  // namespace sqk::group

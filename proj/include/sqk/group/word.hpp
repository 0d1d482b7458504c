#pragma once

// Words over generators 1..g, letters as signed integers: +i is the i-th
// generator, -i its inverse. Printed as a, b, c, ... with inverses in upper
// case (abaBAB = a b a b⁻¹ a⁻¹ b⁻¹).

#include "sqk/bigint.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sqk::group {

using Letter = int;
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
// Free reduction followed by cancelling across the ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long k);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

std::string to_string(const Word& w);
// Letters a-z, upper case for inverses; "1" or "" is the empty word.
Word parse_word(const std::string& text);

// Exponent sums per generator.
std::vector<BigInt> exponent_vector(const Word& w, int generators);

// a b a b⁻¹ a⁻¹ b⁻¹, the relator form of aba = bab.
Word braid_relator();
// b^{n+1} a^{-n}, the relator form of aⁿ = bⁿ⁺¹.
Word mu_relator(int n);

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

}  // namespace sqk::group

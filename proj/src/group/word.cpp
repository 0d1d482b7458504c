#include "sqk/group/word.hpp"

#include "sqk/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace sqk::group {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == 0) throw InvalidArgument("letter 0 is not a generator symbol");
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power(const Word& w, long k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return std::find(w.begin(), w.end(), 0) == w.end();
}

bool is_cyclically_reduced(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != -w.back());
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter x : w) {
    const int g = std::abs(x);
    if (g > 26) throw InvalidArgument("cannot print generator " + std::to_string(g) + " as a letter");
    const char c = static_cast<char>('a' + g - 1);
    s.push_back(x > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return s;
}

Word parse_word(const std::string& text) {
  Word w;
  if (text == "1") return w;
  for (char c : text) {
    if (c == ' ') continue;
    if (c >= 'a' && c <= 'z') w.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z') w.push_back(-(c - 'A' + 1));
    else throw InvalidArgument(std::string("bad letter '") + c + "' in word \"" + text + "\"");
  }
  return w;
}

std::vector<BigInt> exponent_vector(const Word& w, int generators) {
  std::vector<BigInt> v(static_cast<std::size_t>(generators), 0);
  for (Letter x : w) {
    const int g = std::abs(x);
    if (g < 1 || g > generators) throw InvalidArgument("letter outside the generator set");
    v[static_cast<std::size_t>(g - 1)] += x > 0 ? 1 : -1;
  }
  return v;
}

Word braid_relator() { return {1, 2, 1, -2, -1, -2}; }

Word mu_relator(int n) {
  if (n < 0) throw InvalidArgument("mu_relator needs n >= 0");
  Word w(static_cast<std::size_t>(n) + 1, 2);
  w.insert(w.end(), static_cast<std::size_t>(n), -1);
  return w;
}

nlohmann::json word_to_json(const Word& w) { return nlohmann::json(w); }

Word word_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  if (!j.is_array()) throw InvalidArgument("word must be an array of signed letters or a string");
  Word w;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() == 0) throw InvalidArgument("word letters must be nonzero integers");
    w.push_back(x.get<int>());
  }
  return w;
}

}  // namespace sqk::group

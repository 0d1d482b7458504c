#pragma once

// Linking-matrix shadow of Kirby calculus: off-diagonal entries are linking
// numbers, diagonal entries framings.

#include "sqk/smith.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sqk::kirby {

class FramedLinkMatrix {
 public:
  FramedLinkMatrix() = default;
  // Rejects non-square or non-symmetric input. Labels default to "K1", "K2", ...
  explicit FramedLinkMatrix(IntMatrix a, std::vector<std::string> labels = {});

  std::size_t size() const { return a_.size(); }
  const IntMatrix& matrix() const { return a_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

  nlohmann::json to_json() const;
  static FramedLinkMatrix from_json(const nlohmann::json& j);

  friend bool operator==(const FramedLinkMatrix&, const FramedLinkMatrix&) = default;

 private:
  IntMatrix a_;
  std::vector<std::string> labels_;
};

// Slide component i over component j: A ↦ EᵀAE with E = I + sign·e_j e_iᵀ.
FramedLinkMatrix handle_slide(const FramedLinkMatrix& a, std::size_t i, std::size_t j, int sign);

// Blow down a ±1-framed component k: A'_ij = A_ij - ε A_ik A_jk, ε = A_kk.
FramedLinkMatrix blow_down(const FramedLinkMatrix& a, std::size_t k);

// Add a ε-framed unknot with linking vector v: [[A + ε v vᵀ, v], [vᵀ, ε]].
// blow_down of the new last component recovers A.
FramedLinkMatrix blow_up(const FramedLinkMatrix& a, const std::vector<BigInt>& v, int eps);

// Direct sum with the Hopf pair [[0,1],[1,f]].
FramedLinkMatrix add_hopf_pair(const FramedLinkMatrix& a, const BigInt& f);

// Removes components k, k+1 if they form a split Hopf pair [[0,1],[1,f]]
// (or [[f,1],[1,0]]) with no linking to the rest.
FramedLinkMatrix cancel_hopf_pair(const FramedLinkMatrix& a, std::size_t k);

// Invariant factors of A: H_1 of the surgered manifold is ⊕ Z/d_i, zeros
// being free summands.
std::vector<BigInt> h1_invariants(const FramedLinkMatrix& a);

}  // namespace sqk::kirby

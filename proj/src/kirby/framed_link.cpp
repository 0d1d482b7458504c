#include "sqk/kirby/framed_link.hpp"

#include "sqk/error.hpp"

namespace sqk::kirby {

FramedLinkMatrix::FramedLinkMatrix(IntMatrix a, std::vector<std::string> labels)
    : a_(std::move(a)), labels_(std::move(labels)) {
  const std::size_t n = a_.size();
  for (const auto& row : a_)
    if (row.size() != n) throw InvalidArgument("linking matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a_[i][j] != a_[j][i])
        throw InvalidArgument("linking matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("K" + std::to_string(i + 1));
  if (labels_.size() != n) throw InvalidArgument("one label per component is required");
}

nlohmann::json FramedLinkMatrix::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& row : a_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(bigint_to_json(v));
    m.push_back(r);
  }
  return {{"matrix", m}, {"labels", labels_}};
}

FramedLinkMatrix FramedLinkMatrix::from_json(const nlohmann::json& j) {
  const nlohmann::json& mj = j.is_object() ? j.at("matrix") : j;
  if (!mj.is_array()) throw InvalidArgument("\"matrix\" must be an array of rows");
  IntMatrix m;
  for (const auto& row : mj) {
    if (!row.is_array()) throw InvalidArgument("matrix rows must be arrays");
    std::vector<BigInt> r;
    for (const auto& v : row) r.push_back(bigint_from_json(v));
    m.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.is_object() && j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return FramedLinkMatrix(std::move(m), std::move(labels));
}

FramedLinkMatrix handle_slide(const FramedLinkMatrix& a, std::size_t i, std::size_t j, int sign) {
  const std::size_t n = a.size();
  if (i >= n || j >= n) throw InvalidArgument("handle slide: component index out of range");
  if (i == j) throw InvalidArgument("handle slide: a component cannot slide over itself");
  if (sign != 1 && sign != -1) throw InvalidArgument("handle slide: sign must be +1 or -1");
  IntMatrix m = a.matrix();
  // column then row operation: C_i += s C_j, R_i += s R_j
  for (std::size_t r = 0; r < n; ++r) m[r][i] += sign * m[r][j];
  for (std::size_t c = 0; c < n; ++c) m[i][c] += sign * m[j][c];
  return FramedLinkMatrix(std::move(m), a.labels());
}

FramedLinkMatrix blow_down(const FramedLinkMatrix& a, std::size_t k) {
  const std::size_t n = a.size();
  if (k >= n) throw InvalidArgument("blow down: component index out of range");
  const BigInt eps = a.at(k, k);
  if (eps != 1 && eps != -1)
    throw InvalidArgument("blow down: component " + a.labels()[k] + " has framing " + eps.str() + ", not ±1");
  IntMatrix m;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      row.push_back(a.at(i, j) - eps * a.at(i, k) * a.at(j, k));
    }
    m.push_back(std::move(row));
    labels.push_back(a.labels()[i]);
  }
  return FramedLinkMatrix(std::move(m), std::move(labels));
}

FramedLinkMatrix blow_up(const FramedLinkMatrix& a, const std::vector<BigInt>& v, int eps) {
  const std::size_t n = a.size();
  if (v.size() != n) throw InvalidArgument("blow up: linking vector has the wrong length");
  if (eps != 1 && eps != -1) throw InvalidArgument("blow up: framing must be ±1");
  IntMatrix m(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j) + eps * v[i] * v[j];
    m[i][n] = v[i];
    m[n][i] = v[i];
  }
  m[n][n] = eps;
  auto labels = a.labels();
  labels.push_back("U" + std::to_string(n + 1));
  return FramedLinkMatrix(std::move(m), std::move(labels));
}

FramedLinkMatrix add_hopf_pair(const FramedLinkMatrix& a, const BigInt& f) {
  const std::size_t n = a.size();
  IntMatrix m(n + 2, std::vector<BigInt>(n + 2, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  m[n][n + 1] = 1;
  m[n + 1][n] = 1;
  m[n + 1][n + 1] = f;
  auto labels = a.labels();
  labels.push_back("H" + std::to_string(n + 1));
  labels.push_back("H" + std::to_string(n + 2));
  return FramedLinkMatrix(std::move(m), std::move(labels));
}

FramedLinkMatrix cancel_hopf_pair(const FramedLinkMatrix& a, std::size_t k) {
  const std::size_t n = a.size();
  if (k + 1 >= n) throw InvalidArgument("cancel Hopf pair: index out of range");
  if (a.at(k, k + 1) != 1 || (a.at(k, k) != 0 && a.at(k + 1, k + 1) != 0))
    throw InvalidArgument("cancel Hopf pair: components are not a Hopf pair with a 0-framed member");
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k || i == k + 1) continue;
    if (a.at(i, k) != 0 || a.at(i, k + 1) != 0)
      throw InvalidArgument("cancel Hopf pair: pair still links component " + a.labels()[i]);
  }
  IntMatrix m;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k || i == k + 1) continue;
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k && j != k + 1) row.push_back(a.at(i, j));
    m.push_back(std::move(row));
    labels.push_back(a.labels()[i]);
  }
  return FramedLinkMatrix(std::move(m), std::move(labels));
}

std::vector<BigInt> h1_invariants(const FramedLinkMatrix& a) { return smith_invariant_factors(a.matrix(), a.size()); }

}  // namespace sqk::kirby

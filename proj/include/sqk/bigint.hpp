#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include <json.hpp>

namespace sqk {

using BigInt = boost::multiprecision::cpp_int;

// JSON numbers when the value fits in int64, decimal strings otherwise.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt big_gcd(BigInt a, BigInt b);

}  // namespace sqk

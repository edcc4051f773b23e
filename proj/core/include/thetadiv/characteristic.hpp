#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thetadiv {

enum class Parity { Even, Odd };

/// Half-integer characteristic [eps, delta]: two 0/1 vectors of length g.
/// theta[eps,delta] is an even or odd function of z according to the pairing
/// t(eps)·delta mod 2.
struct Characteristic {
  std::vector<uint8_t> eps;
  std::vector<uint8_t> delta;

  Characteristic() = default;
  Characteristic(std::vector<uint8_t> e, std::vector<uint8_t> d);

  int genus() const { return (int)eps.size(); }
  int parity() const;
  bool is_even() const { return parity() == 0; }

  static Characteristic zero(int g);
  /// "0101|0011" — eps bits, then delta bits.
  static Characteristic parse(std::string_view s);
  std::string str() const;

  bool operator==(const Characteristic&) const = default;
};

/// All characteristics of the requested parity, in a fixed deterministic order.
/// Counts: 2^{g-1}(2^g+1) even, 2^{g-1}(2^g-1) odd, 4^g together.
std::vector<Characteristic> enumerate_characteristics(int g, Parity parity);

}  // namespace thetadiv

#include "thetadiv/characteristic.hpp"

#include "thetadiv/errors.hpp"

namespace thetadiv {

Characteristic::Characteristic(std::vector<uint8_t> e, std::vector<uint8_t> d)
    : eps(std::move(e)), delta(std::move(d)) {
  if (eps.size() != delta.size() || eps.empty())
    throw DimensionMismatch("characteristic: eps/delta length mismatch or empty");
  for (size_t i = 0; i < eps.size(); ++i)
    if (eps[i] > 1 || delta[i] > 1) throw Error("characteristic: entries must be 0 or 1");
}

int Characteristic::parity() const {
  int p = 0;
  for (size_t i = 0; i < eps.size(); ++i) p ^= eps[i] & delta[i];
  return p;
}

Characteristic Characteristic::zero(int g) {
  return Characteristic(std::vector<uint8_t>(g, 0), std::vector<uint8_t>(g, 0));
}

Characteristic Characteristic::parse(std::string_view s) {
  size_t bar = s.find('|');
  if (bar == std::string_view::npos) throw ParseError("characteristic: missing '|'");
  auto bits = [](std::string_view t) {
    std::vector<uint8_t> v;
    for (char c : t) {
      if (c != '0' && c != '1') throw ParseError("characteristic: bits must be 0/1");
      v.push_back(c - '0');
    }
    return v;
  };
  return Characteristic(bits(s.substr(0, bar)), bits(s.substr(bar + 1)));
}

std::string Characteristic::str() const {
  std::string s;
  for (auto b : eps) s += char('0' + b);
  s += '|';
  for (auto b : delta) s += char('0' + b);
  return s;
}

std::vector<Characteristic> enumerate_characteristics(int g, Parity parity) {
  if (g < 1 || g > 15) throw Error("enumerate_characteristics: genus out of range");
  std::vector<Characteristic> out;
  int want = parity == Parity::Even ? 0 : 1;
  for (uint32_t e = 0; e < (1u << g); ++e)
    for (uint32_t d = 0; d < (1u << g); ++d) {
      if (__builtin_popcount(e & d) % 2 != want) continue;
      std::vector<uint8_t> ev(g), dv(g);
      for (int i = 0; i < g; ++i) {
        ev[i] = (e >> i) & 1;
        dv[i] = (d >> i) & 1;
      }
      out.emplace_back(std::move(ev), std::move(dv));
    }
  return out;
}

}  // namespace thetadiv

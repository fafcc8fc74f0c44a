#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ubfm {

constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr uint64_t mix64(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

constexpr uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stateful deterministic generator for seeding tables and tests.
struct SplitMix {
  uint64_t state;
  explicit constexpr SplitMix(uint64_t seed) : state(seed) {}
  constexpr uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  constexpr uint64_t below(uint64_t n) { return next() % n; }
  constexpr double unit() {  // uniform in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

// Random keys per (cell, occupant) plus a side-to-move key. Rebuilding from
// the same seed is bit-identical.
struct ZobristTables {
  std::vector<std::array<uint64_t, 2>> cell;  // [cell][occupant-1]
  uint64_t side_second{0};

  ZobristTables() = default;
  ZobristTables(int cells, uint64_t seed) {
    SplitMix g(seed);
    cell.resize(static_cast<size_t>(cells));
    for (auto& c : cell) {
      c[0] = g.next();
      c[1] = g.next();
    }
    side_second = g.next();
  }

  uint64_t piece(int cell_index, int occupant /*1 or 2*/) const {
    return cell[static_cast<size_t>(cell_index)][occupant - 1];
  }
};

}  // namespace ubfm

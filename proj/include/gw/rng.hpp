#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gw::rng {

// All randomness in the toolkit flows from one master seed. Sub-streams are
// derived by folding tag words through the splitmix64 finalizer, so a record's
// stream depends only on (master seed, stage, path, counters) and never on
// execution or thread order.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum Stage : std::uint64_t {
  kTrainData = 1,
  kMonitorData = 2,
  kCnnInit = 3,
  kCnnShuffle = 4,
  kCnnDropout = 5,
  kCnnSplit = 6,
  kGmmInit = 7,
  kKlDraw = 8,
  kBaselineSample = 9,
  kSelectK = 10,
};

inline std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = splitmix64(seed);
  for (std::uint64_t t : tags) s = splitmix64(s ^ t);
  return s;
}

inline std::mt19937_64 engine(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  return std::mt19937_64(derive(seed, tags));
}

}  // namespace gw::rng

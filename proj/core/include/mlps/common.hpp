#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mlps {

namespace detail {

inline void cat_into(std::ostringstream&) {}

template <typename Head, typename... Tail>
void cat_into(std::ostringstream& os, Head&& head, Tail&&... tail) {
  os << head;
  cat_into(os, std::forward<Tail>(tail)...);
}

}  // namespace detail

/// Stringify a mixed argument list (error messages, CSV cells).
template <typename... Args>
std::string cat(Args&&... args) {
  std::ostringstream os;
  detail::cat_into(os, std::forward<Args>(args)...);
  return os.str();
}

template <typename... Args>
[[noreturn]] void fail(Args&&... args) {
  throw std::invalid_argument(cat(std::forward<Args>(args)...));
}

template <typename... Args>
void require(bool condition, Args&&... args) {
  if (!condition) fail(std::forward<Args>(args)...);
}

inline std::string shape_str(const std::vector<int64_t>& shape) {
  std::string s = "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(shape[i]);
  }
  return s + "]";
}

/// FNV-1a, used for run ids and content hashes in tests.
inline uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// splitmix64 finalizer; mixes stream/epoch/batch indices into seeds.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(mix64(a) ^ b); }
inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) { return mix64(mix64(a, b) ^ c); }

}  // namespace mlps

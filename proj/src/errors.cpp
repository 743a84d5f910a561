#include "ul/errors.hpp"

#include <atomic>
#include <cstdlib>

namespace ul {

namespace {

constexpr std::uint64_t kDefaultBound = 500'000'000ULL;

std::uint64_t initial_bound() {
  if (const char *env = std::getenv("UL_MAX_ENUM")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return kDefaultBound;
}

std::atomic<std::uint64_t> &bound_ref() {
  static std::atomic<std::uint64_t> b{initial_bound()};
  return b;
}

} // namespace

std::uint64_t enumeration_bound() { return bound_ref().load(); }

void set_enumeration_bound(std::uint64_t bound) { bound_ref().store(bound); }

void check_enumeration(std::uint64_t size, const std::string &what) {
  if (size > enumeration_bound())
    throw BoundExceeded(what + ": enumeration size " + std::to_string(size) +
                        " exceeds bound " +
                        std::to_string(enumeration_bound()));
}

} // namespace ul

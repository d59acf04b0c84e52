#pragma once

// Soft memory-estimate ceiling, settable from the CLI and the HLAB_RESOURCE_MB
// environment variable.  Estimates are coarse (counts of basis elements and
// matrix entries); the point is to refuse hopeless inputs early instead of
// thrashing.

#include <atomic>
#include <cstdlib>
#include <string>

#include "hlab/errors.hpp"

namespace hlab {

namespace detail {
inline std::atomic<long long>& resource_cap_bytes() {
  static std::atomic<long long> cap = [] {
    long long mb = 4096;
    if (const char* env = std::getenv("HLAB_RESOURCE_MB")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v > 0) mb = v;
    }
    return mb * 1024 * 1024;
  }();
  return cap;
}
}  // namespace detail

inline void set_resource_cap_mb(long long mb) {
  detail::resource_cap_bytes().store(mb * 1024 * 1024);
}

inline void require_resources(long long estimated_bytes, const std::string& what) {
  long long cap = detail::resource_cap_bytes().load();
  if (estimated_bytes > cap)
    throw ResourceLimitError(what + " needs ~" + std::to_string(estimated_bytes / (1024 * 1024)) +
                             " MB, cap is " + std::to_string(cap / (1024 * 1024)) +
                             " MB (HLAB_RESOURCE_MB)");
}

}  // namespace hlab

#include "zpd/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zpd {

std::size_t default_worker_count() {
  if (const char* env = std::getenv("ZPD_WORKERS")) {
    try {
      auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace zpd

#include "gibbsbo/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gibbsbo {

std::size_t worker_count() {
  if (const char* env = std::getenv("GIBBSBO_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace gibbsbo

#include "halfmmp/parallel.hpp"

#include <cstdlib>
#include <string>

namespace halfmmp {

std::size_t worker_count() {
  if (const char* env = std::getenv("HALFMMP_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace halfmmp

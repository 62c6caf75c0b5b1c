#include "wga/parallel.hpp"

#include <cstdlib>
#include <string>

namespace wga {

int worker_count() {
  int available = 1;
#ifdef _OPENMP
  available = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("WGA_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < available) return cap;
    } catch (const std::exception&) {
      // unparsable values are ignored
    }
  }
  return available;
}

}  // namespace wga

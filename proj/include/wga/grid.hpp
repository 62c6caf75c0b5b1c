#pragma once

#include <cstddef>
#include <vector>

namespace wga {

/// n points spanning [lo, hi] inclusive; n == 1 gives {lo}.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

}  // namespace wga

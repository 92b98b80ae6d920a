#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "psifrac/frac_ops.hpp"

namespace psifrac::cli {

// Entry point shared by the executable and the tests. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// sup_{j >= skip} |num_j − oracle(x_j)| / sup_{j >= skip} |oracle(x_j)|
double relative_sup_error(const SampledFunction& numeric, const std::function<double(double)>& oracle, int skip = 2);

struct FigureData {
  std::string kernel_id;
  double a;
  double b;
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // x, five oracle columns, numeric μ = 0.5 column
};

inline constexpr double figure_mus[] = {0.1, 0.3, 0.5, 0.8, 1.0};
inline constexpr int figure_samples = 200;
inline constexpr int figure_grid = 1024;

// which ∈ {1, 2, 3}: identity on [0, 1], sqrt_shift:1 on [0, 1], log on [1, e].
FigureData build_figure(int which);

}  // namespace psifrac::cli

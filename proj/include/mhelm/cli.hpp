#pragma once
#include <map>
#include <string>
#include <vector>

#include "mhelm/types.hpp"

namespace mhelm {

// Shared command-line options. threads == -1 means "unset": fall back to the
// MESHLESS_HELM_THREADS environment variable, then to auto (0).
struct CliOptions {
  std::string out_dir = ".";
  int threads = -1;
  std::string lambda_convention = "pde";  // pde | paper
  std::string stehfest_sign = "derived";  // derived | paper
  double reg = 0.0;
  bool reg_set = false;
  std::map<std::string, std::string> overrides;  // bench grid filters (--M, --N, ...)
};

// Exit codes: 0 success, 2 configuration error, 3 solver failure.
int run_cli(int argc, const char* const* argv);

int cmd_solve(const std::string& config_path, const CliOptions& opts);
int cmd_bench(const std::string& example_id, const CliOptions& opts);
int cmd_weights(int ns, const CliOptions& opts);

// Evaluation point sets used by the benchmark suite (also handy in tests).
// disk_spiral_points: `interior` points on the spiral r = theta/14,
// theta in [2pi, 4pi], plus `boundary` points on the unit circle.
std::vector<Point> disk_spiral_points(int interior, int boundary);
// The six probe points of the square diffusion runs: (-0.01, +-{0.01,0.04,0.07}).
std::vector<Point> heat_probe_points();
// The six probe points of the square wave runs: (x, 0.35).
std::vector<Point> wave_probe_points();

}  // namespace mhelm

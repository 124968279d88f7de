#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "klag/params.hpp"
#include "klag/types.hpp"

namespace klag::cli {

/// Every option of the command line; the config file sets the same keys.
struct RunConfig {
  int N = 1;
  double a = 2.0;
  std::string k = "0";
  std::string format = "csv";
  std::string output;

  // kernel
  std::string z = "0.5";
  std::string kind = "auto";
  std::string scope = "auto";
  double grid_min = -2.0;
  double grid_max = 2.0;
  int grid_count = 5;
  std::string x_dir;
  std::string y_dir;

  // transform
  std::string input;
  int l_max = 40;
  int n_radial = 64;
  double max_defect = 1e-6;

  // spectrum
  int count = 10;

  // verify
  std::string suite = "all";

  /// Validated deformation parameters.
  DeformParams params() const;
};

/// Comma-separated numbers.
std::vector<double> parse_list(const std::string& s);

/// Complex literal such as 0.5, 2i, -i or 0+1.5707963i.
cplx parse_complex(const std::string& s);

/// Sampled function file: a header line naming the columns, then numeric rows.
struct SampleTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
SampleTable read_samples(const std::string& path);

/// Shortest round-trip decimal form of v.
std::string num(double v);

/// Opens the output path, or returns std::cout for an empty path.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path);
  std::ostream& stream();

 private:
  std::unique_ptr<std::ostream> file_;
};

}  // namespace klag::cli

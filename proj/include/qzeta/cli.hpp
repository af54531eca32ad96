#pragma once

// Subcommands of the qzeta command-line tool. Each cmd_* writes its
// rendering to `out` and returns the process exit status:
//   0  every check passed
//   1  a check failed (or the bench detected a strategy mismatch)
//   2  usage error

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

enum class Format { Text, Json, Csv };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultOrder = 200;
inline constexpr unsigned kDefaultNMax = 20;

struct CliConfig {
  std::string subcommand;
  std::vector<unsigned> ks{1};
  std::size_t order = kDefaultOrder;
  Format format = Format::Text;
  std::string out_path;  // empty: stdout
  unsigned n_max = kDefaultNMax;
  unsigned fourk = 0;    // count: 0 means 4 * ks.front()
  std::vector<double> q_points;  // limit: empty means default_q_points()
  std::string limit_kind = "zeta";  // limit: zeta | qgamma
};

int cmd_poly(unsigned k, Format format, std::ostream& out);
int cmd_verify(const std::vector<unsigned>& ks, std::size_t order, Format format, std::ostream& out);
int cmd_count(unsigned fourk, unsigned n_max, Format format, std::ostream& out);
int cmd_limit(unsigned k, const std::vector<double>& q_points, Format format, std::ostream& out,
              const std::string& kind = "zeta");
int cmd_bench(std::size_t order, Format format, std::ostream& out);

/// Dispatches a parsed configuration, honoring out_path.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs the selected subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qzeta

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace allotax {

inline constexpr const char* kVersion = "0.1.0";

/// IO failure: missing file, unwritable path, network trouble.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data. Carries a 1-based line number when known.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// One master seed, many independent deterministic streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

/// mt19937_64 with portable bounded draws (no distribution objects, whose
/// output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). Lemire multiply-shift; bias < n/2^64.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

int effective_threads(int requested);

/// Runs fn(begin, end) over contiguous chunks of [0, n) on `threads` threads.
/// threads <= 1 runs inline. First worker exception is rethrown after join.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

std::string sha256_hex(std::string_view data);
std::string sha256_hex_file(const std::filesystem::path& path);

/// Shortest-ish deterministic formatting, %.{sig}g.
std::string format_double(double v, int significant = 12);

/// Tie-averaged ranks are integers or half-integers: "17" or "17.5".
std::string format_rank(double r);

std::vector<std::string_view> split_tab(std::string_view line);

/// Writes "# ..." lines: the standard metadata comment block for outputs.
std::string comment_block(const std::vector<std::string>& lines);

}  // namespace allotax

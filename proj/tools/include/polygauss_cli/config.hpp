#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace polygauss::cli {

enum class OutputFormat { Human, Json, Csv };

struct RunConfig {
  /// Pass/fail threshold: 1e-9 for identities, 1e-6 for classification.
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// 0 means one worker per hardware thread.
  unsigned thread_count = 1;
  OutputFormat output = OutputFormat::Human;
};

inline constexpr const char* kThreadsEnv = "POLYGAUSS_THREADS";

/// Parses a POLYGAUSS_THREADS value: a non-negative integer or "auto".
/// Throws polygauss::Error(MalformedInput) otherwise.
unsigned parse_thread_count(const std::string& text);

/// The thread count after applying the POLYGAUSS_THREADS override, if set.
unsigned effective_threads(unsigned requested, const char* env_value);

}  // namespace polygauss::cli

#include "polygauss_cli/config.hpp"

#include <charconv>

#include "polygauss/error.hpp"

namespace polygauss::cli {

unsigned parse_thread_count(const std::string& text) {
  if (text == "auto") return 0;
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw Error(ErrorCode::MalformedInput, std::string(kThreadsEnv) + ": expected a non-negative integer or 'auto', got '" + text + "'");
  return value;
}

unsigned effective_threads(unsigned requested, const char* env_value) {
  if (env_value == nullptr) return requested;
  return parse_thread_count(env_value);
}

}  // namespace polygauss::cli

#pragma once

#include <stdexcept>
#include <string>

namespace bunblocks {

enum class errc {
  invalid_argument, // parameter outside the supported range
  unsupported,      // well-formed request the library deliberately refuses
  search_limit,     // iteration bound exhausted without resolution
  check_failed,     // an internal cross-validation did not hold
  internal
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(errc::invalid_argument, what);
}
[[noreturn]] inline void throw_unsupported(const std::string& what) {
  throw Error(errc::unsupported, what);
}
[[noreturn]] inline void throw_search_limit(const std::string& what) {
  throw Error(errc::search_limit, what);
}
[[noreturn]] inline void throw_check_failed(const std::string& what) {
  throw Error(errc::check_failed, what);
}

} // namespace bunblocks

#pragma once

#include <stdexcept>
#include <string>

namespace stokes {

// Every domain failure carries a stable machine-readable kind next to the
// human message; the JSON layer maps kind -> error object verbatim.
class StokesError : public std::runtime_error {
 public:
  StokesError(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw StokesError(kind, msg);
}

}  // namespace stokes

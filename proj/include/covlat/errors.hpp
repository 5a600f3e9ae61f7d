#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace covlat {

// All library failures carry a stable kind token ("NotACovering", "UnknownLabel",
// ...) that doubles as the first word of CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string detail)
      : std::runtime_error(detail.empty() ? kind : kind + ": " + detail),
        kind_(std::move(kind)),
        detail_(std::move(detail)) {}

  const std::string& kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

}  // namespace covlat

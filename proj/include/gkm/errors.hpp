#ifndef GKM_ERRORS_HPP
#define GKM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkm {

/// A named hypothesis of the quotient construction failed validation.
class AssumptionError : public std::runtime_error {
 public:
  AssumptionError(std::string assumption, const std::string& detail)
      : std::runtime_error(assumption + ": " + detail),
        assumption_(std::move(assumption)) {}

  const std::string& assumption() const { return assumption_; }

 private:
  std::string assumption_;
};

/// Two internal computation routes disagreed; the result cannot be trusted.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& detail) : std::logic_error(detail) {}
};

} // namespace gkm

#endif

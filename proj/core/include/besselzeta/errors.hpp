#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace besselzeta {

// Error taxonomy mirrored by the CLI exit codes: domain and gate violations
// map to exit 2, numerical non-convergence to exit 3. Each error carries a
// short machine-readable code ("pole_guard", "positivity_gate", ...).
class DomainError : public std::domain_error {
  public:
    DomainError(std::string code, const std::string& what)
        : std::domain_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

} // namespace besselzeta

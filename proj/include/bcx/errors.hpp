#pragma once

#include <stdexcept>
#include <string>

namespace bcx {

struct SingularOperand : std::domain_error {
  explicit SingularOperand(const std::string& what) : std::domain_error(what) {}
};

struct MissingAnalyticPartials : std::logic_error {
  explicit MissingAnalyticPartials(const std::string& what) : std::logic_error(what) {}
};

struct InvalidCoupling : std::invalid_argument {
  explicit InvalidCoupling(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularPhasePoint : std::domain_error {
  explicit SingularPhasePoint(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateDenominator : std::domain_error {
  explicit DegenerateDenominator(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateProjection : std::domain_error {
  explicit DegenerateProjection(const std::string& what) : std::domain_error(what) {}
};

struct SingularWavefunctionValue : std::domain_error {
  explicit SingularWavefunctionValue(const std::string& what) : std::domain_error(what) {}
};

struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bcx

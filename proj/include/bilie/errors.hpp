#pragma once

#include <stdexcept>
#include <string>

namespace bilie {

/// Invalid argument values: bad bidegrees, bad w_K, malformed words.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation would need degrees beyond the configured truncation.
/// Always raised explicitly; results are never silently cut off.
class TruncationError : public std::runtime_error {
public:
  TruncationError(int needed, int truncation)
      : std::runtime_error("degree " + std::to_string(needed) +
                           " exceeds truncation " + std::to_string(truncation)),
        needed_(needed), truncation_(truncation) {}

  int needed() const { return needed_; }
  int truncation() const { return truncation_; }

private:
  int needed_;
  int truncation_;
};

/// Caller violated an operation contract (e.g. a derivation claimed special
/// does not annihilate [x,y]).
class ContractError : public std::logic_error {
public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Raised by the generator-extraction inverse when the input dimension table
/// cannot come from a free bigraded Lie algebra. Carries the first offending
/// bidegree instead of clamping the defect to zero.
class NotFreeError : public std::runtime_error {
public:
  NotFreeError(int m1, int m2, const std::string& what)
      : std::runtime_error(what), m1_(m1), m2_(m2) {}

  int m1() const { return m1_; }
  int m2() const { return m2_; }

private:
  int m1_;
  int m2_;
};

/// Internal consistency failure; indicates a bug, never valid input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bilie

#ifndef LATPOLY_CONFIG_HPP
#define LATPOLY_CONFIG_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "latpoly/error.hpp"

namespace latpoly {

inline constexpr std::uint64_t kDefaultEvaluationBudget = 10'000'000;
inline constexpr std::size_t kDefaultMaskWidth = 20;
inline constexpr std::size_t kMaxMaskWidth = 30;
inline constexpr std::size_t kDefaultMaxElements = 256;

namespace detail {
inline std::atomic<std::uint64_t> g_evaluation_budget{kDefaultEvaluationBudget};
inline std::atomic<std::size_t> g_mask_width{kDefaultMaskWidth};
}  // namespace detail

/// Maximum number of point evaluations any single exhaustive operation may perform.
inline std::uint64_t evaluation_budget() noexcept { return detail::g_evaluation_budget.load(); }
inline void set_evaluation_budget(std::uint64_t limit) noexcept { detail::g_evaluation_budget.store(limit); }

/// Largest arity accepted by subset-indexed (DNF) operations.
inline std::size_t mask_width() noexcept { return detail::g_mask_width.load(); }
inline void set_mask_width(std::size_t width) {
  if (width == 0 || width > kMaxMaskWidth)
    throw InvalidParams("mask width must be in [1, " + std::to_string(kMaxMaskWidth) + "]");
  detail::g_mask_width.store(width);
}

/// Restores the previous budget on scope exit.
class ScopedBudget {
 public:
  explicit ScopedBudget(std::uint64_t limit) : saved_(evaluation_budget()) { set_evaluation_budget(limit); }
  ~ScopedBudget() { set_evaluation_budget(saved_); }
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

 private:
  std::uint64_t saved_;
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) noexcept {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

/// Throws BudgetExceeded when `required` exceeds the current budget.
inline void require_budget(const std::string& what, std::uint64_t required) {
  const auto allowed = evaluation_budget();
  if (required > allowed) throw BudgetExceeded(what, required, allowed);
}

/// Running tally for loops whose cost is only known as they progress.
class BudgetMeter {
 public:
  explicit BudgetMeter(std::string what) : what_(std::move(what)), allowed_(evaluation_budget()) {}

  void charge(std::uint64_t evaluations) {
    used_ = saturating_add(used_, evaluations);
    if (used_ > allowed_) throw BudgetExceeded(what_, used_, allowed_);
  }

  std::uint64_t used() const noexcept { return used_; }

 private:
  std::string what_;
  std::uint64_t allowed_;
  std::uint64_t used_ = 0;
};

}  // namespace latpoly

#endif  // LATPOLY_CONFIG_HPP

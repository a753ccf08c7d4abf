#ifndef TGR_LIMITS_HPP
#define TGR_LIMITS_HPP

// Vocabulary shared by the limit computations on graphs and on terms.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

namespace tgr {

/// seq[start + k] == seq[start + k + period] for every k the data covers.
struct Cycle {
  std::size_t start = 0;
  std::size_t period = 1;

  bool operator==(const Cycle&) const = default;
};

struct LimitOptions {
  std::size_t depth = 16;
  std::size_t window = 8;
};

enum class LimitStatus { exact, stable_to_depth, divergent, inconclusive };

enum class Discipline { weak_m, weak_p, strong_m, strong_p };

enum class Verdict { converged_exact, converged_to_depth, diverged, inconclusive };

inline constexpr Discipline all_disciplines[] = {Discipline::weak_m, Discipline::weak_p,
                                                 Discipline::strong_m, Discipline::strong_p};

std::string_view to_string(LimitStatus status) noexcept;
std::string_view to_string(Discipline discipline) noexcept;
std::string_view to_string(Verdict verdict) noexcept;
std::optional<Discipline> parse_discipline(std::string_view text) noexcept;

/// Smallest period p (then earliest start s) such that the sequence is
/// p-periodic from s and the periodic part spans at least two full periods.
template <class T, class Eq = std::equal_to<>>
std::optional<Cycle> find_cycle(std::span<const T> seq, Eq eq = {}) {
  const std::size_t n = seq.size();
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t s = n - p;
    while (s > 0 && eq(seq[s - 1], seq[s - 1 + p])) --s;
    if (n - s >= 2 * p) return Cycle{s, p};
  }
  return std::nullopt;
}

}  // namespace tgr

#endif  // TGR_LIMITS_HPP

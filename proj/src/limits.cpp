#include "tgr/limits.hpp"

namespace tgr {

std::string_view to_string(LimitStatus status) noexcept {
  switch (status) {
    case LimitStatus::exact: return "exact";
    case LimitStatus::stable_to_depth: return "stable-to-depth";
    case LimitStatus::divergent: return "divergent";
    case LimitStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Discipline discipline) noexcept {
  switch (discipline) {
    case Discipline::weak_m: return "weak-m";
    case Discipline::weak_p: return "weak-p";
    case Discipline::strong_m: return "strong-m";
    case Discipline::strong_p: return "strong-p";
  }
  return "weak-m";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::converged_exact: return "converged-exact";
    case Verdict::converged_to_depth: return "converged-to-depth";
    case Verdict::diverged: return "diverged";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<Discipline> parse_discipline(std::string_view text) noexcept {
  for (Discipline d : all_disciplines) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

}  // namespace tgr

#pragma once

#include <string>
#include <vector>

namespace srkit {

inline constexpr unsigned kDefaultBits = 128;
inline constexpr unsigned kMaxBits = 4096;

enum class CheckStatus { Pass, Fail, Undecided, Exempt };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Undecided: return "undecided";
    case CheckStatus::Exempt: return "exempt";
  }
  return "?";
}

// One verified inequality or identity: which check, at which point(s), the
// outcome, and the exact margin as a canonical string. Enclosure-dependent
// checks also record the precision ladder they walked.
struct CheckItem {
  std::string check;
  long point = 0;
  long aux = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string margin;
  unsigned bits_used = 0;
  std::vector<unsigned> refinement;
};

struct PropertyReport {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& i : items)
      if (i.status != CheckStatus::Pass && i.status != CheckStatus::Exempt)
        return false;
    return true;
  }
  bool any_fail() const {
    for (const auto& i : items)
      if (i.status == CheckStatus::Fail) return true;
    return false;
  }
  bool any_undecided() const {
    for (const auto& i : items)
      if (i.status == CheckStatus::Undecided) return true;
    return false;
  }
  const CheckItem* first_failure() const {
    for (const auto& i : items)
      if (i.status == CheckStatus::Fail || i.status == CheckStatus::Undecided)
        return &i;
    return nullptr;
  }

  void add(CheckItem item) { items.push_back(std::move(item)); }
  void append(const PropertyReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace srkit

#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace duality {

/// Outcome of one named check inside a validation report.
struct CheckItem {
  std::string name;
  bool ok = true;
  std::string witness;  // empty when ok
};

/// A validation report: an ordered list of named per-check verdicts.
/// Checks record at most one witness each, the first in index order,
/// so reports are deterministic for a given input.
struct Report {
  std::vector<CheckItem> items;

  bool ok() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& c) { return c.ok; });
  }

  void pass(std::string name) { items.push_back({std::move(name), true, {}}); }

  void fail(std::string name, std::string witness) {
    items.push_back({std::move(name), false, std::move(witness)});
  }

  void record(std::string name, bool ok, std::string witness) {
    if (ok)
      pass(std::move(name));
    else
      fail(std::move(name), std::move(witness));
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& c : items)
      if (c.name == name) return &c;
    return nullptr;
  }

  /// Merge another report's items into this one, in order.
  void append(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace duality

#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace csf {

// One item of the reproduction battery.  Exploratory items (open-question
// sweeps) report a verdict but never count as failures.
struct BatteryItem {
  int id = 0;
  std::string name;
  bool exploratory = false;
  bool passed = false;
  std::string detail;  // one-line diagnostic; never empty for failures
  std::chrono::milliseconds elapsed{0};
};

struct BatteryResult {
  std::vector<BatteryItem> items;
  // Conjunction of `passed` over the non-exploratory items.
  bool all_passed = false;
};

// Runs the twelve battery items in order.  When `live` is non-null, one
// formatted line per item is streamed to it as the item finishes.
BatteryResult run_battery(std::ostream* live = nullptr);

// "[ 3/12] pass      41 ms  complete graphs: X equals n!*e_n ..." plus the
// detail after a separator when present.  Pass include_timing = false for
// byte-reproducible output (drops the elapsed-time column).
std::string battery_line(const BatteryItem& item, int total, bool include_timing = true);

}  // namespace csf

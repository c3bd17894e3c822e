// Copyright 2026 The linkirr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance run: one PASS/FAIL line per criterion, details underneath.
// Exits non-zero when any criterion fails.

#include <cstdlib>
#include <iostream>

#include "linkirr/verification.hpp"

int main(int argc, char** argv) {
  linkirr::BatteryOptions options;
  for (int i = 1; i < argc; ++i) options.only.insert(std::atoi(argv[i]));
  linkirr::Battery battery(options);
  bool all = true;
  int passed = 0, total = 0;
  for (int id = 1; id <= linkirr::kCriterionCount; ++id) {
    if (!options.only.empty() && !options.only.count(id)) continue;
    const auto r = battery.run_one(id);
    ++total;
    passed += r.passed;
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title
              << (r.degraded ? " (degraded)" : "") << " (" << r.seconds << " s)\n";
    for (const auto& d : r.details) std::cout << "      " << d << '\n';
    std::cout.flush();
  }
  std::cout << passed << "/" << total << " criteria passed\n";
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}

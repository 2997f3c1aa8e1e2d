//
// Copyright 2026 The Diacritica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DIACRITICA_DIAGNOSTICS_HPP_
#define DIACRITICA_DIAGNOSTICS_HPP_

#include <atomic>
#include <cstdint>
#include <ostream>

namespace diacritica {

// Warning counters shared by a run. Never written to data outputs.
struct Diagnostics {
  std::atomic<std::uint64_t> irregular_spacing_lines{0};
  std::atomic<std::uint64_t> alignment_fallbacks{0};
  std::atomic<std::uint64_t> backend_failures{0};

  void print(std::ostream& os) const {
    os << "irregular_spacing_lines=" << irregular_spacing_lines.load()
       << " alignment_fallbacks=" << alignment_fallbacks.load()
       << " backend_failures=" << backend_failures.load() << '\n';
  }
};

}  // namespace diacritica

#endif  // DIACRITICA_DIAGNOSTICS_HPP_

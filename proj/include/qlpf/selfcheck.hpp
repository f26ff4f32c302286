#pragma once

#include <cstdint>

#include "qlpf/format.hpp"

namespace qlpf {

struct SelfcheckOptions {
  std::uint64_t seed = 1;
  std::size_t instances = 40;
  Exec exec = Exec::parallel;
};

/// Randomized cross-checks over F_2 and F_3: the two defect routes inside
/// extended_core, the direct modular oracle, and script round-trips of every
/// generated value. Throws VerificationError on the first disagreement.
Json run_selfcheck(const SelfcheckOptions& options);

}  // namespace qlpf

// One entry point choosing the decider by fragment.
#pragma once

#include <optional>
#include <vector>

#include "relsyl/clausal.hpp"
#include "relsyl/deciders.hpp"

namespace relsyl {

struct DispatchOptions {
  // Decide as this fragment; it must contain the detected one.
  std::optional<Fragment> fragment;
  DecideOptions decide;
  ClausalOptions clausal;
};

// The fragment decide() would run for this input.
Fragment dispatch_fragment(const std::vector<Sentence>& gamma, const Sentence& phi,
                           std::optional<Fragment> override_fragment = std::nullopt);

// L1 -> decide_l1; L2, L2+ -> decide_l2plus; L3 -> decide_l3; L3.5 -> decide_l35;
// L4 .. L4.5+ -> decide_clausal; L5, L5.5 -> decide_l5. Throws FragmentError
// when no fragment fits or the override does not contain the input.
Verdict decide(const std::vector<Sentence>& gamma, const Sentence& phi, const DispatchOptions& options = {});

}  // namespace relsyl

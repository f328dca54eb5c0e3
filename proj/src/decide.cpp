#include "relsyl/decide.hpp"

#include "relsyl/errors.hpp"

namespace relsyl {

Fragment dispatch_fragment(const std::vector<Sentence>& gamma, const Sentence& phi,
                           std::optional<Fragment> override_fragment) {
  std::vector<Sentence> all = gamma;
  all.push_back(phi);
  auto detected = fragment_of(all);
  if (!detected) throw FragmentError("the input lies in no supported fragment");
  if (!override_fragment) return *detected;
  if (!includes(*override_fragment, *detected)) {
    throw FragmentError("input is " + fragment_name(*detected) + ", which " + fragment_name(*override_fragment) +
                        " does not contain");
  }
  return *override_fragment;
}

Verdict decide(const std::vector<Sentence>& gamma, const Sentence& phi, const DispatchOptions& options) {
  switch (dispatch_fragment(gamma, phi, options.fragment)) {
    case Fragment::L1: return decide_l1(gamma, phi, options.decide);
    case Fragment::L2:
    case Fragment::L2Plus: return decide_l2plus(gamma, phi, options.decide);
    case Fragment::L3: return decide_l3(gamma, phi, options.decide);
    case Fragment::L3Half: return decide_l35(gamma, phi, options.decide);
    case Fragment::L4:
    case Fragment::L4Half:
    case Fragment::L4Plus:
    case Fragment::L4HalfPlus: return decide_clausal(gamma, phi, options.clausal);
    case Fragment::L5:
    case Fragment::L5Half: return decide_l5(gamma, phi, options.clausal);
    case Fragment::RStarDagger: break;
  }
  throw FragmentError("flat R*-style problems have no decider here; flatten or star-translate them first");
}

}  // namespace relsyl

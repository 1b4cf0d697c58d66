#pragma once

#include "system.hpp"

namespace kmh {

inline System preset(const std::string& name) {
  auto I = [](long long x) { return Int(x); };
  if (name == "a1") {
    return build_system(1, {{I(2)}}, 1, {{I(1)}}, {{I(2)}});
  }
  if (name == "a2") {
    return build_system(2, {{I(2), I(-1)}, {I(-1), I(2)}}, 2,
                        {{I(1), I(0)}, {I(0), I(1)}},
                        {{I(2), I(-1)}, {I(-1), I(2)}});
  }
  if (name == "a1xa1") {
    return build_system(2, {{I(2), I(0)}, {I(0), I(2)}}, 2,
                        {{I(1), I(0)}, {I(0), I(1)}},
                        {{I(2), I(0)}, {I(0), I(2)}});
  }
  if (name == "a1_affine") {
    return build_system(2, {{I(2), I(-2)}, {I(-2), I(2)}}, 3,
                        {{I(1), I(0), I(0)}, {I(0), I(1), I(0)}},
                        {{I(2), I(-2), I(0)}, {I(-2), I(2), I(1)}});
  }
  if (name == "hyp23") {
    return build_system(2, {{I(2), I(-3)}, {I(-3), I(2)}}, 2,
                        {{I(1), I(0)}, {I(0), I(1)}},
                        {{I(2), I(-3)}, {I(-3), I(2)}});
  }
  fail("UnknownPreset", name);
}

inline std::vector<std::string> preset_names() {
  return {"a1", "a2", "a1xa1", "a1_affine", "hyp23"};
}

}  // namespace kmh

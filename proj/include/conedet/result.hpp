#pragma once

#include <string>

namespace conedet {

/// A computed value with an absolute error estimate and the name of the
/// formula that produced it.
struct EvalResult {
  double value = 0.0;
  double abs_err = 0.0;
  std::string formula_tag;
};

}  // namespace conedet

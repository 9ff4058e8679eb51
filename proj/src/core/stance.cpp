#include "scaler/core/stance.hpp"

namespace scaler {

const char* liftSideName(LiftSide s) {
  switch (s) {
    case LiftSide::Left: return "left";
    case LiftSide::Right: return "right";
    case LiftSide::Neutral: return "neutral";
  }
  return "unknown";
}

}  // namespace scaler

#ifndef SCALER_CORE_ERRORS_HPP_
#define SCALER_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace scaler {

struct ClosureInfeasible : std::runtime_error {
  explicit ClosureInfeasible(const std::string& what) : std::runtime_error(what) {}
};

struct Unreachable : std::runtime_error {
  explicit Unreachable(const std::string& what) : std::runtime_error(what) {}
};

struct NearSingular : std::runtime_error {
  explicit NearSingular(const std::string& what) : std::runtime_error(what) {}
};

struct WristGimbalLock : std::runtime_error {
  explicit WristGimbalLock(const std::string& what) : std::runtime_error(what) {}
};

struct OffsetExceedsTravel : std::runtime_error {
  explicit OffsetExceedsTravel(const std::string& what) : std::runtime_error(what) {}
};

struct ObjectTooWide : std::runtime_error {
  explicit ObjectTooWide(const std::string& what) : std::runtime_error(what) {}
};

struct StrokeExceeded : std::runtime_error {
  explicit StrokeExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct HoldUnreachable : std::runtime_error {
  explicit HoldUnreachable(const std::string& what) : std::runtime_error(what) {}
};

struct NoStableOrder : std::runtime_error {
  explicit NoStableOrder(const std::string& what) : std::runtime_error(what) {}
};

struct SpeedInfeasible : std::runtime_error {
  explicit SpeedInfeasible(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePoints : std::runtime_error {
  explicit DegeneratePoints(const std::string& what) : std::runtime_error(what) {}
};

struct BaselineInfeasible : std::runtime_error {
  explicit BaselineInfeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scaler

#endif  // SCALER_CORE_ERRORS_HPP_

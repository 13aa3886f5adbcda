#pragma once

#include <stdexcept>
#include <string>

namespace toricode {

/// Thrown when a requested computation would exceed an explicit size cap.
/// The message states the required size so the caller can decide whether to
/// retry with a larger cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when two independent computations of the same quantity disagree
/// (closed formula vs exhaustive oracle, and similar cross-checks).  This is
/// never a recoverable condition: it means the implementation is wrong.
class Discrepancy : public std::runtime_error {
public:
    explicit Discrepancy(const std::string& what) : std::runtime_error(what) {}
};

}

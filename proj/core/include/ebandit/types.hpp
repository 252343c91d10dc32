#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ebandit {

// Zero-based arm index, valid in [0, n_arms) of the owning environment.
using ArmId = int;

// Per-round feature vector. Norm constraints depend on the concept class
// universe: L-inf ball for axis-parallel rectangles, L2 ball for hyperplanes.
using Context = std::vector<double>;

// Raised when a generator cannot satisfy its constraints (e.g. event spacing
// does not fit the horizon).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration or grid exceeds its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an iterative numeric routine fails to converge within its cap.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a bandit guess is requested before every arm has been pulled.
class ImmatureStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ebandit

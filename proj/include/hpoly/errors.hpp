#pragma once

#include <stdexcept>
#include <string>

namespace hpoly {

// Base class for all errors thrown by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-range user input: bad type string, node outside the
// diagram, inadmissible rank, bad parameter combination.
class invalid_input_error : public error {
 public:
  explicit invalid_input_error(const std::string& msg) : error(msg) {}
};

// A request would exceed a configured enumeration cap.  The message names the
// cap and the size that tripped it.
class cap_exceeded_error : public error {
 public:
  explicit cap_exceeded_error(const std::string& msg) : error(msg) {}
};

// An operation requires a combinatorially smooth subset J and the verdict came
// back negative.  The message carries the formatted violation list.
class not_smooth_error : public error {
 public:
  explicit not_smooth_error(const std::string& msg) : error(msg) {}
};

// delta(s) is undefined: some s outside J fails to commute with two or more
// components of J.  Such a J is never combinatorially smooth; run the smooth
// checker to see the full verdict.
class delta_undefined_error : public error {
 public:
  explicit delta_undefined_error(const std::string& msg) : error(msg) {}
};

// Orbit sizes measured over finite fields do not fit the (q-1)^a * q^b shape.
class orbit_fit_error : public error {
 public:
  explicit orbit_fit_error(const std::string& msg) : error(msg) {}
};

// Orbits failed to partition the ambient matrix space.
class partition_error : public error {
 public:
  explicit partition_error(const std::string& msg) : error(msg) {}
};

// An internal invariant was violated; indicates a bug, not bad input.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& msg) : error(msg) {}
};

}  // namespace hpoly

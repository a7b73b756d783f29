#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cubicgray {

// Out-of-range numeric parameters (k > m, i > root(T), b = 0 requests, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bit tuple that is not a prefix/Dyck word where one is required.
class invalid_word : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Label count does not match vertex count, or a code does not decode.
class malformed_tree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rotation system that is not a rooted bicubic planar map.
class invalid_map : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requests outside the supported families (b = 0).
class unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration refused because the result would be too large.
class too_large : public unsupported {
 public:
  too_large(const std::string& what, std::string estimate)
      : unsupported(what), estimate_(std::move(estimate)) {}
  // Decimal size estimate of the refused request.
  const std::string& estimate() const { return estimate_; }

 private:
  std::string estimate_;
};

// An upstream construction produced something it guarantees it never does.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubicgray

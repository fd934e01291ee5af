#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on caller-supplied data failed (bad file, degenerate fan,
// zero direction, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An internal certificate did not verify. Seeing one of these means a bug.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace kstab

#pragma once

#include "eigcontain/errors.hpp"

namespace eigc::cli {

/// Bad command-line input; exits with status 64.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace eigc::cli

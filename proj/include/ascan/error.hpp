/* Copyright 2026 The ASC Analyzer Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ASCAN_ERROR_HPP_
#define ASCAN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ascan {

// Broad failure categories. The C API maps these one-to-one onto status codes.
enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kIo,
  kNorms,
  kStats,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ascan

#endif  // ASCAN_ERROR_HPP_

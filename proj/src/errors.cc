/*
 * Copyright 2026 The atomact Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "atomact/errors.h"

namespace atomact {

std::string_view ErrorPrefix(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kValidity:
      return "validity";
    case ErrorKind::kDimension:
      return "dimension";
    case ErrorKind::kAlignment:
      return "alignment";
    case ErrorKind::kPartition:
      return "partition";
    case ErrorKind::kInsufficientFrames:
      return "insufficient-frames";
    case ErrorKind::kEmptyInput:
      return "empty-input";
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kConfig:
      return "config";
  }
  return "unknown";
}

}  // namespace atomact

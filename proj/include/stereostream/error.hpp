/*
 * Copyright 2026 The StereoStream Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace stereostream {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// pgm_io
class MalformedHeader : public Error {
   public:
    using Error::Error;
};
class TruncatedData : public Error {
   public:
    using Error::Error;
};
class UnsupportedMaxval : public Error {
   public:
    using Error::Error;
};
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};
class ShiftTooLarge : public Error {
   public:
    using Error::Error;
};

// matching
class InvalidConfig : public Error {
   public:
    using Error::Error;
};
class OutOfRegion : public Error {
   public:
    using Error::Error;
};

// streaming engine / resource model
class WidthTooSmall : public Error {
   public:
    using Error::Error;
};
class StreamOverrun : public Error {
   public:
    using Error::Error;
};

}  // namespace stereostream

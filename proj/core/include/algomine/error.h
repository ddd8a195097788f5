// Copyright 2026 The algomine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALGOMINE_ERROR_H_
#define ALGOMINE_ERROR_H_

#include <stdexcept>
#include <string>

namespace algomine {

// Malformed or contract-violating input: a bad corpus record, an invalid
// dictionary entry, a bad flag value. The CLI maps this to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant. The CLI maps this to exit status 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace algomine

#endif  // ALGOMINE_ERROR_H_

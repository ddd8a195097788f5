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

#ifndef ALGOMINE_XML_READER_H_
#define ALGOMINE_XML_READER_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace algomine::xml {

// A minimal non-validating XML reader: elements, attributes, character
// data, CDATA, comments, processing instructions and a DOCTYPE without an
// internal subset. Namespaces are not interpreted. Enough for the corpus
// adapter; not a general-purpose parser.
struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  // Children in document order. Text nodes have an empty name and carry
  // their content in `text`.
  std::vector<Element> children;
  std::string text;
  int line = 0;

  bool is_text() const { return name.empty(); }
  std::optional<std::string> Attribute(std::string_view key) const;
  // Concatenation of all descendant character data, in document order.
  std::string InnerText() const;
};

// Throws InputError("<source>:<line>: ...") on malformed input.
Element Parse(std::string_view content, std::string_view source);

}  // namespace algomine::xml

#endif  // ALGOMINE_XML_READER_H_

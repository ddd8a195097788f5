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

#include "algomine/xml_reader.h"

#include <cctype>
#include <cstdlib>

#include "algomine/error.h"
#include "algomine/text.h"

namespace algomine::xml {
namespace {

bool IsNameChar(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' ||
         u >= 0x80;
}

bool IsXmlSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class Reader {
 public:
  Reader(std::string_view in, std::string_view source)
      : in_(in), source_(source) {}

  Element ParseDocument() {
    SkipMisc();
    if (AtEnd() || Peek() != '<') Fail("expected root element");
    Element root = ParseElement();
    SkipMisc();
    if (!AtEnd()) Fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError(std::string(source_) + ":" + std::to_string(line_) +
                     ": malformed XML: " + what);
  }

  bool AtEnd() const { return pos_ >= in_.size(); }
  char Peek() const { return in_[pos_]; }
  bool StartsWith(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  void Advance(std::size_t count) {
    for (std::size_t k = 0; k < count && pos_ < in_.size(); ++k) {
      if (in_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  void SkipSpace() {
    while (!AtEnd() && IsXmlSpace(Peek())) Advance(1);
  }

  // Advances past `terminator`; returns the text before it.
  std::string_view ReadUntil(std::string_view terminator, const char* what) {
    const std::size_t found = in_.find(terminator, pos_);
    if (found == std::string_view::npos) Fail(std::string("unterminated ") + what);
    const std::string_view body = in_.substr(pos_, found - pos_);
    Advance(found - pos_ + terminator.size());
    return body;
  }

  void SkipDoctype() {
    int depth = 0;
    while (!AtEnd()) {
      const char c = Peek();
      Advance(1);
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth <= 0) return;
    }
    Fail("unterminated DOCTYPE");
  }

  // Comments, processing instructions and DOCTYPE outside the root.
  void SkipMisc() {
    while (true) {
      SkipSpace();
      if (StartsWith("<?")) {
        ReadUntil("?>", "processing instruction");
      } else if (StartsWith("<!--")) {
        Advance(4);
        ReadUntil("-->", "comment");
      } else if (StartsWith("<!DOCTYPE")) {
        SkipDoctype();
      } else {
        return;
      }
    }
  }

  std::string ParseName() {
    const std::size_t begin = pos_;
    while (!AtEnd() && IsNameChar(Peek())) Advance(1);
    if (pos_ == begin) Fail("expected a name");
    return std::string(in_.substr(begin, pos_ - begin));
  }

  std::string Unescape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      const std::size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) Fail("unterminated entity");
      const std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "lt") {
        out.push_back('<');
      } else if (ent == "gt") {
        out.push_back('>');
      } else if (ent == "amp") {
        out.push_back('&');
      } else if (ent == "quot") {
        out.push_back('"');
      } else if (ent == "apos") {
        out.push_back('\'');
      } else if (ent.size() > 1 && ent[0] == '#') {
        const bool hex = ent[1] == 'x' || ent[1] == 'X';
        const std::string digits(ent.substr(hex ? 2 : 1));
        char* end = nullptr;
        const unsigned long cp = std::strtoul(digits.c_str(), &end, hex ? 16 : 10);
        if (digits.empty() || *end != '\0' || cp == 0 || cp > 0x10FFFF) {
          Fail("bad character reference '&" + std::string(ent) + ";'");
        }
        text::AppendUtf8(static_cast<char32_t>(cp), &out);
      } else {
        Fail("unknown entity '&" + std::string(ent) + ";'");
      }
      i = semi;
    }
    return out;
  }

  Element ParseElement() {
    Element el;
    el.line = line_;
    Advance(1);  // '<'
    el.name = ParseName();
    while (true) {
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag <" + el.name + ">");
      if (StartsWith("/>")) {
        Advance(2);
        return el;
      }
      if (Peek() == '>') {
        Advance(1);
        break;
      }
      std::string key = ParseName();
      SkipSpace();
      if (AtEnd() || Peek() != '=') Fail("expected '=' after attribute " + key);
      Advance(1);
      SkipSpace();
      if (AtEnd() || (Peek() != '"' && Peek() != '\'')) {
        Fail("expected quoted value for attribute " + key);
      }
      const char quote[2] = {Peek(), '\0'};
      Advance(1);
      const std::string_view raw = ReadUntil(quote, "attribute value");
      if (el.Attribute(key)) Fail("duplicate attribute " + key);
      el.attributes.emplace_back(std::move(key), Unescape(raw));
    }

    while (true) {
      if (AtEnd()) Fail("missing end tag </" + el.name + ">");
      if (StartsWith("</")) {
        Advance(2);
        const std::string closing = ParseName();
        if (closing != el.name) {
          Fail("mismatched end tag </" + closing + "> for <" + el.name + ">");
        }
        SkipSpace();
        if (AtEnd() || Peek() != '>') Fail("malformed end tag");
        Advance(1);
        return el;
      }
      if (StartsWith("<!--")) {
        Advance(4);
        ReadUntil("-->", "comment");
      } else if (StartsWith("<![CDATA[")) {
        Advance(9);
        AppendText(&el, std::string(ReadUntil("]]>", "CDATA section")));
      } else if (StartsWith("<?")) {
        ReadUntil("?>", "processing instruction");
      } else if (Peek() == '<') {
        el.children.push_back(ParseElement());
      } else {
        const std::size_t lt = in_.find('<', pos_);
        const std::size_t end = lt == std::string_view::npos ? in_.size() : lt;
        const std::string_view raw = in_.substr(pos_, end - pos_);
        Advance(end - pos_);
        AppendText(&el, Unescape(raw));
      }
    }
  }

  void AppendText(Element* el, std::string data) {
    if (!el->children.empty() && el->children.back().is_text()) {
      el->children.back().text += data;
      return;
    }
    Element node;
    node.line = line_;
    node.text = std::move(data);
    el->children.push_back(std::move(node));
  }

  std::string_view in_;
  std::string_view source_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

std::optional<std::string> Element::Attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string Element::InnerText() const {
  if (is_text()) return text;
  std::string out;
  for (const Element& child : children) out += child.InnerText();
  return out;
}

Element Parse(std::string_view content, std::string_view source) {
  return Reader(content, source).ParseDocument();
}

}  // namespace algomine::xml

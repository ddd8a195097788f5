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

#include "algomine/corpus.h"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "algomine/error.h"
#include "algomine/text.h"
#include "algomine/xml_reader.h"
#include "json.hpp"

namespace algomine {
namespace {

using json = nlohmann::json;

class CorpusBuilder {
 public:
  CorpusBuilder(const CorpusOptions& options, std::string_view source,
                std::vector<std::string>* warnings)
      : options_(options), source_(source), warnings_(warnings) {}

  // Validates, numbers sentences and appends; late documents may be dropped.
  void Add(Document doc, const std::string& locus) {
    if (doc.doc_id.empty()) Fail(locus, "empty doc_id");
    if (doc.year < options_.min_year || doc.year > options_.max_year) {
      if (doc.year > options_.max_year && options_.drop_late_documents) {
        if (warnings_) {
          warnings_->push_back(std::string(source_) + ":" + locus +
                               ": dropping '" + doc.doc_id + "' (year " +
                               std::to_string(doc.year) + " after " +
                               std::to_string(options_.max_year) + ")");
        }
        return;
      }
      Fail(locus, "year " + std::to_string(doc.year) + " of '" + doc.doc_id +
                      "' outside [" + std::to_string(options_.min_year) + ", " +
                      std::to_string(options_.max_year) + "]");
    }
    auto [it, inserted] = seen_.emplace(doc.doc_id, locus);
    if (!inserted) {
      Fail(locus, "duplicate doc_id '" + doc.doc_id + "' (first seen at " +
                      it->second + ")");
    }
    for (std::size_t k = 0; k < doc.sentences.size(); ++k) {
      doc.sentences[k].index = static_cast<int>(k);
    }
    docs_.push_back(std::move(doc));
  }

  [[noreturn]] void Fail(const std::string& locus, const std::string& what) const {
    throw InputError(std::string(source_) + ":" + locus + ": " + what);
  }

  const SentenceSplitter& splitter() const {
    static const SentenceSplitter kDefault;
    return options_.splitter ? *options_.splitter : kDefault;
  }

  std::vector<Document> Take() { return std::move(docs_); }

 private:
  const CorpusOptions& options_;
  std::string_view source_;
  std::vector<std::string>* warnings_;
  std::unordered_map<std::string, std::string> seen_;
  std::vector<Document> docs_;
};

std::vector<Document> ParseJsonl(std::string_view content, CorpusBuilder& builder) {
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string locus = std::to_string(line_no);

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      builder.Fail(locus, std::string("malformed JSON record: ") + e.what());
    }
    if (!record.is_object()) builder.Fail(locus, "record is not a JSON object");

    Document doc;
    const auto id = record.find("doc_id");
    if (id == record.end() || !id->is_string()) {
      builder.Fail(locus, "record missing string field \"doc_id\"");
    }
    doc.doc_id = id->get<std::string>();
    const auto year = record.find("year");
    if (year == record.end() || !year->is_number_integer()) {
      builder.Fail(locus, "record '" + doc.doc_id +
                              "' missing integer field \"year\"");
    }
    doc.year = year->get<int>();
    if (const auto title = record.find("title"); title != record.end()) {
      if (!title->is_string()) builder.Fail(locus, "\"title\" must be a string");
      doc.title = title->get<std::string>();
    }

    const auto sentences = record.find("sentences");
    const auto raw = record.find("text");
    if (sentences != record.end() && raw != record.end()) {
      builder.Fail(locus, "record '" + doc.doc_id +
                              "' has both \"sentences\" and \"text\"");
    }
    if (sentences != record.end()) {
      if (!sentences->is_array()) builder.Fail(locus, "\"sentences\" must be an array");
      for (const json& s : *sentences) {
        if (!s.is_object()) builder.Fail(locus, "sentence is not an object");
        const auto t = s.find("text");
        if (t == s.end() || !t->is_string()) {
          builder.Fail(locus, "sentence missing string field \"text\"");
        }
        Sentence sentence;
        sentence.text = t->get<std::string>();
        if (sentence.text.find_first_of("\r\n") != std::string::npos) {
          builder.Fail(locus, "sentence text of '" + doc.doc_id +
                                  "' contains a line break");
        }
        if (const auto sec = s.find("section"); sec != s.end()) {
          if (!sec->is_string()) builder.Fail(locus, "\"section\" must be a string");
          sentence.section = ParseSection(sec->get<std::string>());
        }
        doc.sentences.push_back(std::move(sentence));
      }
    } else if (raw != record.end()) {
      if (!raw->is_string()) builder.Fail(locus, "\"text\" must be a string");
      doc.sentences = builder.splitter().Split(raw->get<std::string>());
    }
    builder.Add(std::move(doc), locus);
  }
  return builder.Take();
}

void CollectXmlSentences(const xml::Element& el, Section section,
                         const CorpusBuilder& builder, Document* doc) {
  for (const xml::Element& child : el.children) {
    if (child.is_text()) continue;
    Section child_section = section;
    if (auto tag = child.Attribute("section")) child_section = ParseSection(*tag);
    if (child.name == "sentence") {
      std::string body = text::CollapseWhitespace(child.InnerText());
      if (body.empty()) continue;
      doc->sentences.push_back({0, child_section, std::move(body)});
    } else if (child.name == "paragraph" || child.name == "p") {
      for (Sentence& s : builder.splitter().Split(child.InnerText(), child_section)) {
        doc->sentences.push_back(std::move(s));
      }
    } else if (child.name == "caption") {
      for (Sentence& s : builder.splitter().Split(child.InnerText(), Section::kCaption)) {
        doc->sentences.push_back(std::move(s));
      }
    } else if (child.name == "section") {
      if (auto name = child.Attribute("name")) child_section = ParseSection(*name);
      CollectXmlSentences(child, child_section, builder, doc);
    } else if (child.name != "title") {
      builder.Fail(std::to_string(child.line),
                   "unexpected element <" + child.name + "> in document '" +
                       doc->doc_id + "'");
    }
  }
}

std::vector<Document> ParseXml(std::string_view content, std::string_view source,
                               CorpusBuilder& builder) {
  const xml::Element root = xml::Parse(content, source);
  for (const xml::Element& el : root.children) {
    if (el.is_text()) continue;
    const std::string locus = std::to_string(el.line);
    if (el.name != "document") {
      builder.Fail(locus, "expected <document>, found <" + el.name + ">");
    }
    Document doc;
    const auto id = el.Attribute("id");
    if (!id) builder.Fail(locus, "<document> missing attribute \"id\"");
    doc.doc_id = *id;
    const auto year = el.Attribute("year");
    if (!year) builder.Fail(locus, "<document id=\"" + doc.doc_id + "\"> missing attribute \"year\"");
    try {
      std::size_t used = 0;
      doc.year = std::stoi(*year, &used);
      if (used != year->size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      builder.Fail(locus, "bad year \"" + *year + "\" on <document id=\"" +
                              doc.doc_id + "\">");
    }
    if (auto title = el.Attribute("title")) doc.title = *title;
    for (const xml::Element& child : el.children) {
      if (child.name == "title") doc.title = text::CollapseWhitespace(child.InnerText());
    }
    CollectXmlSentences(el, Section::kBody, builder, &doc);
    builder.Add(std::move(doc), locus);
  }
  return builder.Take();
}

}  // namespace

std::string_view SectionName(Section section) {
  switch (section) {
    case Section::kTitle: return "title";
    case Section::kAbstract: return "abstract";
    case Section::kBody: return "body";
    case Section::kCaption: return "caption";
    case Section::kOther: return "other";
  }
  return "other";
}

Section ParseSection(std::string_view tag) {
  const std::string t = text::NormalizeName(tag);
  if (t == "title") return Section::kTitle;
  if (t == "abstract") return Section::kAbstract;
  if (t == "body") return Section::kBody;
  if (t == "caption") return Section::kCaption;
  return Section::kOther;
}

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "xml") return CorpusFormat::kXml;
  return std::nullopt;
}

YearlyCounts ComputeYearlyCounts(const std::vector<Document>& corpus) {
  YearlyCounts counts;
  for (const Document& doc : corpus) ++counts[doc.year];
  return counts;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Document> ParseCorpus(std::string_view content, CorpusFormat format,
                                  const CorpusOptions& options,
                                  std::string_view source,
                                  std::vector<std::string>* warnings) {
  CorpusBuilder builder(options, source, warnings);
  switch (format) {
    case CorpusFormat::kJsonl:
      return ParseJsonl(content, builder);
    case CorpusFormat::kXml:
      return ParseXml(content, source, builder);
  }
  return {};
}

std::vector<Document> LoadCorpus(const std::filesystem::path& path,
                                 CorpusFormat format, const CorpusOptions& options,
                                 std::vector<std::string>* warnings) {
  const std::string content = ReadFile(path);
  return ParseCorpus(content, format, options, path.string(), warnings);
}

}  // namespace algomine

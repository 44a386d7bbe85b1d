// Copyright 2026 The Rarespan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rarespan/error.hpp"
#include "rarespan/text.hpp"

namespace rarespan {

// A tokenized document with the 0-based token indices where a target span
// begins. Documents are the evaluation unit; chunks are the model unit.
struct Document {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<std::size_t> gold_starts;  // strictly increasing

  bool has_positive() const { return !gold_starts.empty(); }

  void validate() const {
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t s : gold_starts) {
      if (s >= tokens.size())
        throw ValidationError("document '" + id + "': gold start " +
                              std::to_string(s) + " out of range");
      if (!first && s <= prev)
        throw ValidationError("document '" + id +
                              "': gold starts not strictly increasing");
      prev = s;
      first = false;
    }
  }
};

// A fixed-size window of a document. Gold starts are rebased to the chunk;
// token_offset maps them back to document coordinates.
struct Chunk {
  std::string doc_id;
  std::size_t chunk_index = 0;
  std::size_t token_offset = 0;
  std::vector<std::string> tokens;
  std::vector<std::size_t> gold_starts;  // relative to chunk start
  bool is_positive = false;
};

inline std::vector<Chunk> chunk_document(const Document& doc,
                                         std::size_t chunk_size) {
  if (chunk_size == 0) throw ValidationError("chunk_size must be >= 1");
  std::vector<Chunk> chunks;
  const std::size_t n = doc.tokens.size();
  std::size_t next_start = 0;
  for (std::size_t off = 0; off < n; off += chunk_size) {
    Chunk c;
    c.doc_id = doc.id;
    c.chunk_index = off / chunk_size;
    c.token_offset = off;
    const std::size_t end = std::min(off + chunk_size, n);
    c.tokens.assign(doc.tokens.begin() + off, doc.tokens.begin() + end);
    while (next_start < doc.gold_starts.size() &&
           doc.gold_starts[next_start] < end) {
      c.gold_starts.push_back(doc.gold_starts[next_start] - off);
      ++next_start;
    }
    c.is_positive = !c.gold_starts.empty();
    chunks.push_back(std::move(c));
  }
  return chunks;
}

inline std::vector<Chunk> chunk_corpus(const std::vector<Document>& docs,
                                       std::size_t chunk_size) {
  std::vector<Chunk> chunks;
  for (const Document& doc : docs) {
    auto dc = chunk_document(doc, chunk_size);
    chunks.insert(chunks.end(), std::make_move_iterator(dc.begin()),
                  std::make_move_iterator(dc.end()));
  }
  return chunks;
}

struct ChunkStats {
  std::size_t total = 0;
  std::size_t positive = 0;

  double positive_rate() const {
    return total == 0 ? 0.0 : static_cast<double>(positive) / total;
  }
};

// Counts chunks holding at least one start without materializing them.
inline ChunkStats chunk_stats(const Document& doc, std::size_t chunk_size) {
  if (chunk_size == 0) throw ValidationError("chunk_size must be >= 1");
  ChunkStats stats;
  stats.total = (doc.tokens.size() + chunk_size - 1) / chunk_size;
  std::size_t last_chunk = static_cast<std::size_t>(-1);
  for (std::size_t s : doc.gold_starts) {
    const std::size_t ci = s / chunk_size;
    if (ci != last_chunk) {
      ++stats.positive;
      last_chunk = ci;
    }
  }
  return stats;
}

inline ChunkStats chunk_stats(const std::vector<Document>& docs,
                              std::size_t chunk_size) {
  ChunkStats stats;
  for (const Document& doc : docs) {
    const ChunkStats ds = chunk_stats(doc, chunk_size);
    stats.total += ds.total;
    stats.positive += ds.positive;
  }
  return stats;
}

// --- JSON Lines corpus I/O -------------------------------------------------
//
// One document per line: {"id": str, "tokens": [str,...], "starts": [int,...]}

inline nlohmann::json document_to_json(const Document& doc) {
  return nlohmann::json{
      {"id", doc.id}, {"tokens", doc.tokens}, {"starts", doc.gold_starts}};
}

inline Document document_from_json(const nlohmann::json& j) {
  Document doc;
  try {
    doc.id = j.at("id").get<std::string>();
    doc.tokens = j.at("tokens").get<std::vector<std::string>>();
    doc.gold_starts = j.at("starts").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad document record: ") + e.what());
  }
  doc.validate();
  return doc;
}

inline void save_corpus_jsonl(const std::vector<Document>& docs,
                              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  for (const Document& doc : docs) out << document_to_json(doc).dump() << '\n';
  if (!out) throw Error("write failed: " + path);
}

inline std::vector<Document> load_corpus_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open corpus: " + path);
  std::vector<Document> docs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw ValidationError(path + ":" + std::to_string(lineno) +
                            ": invalid JSON");
    docs.push_back(document_from_json(j));
  }
  return docs;
}

// --- Raw-text ingestion ----------------------------------------------------
//
// One document per .txt file plus a sidecar "<stem>.starts.json" holding a
// JSON array of start token indices (indices into the tokenized text).

inline Document load_raw_document(const std::string& text_path,
                                  const std::string& starts_path,
                                  const std::string& id,
                                  const Normalizer& normalizer = {}) {
  std::ifstream in(text_path, std::ios::binary);
  if (!in) throw ValidationError("cannot open text file: " + text_path);
  std::string raw((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  Document doc;
  doc.id = id;
  doc.tokens = tokenize(raw, normalizer);
  std::ifstream sin(starts_path, std::ios::binary);
  if (!sin) throw ValidationError("cannot open annotation file: " + starts_path);
  nlohmann::json j = nlohmann::json::parse(sin, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw ValidationError("annotation file must be a JSON array: " +
                          starts_path);
  doc.gold_starts = j.get<std::vector<std::size_t>>();
  std::sort(doc.gold_starts.begin(), doc.gold_starts.end());
  doc.gold_starts.erase(
      std::unique(doc.gold_starts.begin(), doc.gold_starts.end()),
      doc.gold_starts.end());
  doc.validate();
  return doc;
}

inline std::vector<Document> load_raw_corpus(const std::string& dir,
                                             const Normalizer& normalizer = {}) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw ValidationError("not a directory: " + dir);
  std::vector<fs::path> texts;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      texts.push_back(entry.path());
  std::sort(texts.begin(), texts.end());
  std::vector<Document> docs;
  for (const fs::path& p : texts) {
    fs::path sidecar = p;
    sidecar.replace_extension(".starts.json");
    docs.push_back(load_raw_document(p.string(), sidecar.string(),
                                     p.stem().string(), normalizer));
  }
  return docs;
}

}  // namespace rarespan

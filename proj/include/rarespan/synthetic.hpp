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
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rarespan/corpus.hpp"
#include "rarespan/error.hpp"
#include "rarespan/rng.hpp"

namespace rarespan {

// Synthetic corpora are background token streams with embedded events. An
// event starts at a gold start; its first few tokens draw from a small cue
// vocabulary with probability cue_strength each. Cue words also sit in the
// low-frequency tail of the background Zipf distribution, so uneventful text
// occasionally contains isolated cue tokens. Those leaks are what give the
// first-pass retrieval model near-miss negatives to mistake and a tagger
// trained without negatives something to hallucinate on; with disjoint
// vocabularies every model is trivially perfect and the base-rate effects
// vanish.
struct SyntheticParams {
  std::size_t n_docs = 0;
  double doc_length_mean = 0.0;
  double doc_length_spread = 0.0;
  double event_rate = 0.0;  // target fraction of positive chunks
  std::size_t background_vocab_size = 0;
  std::size_t cue_vocab_size = 0;
  double cue_strength = 0.0;  // P(event-opening token is a cue word)
  double event_length = 0.0;  // mean span length in tokens
  std::size_t reference_chunk_size = 0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n_docs == 0) throw ValidationError("n_docs must be >= 1");
    if (doc_length_mean < 1.0)
      throw ValidationError("doc_length.mean must be >= 1");
    if (doc_length_spread < 0.0)
      throw ValidationError("doc_length.spread must be >= 0");
    if (!(event_rate > 0.0 && event_rate < 1.0))
      throw ValidationError("event_rate must be in (0, 1)");
    if (!(cue_strength >= 0.0 && cue_strength <= 1.0))
      throw ValidationError("cue_strength must be in [0, 1]");
    if (background_vocab_size == 0)
      throw ValidationError("background_vocab_size must be >= 1");
    if (cue_vocab_size == 0)
      throw ValidationError("cue_vocab_size must be >= 1");
    if (event_length < 1.0) throw ValidationError("event_length must be >= 1");
    if (event_length >= doc_length_mean)
      throw ValidationError(
          "event spans cannot fit: event_length >= doc_length.mean");
    if (reference_chunk_size == 0)
      throw ValidationError("reference_chunk_size must be >= 1");
  }
};

inline void to_json(nlohmann::json& j, const SyntheticParams& p) {
  j = nlohmann::json{
      {"n_docs", p.n_docs},
      {"doc_length", {{"mean", p.doc_length_mean}, {"spread", p.doc_length_spread}}},
      {"event_rate", p.event_rate},
      {"background_vocab_size", p.background_vocab_size},
      {"cue_vocab_size", p.cue_vocab_size},
      {"cue_strength", p.cue_strength},
      {"event_length", p.event_length},
      {"reference_chunk_size", p.reference_chunk_size},
      {"seed", p.seed}};
}

inline void from_json(const nlohmann::json& j, SyntheticParams& p) {
  try {
    j.at("n_docs").get_to(p.n_docs);
    p.doc_length_mean = j.at("doc_length").at("mean").get<double>();
    p.doc_length_spread = j.at("doc_length").at("spread").get<double>();
    j.at("event_rate").get_to(p.event_rate);
    j.at("background_vocab_size").get_to(p.background_vocab_size);
    j.at("cue_vocab_size").get_to(p.cue_vocab_size);
    j.at("cue_strength").get_to(p.cue_strength);
    j.at("event_length").get_to(p.event_length);
    j.at("reference_chunk_size").get_to(p.reference_chunk_size);
    j.at("seed").get_to(p.seed);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad synthetic params: ") + e.what());
  }
}

namespace detail {

constexpr double kZipfExponent = 1.05;
constexpr std::size_t kCuePrefixLen = 3;  // event tokens eligible for cues

class ZipfSampler {
 public:
  ZipfSampler(std::size_t n_words, double exponent) : cumulative_(n_words) {
    double total = 0.0;
    for (std::size_t r = 0; r < n_words; ++r) {
      total += std::pow(static_cast<double>(r + 1), -exponent);
      cumulative_[r] = total;
    }
  }

  std::size_t draw(Rng& rng) const {
    const double u = rng.uniform01() * cumulative_.back();
    const auto it =
        std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<std::size_t>(it - cumulative_.begin());
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace detail

// Deterministic given params.seed. The number of events equals
// round(event_rate * total_chunks) with at most one start per chunk, so the
// realized positive-chunk rate at reference_chunk_size is exact up to
// rounding; corpora too small to stay within 20% of the target are rejected.
inline std::vector<Document> generate_synthetic_corpus(
    const SyntheticParams& params) {
  params.validate();
  const std::size_t chunk_size = params.reference_chunk_size;

  Rng length_rng(mix_seed(params.seed, 1));
  std::vector<std::size_t> lengths(params.n_docs);
  const std::size_t min_len =
      std::max<std::size_t>(1, static_cast<std::size_t>(params.event_length) + 1);
  std::size_t total_chunks = 0;
  for (std::size_t d = 0; d < params.n_docs; ++d) {
    const double drawn =
        length_rng.normal(params.doc_length_mean, params.doc_length_spread);
    lengths[d] = std::max<std::size_t>(
        min_len, static_cast<std::size_t>(std::llround(std::max(drawn, 1.0))));
    total_chunks += (lengths[d] + chunk_size - 1) / chunk_size;
  }

  const std::size_t n_events = static_cast<std::size_t>(
      std::llround(params.event_rate * static_cast<double>(total_chunks)));
  if (n_events == 0 ||
      std::abs(static_cast<double>(n_events) / total_chunks - params.event_rate) >
          0.2 * params.event_rate) {
    throw ValidationError(
        "corpus too small to realize event_rate=" +
        std::to_string(params.event_rate) + " within 20% at chunk size " +
        std::to_string(chunk_size) + " (" + std::to_string(total_chunks) +
        " chunks); increase n_docs or doc_length");
  }

  // Pick the event-bearing chunks by quota, uniformly over all chunks.
  Rng select_rng(mix_seed(params.seed, 2));
  std::vector<std::pair<std::size_t, std::size_t>> all_chunks;  // (doc, chunk)
  all_chunks.reserve(total_chunks);
  for (std::size_t d = 0; d < params.n_docs; ++d) {
    const std::size_t n_chunks = (lengths[d] + chunk_size - 1) / chunk_size;
    for (std::size_t c = 0; c < n_chunks; ++c) all_chunks.emplace_back(d, c);
  }
  select_rng.shuffle(all_chunks);
  all_chunks.resize(n_events);
  std::vector<std::vector<std::size_t>> event_chunks(params.n_docs);
  for (const auto& [d, c] : all_chunks) event_chunks[d].push_back(c);
  for (auto& v : event_chunks) std::sort(v.begin(), v.end());

  const std::size_t vocab =
      params.background_vocab_size + params.cue_vocab_size;
  detail::ZipfSampler zipf(vocab, detail::kZipfExponent);
  std::vector<std::string> words(vocab);
  for (std::size_t r = 0; r < params.background_vocab_size; ++r)
    words[r] = "w" + std::to_string(r);
  for (std::size_t r = 0; r < params.cue_vocab_size; ++r)
    words[params.background_vocab_size + r] = "cue" + std::to_string(r);

  Rng token_rng(mix_seed(params.seed, 3));
  std::vector<Document> docs(params.n_docs);
  for (std::size_t d = 0; d < params.n_docs; ++d) {
    Document& doc = docs[d];
    doc.id = "doc" + std::to_string(d);
    doc.tokens.reserve(lengths[d]);
    for (std::size_t t = 0; t < lengths[d]; ++t)
      doc.tokens.push_back(words[zipf.draw(token_rng)]);
    for (std::size_t ci : event_chunks[d]) {
      const std::size_t lo = ci * chunk_size;
      const std::size_t hi = std::min(lo + chunk_size, lengths[d]);
      const std::size_t start = lo + token_rng.below(hi - lo);
      const std::size_t span =
          1 + token_rng.poisson(params.event_length - 1.0);
      const std::size_t end = std::min(start + span, lengths[d]);
      const std::size_t prefix_end =
          std::min(start + detail::kCuePrefixLen, end);
      for (std::size_t t = start; t < prefix_end; ++t) {
        if (token_rng.bernoulli(params.cue_strength)) {
          doc.tokens[t] =
              words[params.background_vocab_size +
                    token_rng.below(params.cue_vocab_size)];
        }
      }
      doc.gold_starts.push_back(start);
    }
  }
  return docs;
}

// Removes uniformly-sampled all-negative documents until the positive-chunk
// rate at chunk_size reaches the target. Retained documents are untouched
// and keep their original order. Deterministic given seed.
inline std::vector<Document> downsample_negatives(
    const std::vector<Document>& corpus, double target_base_rate,
    std::size_t chunk_size, std::uint64_t seed) {
  if (!(target_base_rate > 0.0 && target_base_rate < 1.0))
    throw ValidationError("target_base_rate must be in (0, 1)");
  if (chunk_size == 0) throw ValidationError("chunk_size must be >= 1");

  std::size_t positive_chunks = 0;
  std::size_t total_chunks = 0;
  std::vector<std::size_t> negative_docs;
  std::vector<std::size_t> doc_chunks(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ChunkStats stats = chunk_stats(corpus[i], chunk_size);
    doc_chunks[i] = stats.total;
    total_chunks += stats.total;
    positive_chunks += stats.positive;
    if (!corpus[i].has_positive()) negative_docs.push_back(i);
  }
  if (positive_chunks == 0)
    throw ValidationError("corpus has no positive chunks; cannot downsample");

  Rng rng(mix_seed(seed, 0xD0));
  rng.shuffle(negative_docs);
  std::vector<bool> removed(corpus.size(), false);
  std::size_t next = 0;
  while (static_cast<double>(positive_chunks) / total_chunks <
         target_base_rate) {
    if (next == negative_docs.size()) {
      throw ValidationError(
          "target base rate " + std::to_string(target_base_rate) +
          " unreachable by removing negative documents; maximum achievable is " +
          std::to_string(static_cast<double>(positive_chunks) / total_chunks));
    }
    const std::size_t victim = negative_docs[next++];
    removed[victim] = true;
    total_chunks -= doc_chunks[victim];
  }

  std::vector<Document> kept;
  kept.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!removed[i]) kept.push_back(corpus[i]);
  return kept;
}

}  // namespace rarespan

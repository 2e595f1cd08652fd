#include "epsm/bench.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <iterator>
#include <random>

namespace epsm {

const char* to_string(CorpusKind k) {
  switch (k) {
    case CorpusKind::genome: return "genome";
    case CorpusKind::protein: return "protein";
    case CorpusKind::english: return "english";
    case CorpusKind::file: return "file";
  }
  return "?";
}

CorpusKind parse_corpus_kind(std::string_view name) {
  for (auto k : {CorpusKind::genome, CorpusKind::protein, CorpusKind::english, CorpusKind::file}) {
    if (name == to_string(k)) return k;
  }
  throw UsageError("unknown corpus kind '" + std::string(name) + "' (genome, protein, english, file)");
}

std::string CorpusSpec::label() const {
  if (path && (kind == CorpusKind::file || kind == CorpusKind::english)) return path->filename().string();
  return to_string(kind);
}

namespace {

struct WeightedWord {
  std::string_view word;
  double weight;
};

// Rough relative frequencies of common English words.
constexpr std::array<WeightedWord, 64> kEnglishWords = {{
    {"the", 6.2}, {"of", 3.4},    {"and", 2.9},   {"to", 2.6},    {"a", 2.2},      {"in", 1.9},
    {"is", 1.0},  {"that", 1.0},  {"for", 0.9},   {"it", 0.9},    {"as", 0.8},     {"was", 0.8},
    {"with", 0.7}, {"be", 0.7},   {"by", 0.6},    {"on", 0.6},    {"not", 0.6},    {"he", 0.6},
    {"this", 0.5}, {"are", 0.5},  {"or", 0.5},    {"his", 0.5},   {"from", 0.5},   {"at", 0.5},
    {"which", 0.4}, {"but", 0.4}, {"have", 0.4},  {"an", 0.4},    {"had", 0.4},    {"they", 0.4},
    {"you", 0.4}, {"were", 0.3},  {"their", 0.3}, {"one", 0.3},   {"all", 0.3},    {"we", 0.3},
    {"can", 0.2}, {"her", 0.2},   {"has", 0.2},   {"there", 0.2}, {"been", 0.2},   {"if", 0.2},
    {"more", 0.2}, {"when", 0.2}, {"will", 0.2},  {"would", 0.2}, {"who", 0.2},    {"so", 0.2},
    {"no", 0.2},  {"time", 0.15}, {"people", 0.1}, {"world", 0.1}, {"water", 0.08}, {"between", 0.08},
    {"children", 0.06}, {"government", 0.06}, {"important", 0.05}, {"language", 0.05},
    {"structure", 0.04}, {"sequence", 0.03}, {"pattern", 0.03}, {"matching", 0.02},
    {"algorithm", 0.02}, {"character", 0.02},
}};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path, std::size_t limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read corpus file '" + path.string() + "'");
  std::vector<std::uint8_t> bytes;
  bytes.resize(limit);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(limit));
  if (in.bad()) throw InputError("error reading corpus file '" + path.string() + "'");
  bytes.resize(static_cast<std::size_t>(in.gcount()));
  if (bytes.empty()) throw InputError("corpus file '" + path.string() + "' is empty");
  return bytes;
}

std::vector<std::uint8_t> uniform_symbols(std::string_view alphabet, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<std::uint8_t> out(size);
  for (auto& c : out) c = static_cast<std::uint8_t>(alphabet[pick(rng)]);
  return out;
}

std::vector<std::uint8_t> pseudo_english(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<double, kEnglishWords.size()> weights;
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = kEnglishWords[i].weight;
  std::discrete_distribution<std::size_t> pick_word(weights.begin(), weights.end());
  std::uniform_int_distribution<int> sentence_length(4, 18);

  std::vector<std::uint8_t> out;
  out.reserve(size + 32);
  while (out.size() < size) {
    const int words = sentence_length(rng);
    for (int w = 0; w < words; ++w) {
      std::string_view word = kEnglishWords[pick_word(rng)].word;
      for (std::size_t i = 0; i < word.size(); ++i) {
        const char c = (w == 0 && i == 0) ? static_cast<char>(std::toupper(word[i])) : word[i];
        out.push_back(static_cast<std::uint8_t>(c));
      }
      out.push_back(w + 1 == words ? '.' : ' ');
    }
    out.push_back((rng() % 8 == 0) ? '\n' : ' ');
  }
  out.resize(size);
  return out;
}

}  // namespace

std::vector<std::uint8_t> generate_corpus(const CorpusSpec& spec) {
  if (spec.size == 0) throw UsageError("corpus size must be at least 1");
  switch (spec.kind) {
    case CorpusKind::genome: return uniform_symbols(kGenomeAlphabet, spec.size, spec.seed);
    case CorpusKind::protein: return uniform_symbols(kProteinAlphabet, spec.size, spec.seed);
    case CorpusKind::english:
      if (spec.path) return read_file(*spec.path, spec.size);
      return pseudo_english(spec.size, spec.seed);
    case CorpusKind::file:
      if (!spec.path) throw UsageError("corpus kind 'file' needs a path");
      return read_file(*spec.path, spec.size);
  }
  throw UsageError("unknown corpus kind");
}

std::vector<Pattern> extract_patterns(const Text& t, std::size_t m, std::size_t count, std::uint64_t seed) {
  if (m == 0) throw UsageError("pattern length must be at least 1");
  if (m > t.size()) throw UsageError("pattern length exceeds the text length");
  if (count == 0) throw UsageError("need at least one pattern");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> start(0, t.size() - m);
  std::vector<Pattern> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(t.bytes().subspan(start(rng), m));
  return out;
}

}  // namespace epsm

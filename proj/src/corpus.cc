// Copyright 2026 The SignalScope Authors.
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

#include "signalscope/corpus.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "signalscope/error.h"
#include "signalscope/parallel.h"

namespace signalscope {

namespace fs = std::filesystem;

namespace {

const std::unordered_map<std::string, std::string> &ClosedClassTags() {
  static const std::unordered_map<std::string, std::string> tags = [] {
    std::unordered_map<std::string, std::string> m;
    auto add = [&m](const char *tag, std::initializer_list<const char *> ws) {
      for (const char *w : ws) m.emplace(w, tag);
    };
    add("IN", {"in", "on", "at", "after", "before", "for", "from", "by",
               "with", "of", "since", "until", "till", "during", "through",
               "over", "into", "within", "as", "if", "while", "because",
               "although", "though", "about", "against", "under", "between",
               "among", "despite", "without", "upon", "toward", "towards",
               "near", "per", "than", "like", "whether", "throughout",
               "amid", "beyond", "onto", "via", "unless", "whereas"});
    add("WRB", {"when", "where", "how", "why", "whenever"});
    add("WDT", {"which", "whatever"});
    add("WP", {"who", "whom", "what"});
    add("TO", {"to"});
    add("DT", {"the", "a", "an", "this", "that", "these", "those", "each",
               "every", "some", "any", "no", "all", "another", "both",
               "either", "neither"});
    add("PRP", {"he", "she", "it", "they", "we", "i", "you", "him", "her",
                "them", "us", "me", "itself", "themselves", "himself"});
    add("PRP$", {"his", "its", "their", "our", "my", "your"});
    add("CC", {"and", "or", "but", "nor", "yet", "&"});
    add("MD", {"will", "would", "can", "could", "may", "might", "shall",
               "should", "must", "wo", "ca"});
    add("RB", {"not", "n't", "already", "previously", "again", "recently",
               "still", "then", "meanwhile", "later", "subsequently", "also",
               "now", "never", "ever", "soon", "just", "only", "very", "even",
               "once", "too", "here", "there", "ago", "shortly", "so",
               "almost", "nearly", "often", "always", "yesterday", "today",
               "tomorrow", "however", "instead", "back", "away"});
    add("RBR", {"earlier", "more", "less", "sooner"});
    add("RBS", {"most", "least"});
    add("JJ", {"former", "new", "last", "next", "previous", "recent", "late",
               "early", "other", "such", "same", "many", "few", "several"});
    add("VBD", {"was", "were", "did", "had", "said", "ended", "followed",
                "told", "came", "went", "ran", "saw", "knew", "became",
                "began", "took", "made", "got", "rose", "fell"});
    add("VBZ", {"is", "has", "does", "says", "follows", "comes", "goes",
                "'s"});
    add("VBP", {"are", "have", "do", "'re", "'ve", "am"});
    add("VB", {"be", "go", "say", "come", "see", "make", "take", "get",
               "know", "tell"});
    add("VBN", {"been", "gone", "done", "known", "seen", "taken", "given"});
    add("VBG", {"being", "following", "going", "coming"});
    add("POS", {"'"});
    add(",", {","});
    add(".", {".", "!", "?"});
    add(":", {":", ";", "-", "--", "..."});
    add("``", {"\"", "``"});
    add("(", {"(", "["});
    add(")", {")", "]"});
    add("$", {"$"});
    return m;
  }();
  return tags;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string FallbackTag(std::string_view surface) {
  if (surface.empty()) return "NN";
  std::string lower = Lowercase(surface);
  const auto &closed = ClosedClassTags();
  if (auto it = closed.find(lower); it != closed.end()) return it->second;

  bool has_digit = std::any_of(surface.begin(), surface.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (has_digit) return "CD";
  if (std::all_of(surface.begin(), surface.end(), [](char c) {
        return std::ispunct(static_cast<unsigned char>(c));
      })) {
    return ":";
  }
  if (std::isupper(static_cast<unsigned char>(surface.front()))) return "NNP";
  if (EndsWith(lower, "ly")) return "RB";
  if (EndsWith(lower, "ing")) return "VBG";
  if (EndsWith(lower, "ed")) return "VBD";
  if (lower.size() > 3 && EndsWith(lower, "s") && !EndsWith(lower, "ss")) {
    return "NNS";
  }
  return "NN";
}

std::optional<std::string> TokenTag(const Document &doc, std::size_t index,
                                    PosSource source) {
  if (index >= doc.tokens.size()) return std::nullopt;
  const Token &t = doc.tokens[index];
  switch (source) {
    case PosSource::kSidecar:
      return t.pos;
    case PosSource::kSidecarWithFallback:
      if (t.pos) return t.pos;
      return FallbackTag(t.surface);
    case PosSource::kFallback:
      return FallbackTag(t.surface);
  }
  return std::nullopt;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return buf.str();
}

std::vector<std::string> ExpandInputs(const std::vector<std::string> &paths) {
  std::vector<std::string> files;
  for (const std::string &p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> found;
      for (fs::recursive_directory_iterator it(p, ec), end; !ec && it != end;
           it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".tml") {
          found.push_back(it->path().string());
        }
      }
      if (ec) throw IoError(p, "cannot list directory: " + ec.message());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(p, ec)) {
      files.push_back(p);
    } else {
      throw IoError(p, "no such file or directory");
    }
  }
  return files;
}

LoadedCorpus LoadCorpus(const std::vector<std::string> &paths,
                        const LoadOptions &options) {
  std::vector<std::string> files = ExpandInputs(paths);
  struct Slot {
    ParseResult parsed;
    std::string note;
  };
  std::vector<Slot> slots = ParallelMap<Slot>(
      files.size(), options.jobs, [&](std::size_t i) {
        const std::string &path = files[i];
        std::string stem = fs::path(path).stem().string();
        Slot slot;
        try {
          slot.parsed = ParseTimeml(ReadFile(path), stem);
        } catch (const ParseError &e) {
          throw IoError(path, e.what());
        }
        if (options.pos_dir) {
          fs::path sidecar = fs::path(*options.pos_dir) / (stem + ".pos");
          std::error_code ec;
          if (fs::exists(sidecar, ec)) {
            try {
              AttachPosSidecar(slot.parsed.document, ReadFile(sidecar.string()));
            } catch (const AlignmentError &e) {
              throw IoError(sidecar.string(), e.what());
            }
          } else {
            slot.note = "no POS sidecar for " + stem;
          }
        }
        return slot;
      });

  LoadedCorpus out;
  out.corpus.label = options.label;
  for (Slot &slot : slots) {
    out.corpus.documents.push_back(std::move(slot.parsed.document));
    out.diagnostics.push_back(std::move(slot.parsed.diagnostics));
    if (!slot.note.empty()) out.notes.push_back(std::move(slot.note));
  }
  return out;
}

}  // namespace signalscope

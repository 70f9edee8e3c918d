#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "modzone/tag.hpp"
#include "modzone/util.hpp"

namespace modzone {

struct Token {
  std::string surface;
  std::size_t begin = 0;  // half-open byte range into Document::normalized_text
  std::size_t end = 0;
  Tag tag = Tag::NONE;
  std::string lemma;  // case-folded surface
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;
};

struct Document {
  std::string source_text;
  std::string normalized_text;
  std::vector<Sentence> sentences;
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline const std::vector<std::string>& default_abbreviations() {
  static const std::vector<std::string> abbrevs = {
      "dr.", "prof.", "fig.", "et al.", "e.g.", "i.e.", "vs.",
  };
  return abbrevs;
}

// One abbreviation per line, '#' comments allowed; stored case-folded.
inline std::vector<std::string> load_abbreviations(const std::filesystem::path& path) {
  std::vector<std::string> abbrevs;
  for (const auto& line : read_lines(path)) {
    std::string a = trim(line);
    if (a.empty() || a[0] == '#') continue;
    abbrevs.push_back(fold_case(a));
  }
  return abbrevs;
}

namespace detail {

// Recognized multi-byte punctuation (UTF-8): curly quotes, guillemets,
// dashes, ellipsis. Returns the byte length of the sequence at `i`, or 0.
inline std::size_t multibyte_punct_len(std::string_view text, std::size_t i) {
  static const std::string_view seqs[] = {
      "‘", "’", "“", "”", "«", "»",
      "–", "—", "…",
  };
  for (std::string_view s : seqs) {
    if (text.size() - i >= s.size() && text.substr(i, s.size()) == s) return s.size();
  }
  return 0;
}

inline bool is_curly_apostrophe(std::string_view text, std::size_t i) {
  return text.size() - i >= 3 &&
         (text.substr(i, 3) == "‘" || text.substr(i, 3) == "’");
}

inline bool is_opening_quote(std::string_view text, std::size_t i, std::size_t& len) {
  if (i < text.size() && (text[i] == '"' || text[i] == '\'' || text[i] == '(' ||
                          text[i] == '[')) {
    len = 1;
    return true;
  }
  if (text.size() - i >= 3 &&
      (text.substr(i, 3) == "“" || text.substr(i, 3) == "‘")) {
    len = 3;
    return true;
  }
  if (text.size() - i >= 2 && text.substr(i, 2) == "«") {
    len = 2;
    return true;
  }
  return false;
}

inline bool is_closing_quote(std::string_view text, std::size_t i, std::size_t& len) {
  if (i < text.size() && (text[i] == '"' || text[i] == '\'' || text[i] == ')' ||
                          text[i] == ']')) {
    len = 1;
    return true;
  }
  if (text.size() - i >= 3 &&
      (text.substr(i, 3) == "”" || text.substr(i, 3) == "’")) {
    len = 3;
    return true;
  }
  if (text.size() - i >= 2 && text.substr(i, 2) == "»") {
    len = 2;
    return true;
  }
  return false;
}

// Replaces TeX-style math spans ($...$, $$...$$, \(...\), \[...\]) on one
// line with the MATH placeholder.
inline std::string replace_math(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '$') {
      if (i + 1 < line.size() && line[i + 1] == '$') {
        std::size_t close = line.find("$$", i + 2);
        if (close != std::string_view::npos && close > i + 2) {
          out += "MATH";
          i = close + 2;
          continue;
        }
        out += "$$";
        i += 2;
        continue;
      }
      std::size_t close = line.find('$', i + 1);
      if (close != std::string_view::npos && close > i + 1) {
        out += "MATH";
        i = close + 1;
        continue;
      }
      out += '$';
      ++i;
      continue;
    }
    if (c == '\\' && i + 1 < line.size() && (line[i + 1] == '(' || line[i + 1] == '[')) {
      const char closer[3] = {'\\', line[i + 1] == '(' ? ')' : ']', '\0'};
      std::size_t close = line.find(closer, i + 2);
      if (close != std::string_view::npos) {
        out += "MATH";
        i = close + 2;
        continue;
      }
    }
    out += c;
    ++i;
  }
  return out;
}

// A line is treated as residual figure/table material when more than half
// of its non-whitespace bytes are non-alphabetic.
inline bool looks_like_figure(std::string_view line) {
  std::size_t total = 0, nonalpha = 0;
  for (char c : line) {
    if (is_ascii_space(c)) continue;
    ++total;
    if (!is_ascii_alpha(c)) ++nonalpha;
  }
  return total >= 4 && nonalpha * 2 > total;
}

}  // namespace detail

// Substitutes formula and figure material with the MATH / FIG placeholder
// tokens: TeX math delimiters become MATH, lines that are mostly
// non-alphabetic become FIG. Idempotent; everything else passes through.
inline std::string substitute_placeholders(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    std::size_t nl = raw.find('\n', pos);
    bool has_newline = nl != std::string_view::npos;
    std::string_view line = raw.substr(pos, has_newline ? nl - pos : raw.size() - pos);
    std::string replaced = detail::replace_math(line);
    if (detail::looks_like_figure(replaced)) replaced = "FIG";
    out += replaced;
    if (!has_newline) break;
    out += '\n';
    pos = nl + 1;
  }
  return out;
}

namespace detail {

// True when the '.' at `dot` terminates an abbreviation: a run of initials
// ("P.", "S.E.") or a configured abbreviation ("Dr.", "et al.").
inline bool abbreviation_before(std::string_view text, std::size_t dot,
                                const std::vector<std::string>& abbrevs) {
  // Initials: letters and dots running back from the dot, all single
  // uppercase letters between dots.
  std::size_t b = dot;
  while (b > 0 && (is_ascii_alpha(text[b - 1]) || text[b - 1] == '.')) --b;
  std::string_view word = text.substr(b, dot - b);
  if (!word.empty()) {
    bool initials = true;
    std::size_t letters = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i % 2 == 0) {
        if (!is_ascii_upper(word[i])) {
          initials = false;
          break;
        }
        ++letters;
      } else if (word[i] != '.') {
        initials = false;
        break;
      }
    }
    if (initials && letters >= 1 && word.size() % 2 == 1) return true;
  }
  for (const auto& a : abbrevs) {
    if (a.empty() || a.back() != '.') continue;
    std::string_view stem(a.data(), a.size() - 1);  // abbreviation without dot
    if (dot < stem.size()) continue;
    std::size_t start = dot - stem.size();
    if (fold_case(text.substr(start, stem.size())) != stem) continue;
    if (start == 0 || !is_ascii_alpha(text[start - 1])) return true;
  }
  return false;
}

}  // namespace detail

// Sentence boundaries sit at '.', '!' or '?' (plus attached closing quotes)
// followed by whitespace and an uppercase start; abbreviations and initials
// do not split. Spans are trimmed of surrounding whitespace.
inline std::vector<Span> split_sentences(
    std::string_view text,
    const std::vector<std::string>& abbrevs = default_abbreviations()) {
  std::vector<Span> spans;
  auto skip_ws = [&text](std::size_t i) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    return i;
  };
  std::size_t start = skip_ws(0);
  if (start >= text.size()) return spans;
  std::size_t i = start;
  while (i < text.size()) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t run_begin = i;
    std::size_t j = i;
    while (j < text.size() && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
    std::size_t k = j;
    std::size_t len = 0;
    while (detail::is_closing_quote(text, k, len)) k += len;
    bool guard = (j - run_begin == 1 && text[run_begin] == '.' &&
                  detail::abbreviation_before(text, run_begin, abbrevs));
    std::size_t m = skip_ws(k);
    bool had_ws = m > k;
    std::size_t m2 = m;
    while (detail::is_opening_quote(text, m2, len)) m2 += len;
    bool upper_next = m2 < text.size() && is_ascii_upper(text[m2]);
    if (!guard && had_ws && upper_next && m < text.size()) {
      spans.push_back(Span{start, k});
      start = m;
    }
    i = k;
  }
  // Trailing material up to the last non-whitespace byte.
  std::size_t e = text.size();
  while (e > start && is_ascii_space(text[e - 1])) --e;
  if (e > start) spans.push_back(Span{start, e});
  return spans;
}

namespace detail {

inline bool is_word_byte(std::string_view text, std::size_t i) {
  char c = text[i];
  if (is_ascii_alnum(c)) return true;
  if (static_cast<unsigned char>(c) >= 0x80) return multibyte_punct_len(text, i) == 0;
  return false;
}

// "P." / "S.E." / "U.S.A." shapes: uppercase letters alternating with dots,
// dot-terminated.
inline bool is_initials(std::string_view word) {
  if (word.size() < 2 || word.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i % 2 == 0) {
      if (!is_ascii_upper(word[i])) return false;
    } else if (word[i] != '.') {
      return false;
    }
  }
  return true;
}

// Splits contracted negations off a word token: "cannot" -> can + not,
// "isn't" -> is + not (with can't/won't/shan't irregular stems). The
// synthesized "not" keeps the byte range of the dropped suffix.
inline void emit_word(std::string_view text, std::size_t b, std::size_t e,
                      std::vector<Token>& out) {
  std::string_view surface = text.substr(b, e - b);
  std::string folded = fold_case(surface);
  auto push = [&out](std::string surf, std::size_t tb, std::size_t te) {
    Token t;
    t.surface = std::move(surf);
    t.begin = tb;
    t.end = te;
    t.lemma = fold_case(t.surface);
    out.push_back(std::move(t));
  };
  if (folded == "cannot") {
    push(std::string(surface.substr(0, 3)), b, b + 3);
    push("not", b + 3, e);
    return;
  }
  std::size_t suffix = 0;
  if (ends_with(folded, "n't"))
    suffix = 3;
  else if (ends_with(folded, "n‘t") || ends_with(folded, "n’t"))
    suffix = 5;
  if (suffix > 0 && folded.size() > suffix) {
    std::string_view base = surface.substr(0, surface.size() - suffix);
    std::string base_folded = folded.substr(0, folded.size() - suffix);
    std::string stem(base);
    if (base_folded == "ca")
      stem = std::string(surface.substr(0, 3));  // can't keeps its n
    else if (base_folded == "wo")
      stem = "will";
    else if (base_folded == "sha")
      stem = "shall";
    push(std::move(stem), b, b + base.size());
    push("not", b + base.size(), e);
    return;
  }
  push(std::string(surface), b, e);
}

}  // namespace detail

// Whitespace tokenization with detached punctuation. Hyphens, apostrophes
// and dots stay word-internal between alphanumerics ("best-known", "3.8",
// "S.E."); a trailing dot is attached for initials and known abbreviations.
inline std::vector<Token> tokenize(
    std::string_view text, Span span,
    const std::vector<std::string>& abbrevs = default_abbreviations()) {
  std::vector<Token> tokens;
  std::size_t i = span.begin;
  std::size_t word_begin = span.end;  // sentinel: no open word
  bool open = false;
  auto flush = [&](std::size_t end_pos) {
    if (open && end_pos > word_begin)
      detail::emit_word(text, word_begin, end_pos, tokens);
    open = false;
  };
  auto push_punct = [&tokens, &text](std::size_t b, std::size_t e) {
    Token t;
    t.surface = std::string(text.substr(b, e - b));
    t.begin = b;
    t.end = e;
    t.lemma = fold_case(t.surface);
    tokens.push_back(std::move(t));
  };
  while (i < span.end) {
    char c = text[i];
    if (is_ascii_space(c)) {
      flush(i);
      ++i;
      continue;
    }
    std::size_t mb = detail::multibyte_punct_len(text, i);
    if (mb > 0) {
      bool internal = detail::is_curly_apostrophe(text, i) && open && i > span.begin &&
                      is_ascii_alnum(text[i - 1]) && i + mb < span.end &&
                      is_ascii_alnum(text[i + mb]);
      if (internal) {
        i += mb;
        continue;
      }
      flush(i);
      push_punct(i, i + mb);
      i += mb;
      continue;
    }
    if (detail::is_word_byte(text, i)) {
      if (!open) {
        word_begin = i;
        open = true;
      }
      ++i;
      continue;
    }
    if ((c == '-' || c == '\'') && open && i > span.begin &&
        is_ascii_alnum(text[i - 1]) && i + 1 < span.end && is_ascii_alnum(text[i + 1])) {
      ++i;
      continue;
    }
    if (c == '.') {
      if (open && i > span.begin && i + 1 < span.end &&
          is_ascii_digit(text[i - 1]) && is_ascii_digit(text[i + 1])) {
        ++i;  // decimal number
        continue;
      }
      if (open) {
        // Dot-terminated run of letters and dots from the word start;
        // consumed whole when it forms initials or a listed abbreviation.
        std::size_t run_end = i;
        while (run_end < span.end &&
               (is_ascii_alpha(text[run_end]) || text[run_end] == '.'))
          ++run_end;
        while (run_end > i + 1 && text[run_end - 1] != '.') --run_end;
        std::string_view candidate = text.substr(word_begin, run_end - word_begin);
        bool listed = std::find(abbrevs.begin(), abbrevs.end(),
                                fold_case(candidate)) != abbrevs.end();
        if (detail::is_initials(candidate) || listed) {
          flush(run_end);
          i = run_end;
          continue;
        }
        // Multi-word abbreviations ("et al.") end exactly at this dot.
        if (detail::abbreviation_before(text, i, abbrevs) &&
            (i + 1 >= span.end || !is_ascii_alpha(text[i + 1]))) {
          flush(i + 1);
          ++i;
          continue;
        }
      }
      flush(i);
      push_punct(i, i + 1);
      ++i;
      continue;
    }
    flush(i);
    push_punct(i, i + 1);
    ++i;
  }
  flush(span.end);
  return tokens;
}

// Normalizes the raw text, splits it into sentences and tokenizes each.
inline Document build_document(
    std::string source,
    const std::vector<std::string>& abbrevs = default_abbreviations()) {
  Document doc;
  doc.source_text = std::move(source);
  doc.normalized_text = substitute_placeholders(doc.source_text);
  std::size_t index = 0;
  for (const Span& span : split_sentences(doc.normalized_text, abbrevs)) {
    Sentence s;
    s.tokens = tokenize(doc.normalized_text, span, abbrevs);
    if (s.tokens.empty()) continue;
    s.index = index++;
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

}  // namespace modzone

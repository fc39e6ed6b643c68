#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argclinic/aba/framework.hpp"
#include "argclinic/aba/goals.hpp"
#include "argclinic/error.hpp"

// Line-oriented ABA+ text format:
//
//   assumption(a).   contrary(a, c_a).   rule(h, [b1, b2]).   rule(h, []).
//   prefer(a, b).    # a <= b
//   goal(g).         priority(g1, g2).   # g1 <= g2
//
// Bare symbols match [A-Za-z0-9_.¬-]+; anything else is written in double
// quotes with \" and \\ escapes. '#' starts a comment.
namespace argclinic::io {

struct AbaDocument {
  aba::RawFramework raw;
  std::vector<aba::Sentence> goals;
  std::vector<std::pair<aba::Sentence, aba::Sentence>> priorities;
  bool has_goals = false;  // any goal/priority statement seen
};

namespace detail {

inline constexpr std::string_view kNot = "¬";

class AbaLexer {
 public:
  explicit AbaLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, column_, expected);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    advance();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string keyword() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("a statement keyword");
    return out;
  }

  aba::Sentence symbol() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '"') return quoted();
    std::string out;
    while (pos_ < text_.size()) {
      const std::size_t len = bare_char_length(text_.substr(pos_));
      if (len == 0) break;
      out.append(text_.substr(pos_, len));
      for (std::size_t i = 0; i < len; ++i) advance();
    }
    if (out.empty()) fail("a symbol");
    return aba::Sentence(out);
  }

  std::pair<std::size_t, std::size_t> position() const { return {line_, column_}; }

  static std::size_t bare_char_length(std::string_view rest) {
    if (rest.empty()) return 0;
    const unsigned char c = static_cast<unsigned char>(rest[0]);
    if (std::isalnum(c) || c == '_' || c == '.' || c == '-') return 1;
    if (rest.substr(0, kNot.size()) == kNot) return kNot.size();
    return 0;
  }

 private:
  aba::Sentence quoted() {
    advance();  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') fail("closing '\"'");
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\\')) {
          fail("'\\\"' or '\\\\' escape");
        }
      }
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("a non-empty quoted symbol");
    return aba::Sentence(out);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace detail

inline AbaDocument parse_aba_text(std::string_view text) {
  AbaDocument doc;
  detail::AbaLexer lex(text);
  while (!lex.at_end()) {
    const auto [line, column] = lex.position();
    const std::string kw = lex.keyword();
    lex.expect('(');
    if (kw == "assumption") {
      doc.raw.assumptions.push_back(lex.symbol());
    } else if (kw == "goal") {
      doc.goals.push_back(lex.symbol());
      doc.has_goals = true;
    } else if (kw == "contrary" || kw == "prefer" || kw == "priority") {
      auto a = lex.symbol();
      lex.expect(',');
      auto b = lex.symbol();
      if (kw == "contrary") {
        doc.raw.contraries.emplace_back(std::move(a), std::move(b));
      } else if (kw == "prefer") {
        doc.raw.preferences.emplace_back(std::move(a), std::move(b));
      } else {
        doc.priorities.emplace_back(std::move(a), std::move(b));
        doc.has_goals = true;
      }
    } else if (kw == "rule") {
      auto head = lex.symbol();
      lex.expect(',');
      lex.expect('[');
      std::vector<aba::Sentence> body;
      if (!lex.accept(']')) {
        do {
          body.push_back(lex.symbol());
        } while (lex.accept(','));
        lex.expect(']');
      }
      doc.raw.rules.emplace_back(std::move(head), std::move(body));
    } else {
      throw ParseError(line, column,
                       "one of assumption, contrary, rule, prefer, goal, priority");
    }
    lex.expect(')');
    lex.expect('.');
  }
  return doc;
}

inline std::string format_symbol(const aba::Sentence& s) {
  const std::string& text = s.str();
  bool bare = true;
  for (std::size_t i = 0; i < text.size();) {
    const std::size_t len = detail::AbaLexer::bare_char_length(std::string_view(text).substr(i));
    if (len == 0) {
      bare = false;
      break;
    }
    i += len;
  }
  if (bare) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string format_rule(const aba::Rule& r) {
  std::string out = "rule(" + format_symbol(r.head) + ", [";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += format_symbol(r.body[i]);
  }
  return out + "]).";
}

inline std::string serialize_aba_text(const aba::Framework& f,
                                      const aba::PriorityPreorder* priority = nullptr) {
  std::ostringstream os;
  for (const auto& a : f.assumptions()) os << "assumption(" << format_symbol(a) << ").\n";
  for (std::size_t i = 0; i < f.assumption_count(); ++i) {
    os << "contrary(" << format_symbol(f.assumptions()[i]) << ", "
       << format_symbol(f.contrary(i)) << ").\n";
  }
  for (const auto& r : f.rules()) os << format_rule(r) << "\n";
  for (std::size_t i = 0; i < f.assumption_count(); ++i) {
    for (std::size_t j = 0; j < f.assumption_count(); ++j) {
      if (i != j && f.preference().leq(i, j)) {
        os << "prefer(" << format_symbol(f.assumptions()[i]) << ", "
           << format_symbol(f.assumptions()[j]) << ").\n";
      }
    }
  }
  if (priority) {
    for (const auto& g : priority->goals()) os << "goal(" << format_symbol(g) << ").\n";
    for (const auto& [x, y] : priority->pairs()) {
      os << "priority(" << format_symbol(x) << ", " << format_symbol(y) << ").\n";
    }
  }
  return os.str();
}

inline std::string serialize_aba_text(const aba::GoalFramework& fg) {
  return serialize_aba_text(fg.base, &fg.priority);
}

// A parsed document is either a plain ABA+ framework or an ABA+G one.
struct LoadedFramework {
  aba::Framework base;
  std::optional<aba::PriorityPreorder> priority;
};

inline LoadedFramework load_aba_text(std::string_view text) {
  AbaDocument doc = parse_aba_text(text);
  aba::Framework base = aba::validate_framework(doc.raw);
  if (!doc.has_goals) return {std::move(base), std::nullopt};
  auto fg = aba::validate_abapg(std::move(base), doc.goals, doc.priorities);
  return {std::move(fg.base), std::move(fg.priority)};
}

}  // namespace argclinic::io

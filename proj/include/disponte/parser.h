#ifndef DISPONTE_PARSER_H_
#define DISPONTE_PARSER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "disponte/kb.h"

namespace disponte {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// A parsed KB together with the 1-based source line of every axiom.
struct KbSource {
  KnowledgeBase kb;
  std::vector<std::size_t> lines;
};

// Line-oriented format, one axiom per line:
//
//   [p ::] C <= D          concept inclusion
//   [p ::] a : C           concept assertion
//   [p ::] (a, b) : R      role assertion
//
// Concepts use Top, Bottom, names, "not", "and", "or", "exists R. C",
// "forall R. C" and parentheses. Binding: not and quantifiers bind tightest,
// then "and", then "or"; chains of and/or nest to the right. Text after '#'
// is a comment.
KbSource ParseKbSource(std::string_view text);
KnowledgeBase ParseKb(std::string_view text);

// "a : C" or "C <= D".
Query ParseQuery(std::string_view text);

Concept ParseConcept(std::string_view text);

// Inverse of ParseKb: one line per axiom, probabilities in the shortest
// decimal form that reads back to the same double.
std::string SerializeKb(const KnowledgeBase& kb);

}  // namespace disponte

#endif  // DISPONTE_PARSER_H_

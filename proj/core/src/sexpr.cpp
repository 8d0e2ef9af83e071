#include "bvl/sexpr.hpp"

#include <cctype>

#include "bvl/error.hpp"

namespace bvl::sexpr {

bool Node::is_form(std::string_view head) const {
  return is_list && !items.empty() && items.front().is_atom(head);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  Node read() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of input");
    Node node;
    node.line = line_;
    node.column = column_;
    char c = text_[pos_];
    if (c == ')') error("unexpected ')'");
    if (c == '(') {
      advance();
      node.is_list = true;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) {
          error("unterminated list opened at " + std::to_string(node.line) + ":" +
                std::to_string(node.column));
        }
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        node.items.push_back(read());
      }
      return node;
    }
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
      node.atom.push_back(text_[pos_]);
      advance();
    }
    return node;
  }

  [[noreturn]] void error(const std::string& message) const {
    fail(ErrorCode::Parse,
         std::to_string(line_) + ":" + std::to_string(column_) + ": " + message);
  }

 private:
  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ';' ||
           std::isspace(static_cast<unsigned char>(c)) != 0;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Node parse_one(std::string_view text) {
  Reader reader(text);
  Node node = reader.read();
  if (!reader.at_end()) reader.error("trailing input after expression");
  return node;
}

std::vector<Node> parse_all(std::string_view text) {
  Reader reader(text);
  std::vector<Node> out;
  while (!reader.at_end()) out.push_back(reader.read());
  return out;
}

std::string location(const Node& node) {
  return std::to_string(node.line) + ":" + std::to_string(node.column);
}

void error_at(const Node& node, const std::string& message) {
  fail(ErrorCode::Parse, location(node) + ": " + message);
}

}  // namespace bvl::sexpr

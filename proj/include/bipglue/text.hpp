#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bipglue/port.hpp"

namespace bipglue {

// How identifier runs split into ports. Letters: each port is one letter
// optionally followed by digits or `_suffix` groups (`p'qr`). Words: a run is
// one port (`al offc`). Auto: letters iff the text has no whitespace.
enum class PortLexing { Auto, Words, Letters };

PortLexing resolve_lexing(std::string_view text, PortLexing mode);

enum class Tok {
  Ident,
  Zero,
  One,
  True,
  False,
  Bang,
  Minus,
  Arrow,
  Plus,
  Parallel,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Quote,
  Star,
  Tilde,
  Amp,
  Bar,
  Implies,
  Iff,
  Comma,
  LBrace,
  RBrace,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(Tok kind);

// Throws ParseError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view text, PortLexing mode);

class TokenStream {
 public:
  TokenStream(std::string_view text, PortLexing mode);

  const Token& peek(std::size_t ahead = 0) const;
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& next();
  bool accept(Tok kind);
  const Token& expect(Tok kind);
  [[noreturn]] void fail(const std::string& what) const;
  void expect_end();

  // `p`, `p!`, `-p`; nullopt when the next token cannot start one.
  std::optional<TypedPort> typed_port();
  bool at_typed_port() const;

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace bipglue

#include "bipglue/text.hpp"

#include <algorithm>
#include <cctype>

#include "bipglue/error.hpp"

namespace bipglue {

namespace {

bool ident_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u == '_';
}

struct Symbol {
  std::string_view spelling;
  Tok kind;
};

// Longest spellings first.
constexpr Symbol kSymbols[] = {
    {"<=>", Tok::Iff},      {"(+)", Tok::Parallel},
    {"\xE2\x87\x94", Tok::Iff},     // ⇔
    {"\xE2\x87\x92", Tok::Implies}, // ⇒
    {"\xE2\x86\x92", Tok::Arrow},   // →
    {"\xE2\x8A\x95", Tok::Parallel},// ⊕
    {"\xE2\x88\xA7", Tok::Amp},     // ∧
    {"\xE2\x88\xA8", Tok::Bar},     // ∨
    {"\xC2\xAC", Tok::Tilde},       // ¬
    {"\xC2\xB7", Tok::Star},        // ·
    {"=>", Tok::Implies},   {"->", Tok::Arrow},
    {"!", Tok::Bang},       {"-", Tok::Minus},
    {"+", Tok::Plus},       {"(", Tok::LParen},
    {")", Tok::RParen},     {"[", Tok::LBracket},
    {"]", Tok::RBracket},   {"'", Tok::Quote},
    {"*", Tok::Star},       {".", Tok::Star},
    {"~", Tok::Tilde},      {"&", Tok::Amp},
    {"|", Tok::Bar},        {",", Tok::Comma},
    {"{", Tok::LBrace},     {"}", Tok::RBrace},
};

void split_letters(std::string_view run, std::size_t pos,
                   std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < run.size()) {
    const char c = run[i];
    if (c == '0' || c == '1') {
      out.push_back({c == '0' ? Tok::Zero : Tok::One, std::string(1, c),
                     pos + i});
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("unexpected '" + std::string(1, c) + "'", pos + i);
    std::size_t j = i + 1;
    for (;;) {
      if (j < run.size() && std::isdigit(static_cast<unsigned char>(run[j]))) {
        ++j;
      } else if (j + 1 < run.size() && run[j] == '_' &&
                 std::isalnum(static_cast<unsigned char>(run[j + 1]))) {
        j += 2;
        while (j < run.size() &&
               std::isalnum(static_cast<unsigned char>(run[j])))
          ++j;
      } else {
        break;
      }
    }
    out.push_back({Tok::Ident, std::string(run.substr(i, j - i)), pos + i});
    i = j;
  }
}

void push_run(std::string_view run, std::size_t pos, PortLexing mode,
              std::vector<Token>& out) {
  if (run == "tt") {
    out.push_back({Tok::True, "tt", pos});
  } else if (run == "ff") {
    out.push_back({Tok::False, "ff", pos});
  } else if (mode == PortLexing::Letters) {
    split_letters(run, pos, out);
  } else if (run == "0") {
    out.push_back({Tok::Zero, "0", pos});
  } else if (run == "1") {
    out.push_back({Tok::One, "1", pos});
  } else if (Port::valid_name(run)) {
    out.push_back({Tok::Ident, std::string(run), pos});
  } else {
    throw ParseError("invalid port name '" + std::string(run) + "'", pos);
  }
}

}  // namespace

PortLexing resolve_lexing(std::string_view text, PortLexing mode) {
  if (mode != PortLexing::Auto) return mode;
  const bool spaced = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  return spaced ? PortLexing::Words : PortLexing::Letters;
}

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "port";
    case Tok::Zero: return "'0'";
    case Tok::One: return "'1'";
    case Tok::True: return "'tt'";
    case Tok::False: return "'ff'";
    case Tok::Bang: return "'!'";
    case Tok::Minus: return "'-'";
    case Tok::Arrow: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Parallel: return "'(+)'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Quote: return "'''";
    case Tok::Star: return "'*'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Implies: return "'=>'";
    case Tok::Iff: return "'<=>'";
    case Tok::Comma: return "','";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text, PortLexing mode) {
  mode = resolve_lexing(text, mode);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push_run(text.substr(i, j - i), i, mode, out);
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& sym : kSymbols) {
      if (text.substr(i, sym.spelling.size()) == sym.spelling) {
        out.push_back({sym.kind, std::string(sym.spelling), i});
        i += sym.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched)
      throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

TokenStream::TokenStream(std::string_view text, PortLexing mode)
    : toks_(tokenize(text, mode)) {}

const Token& TokenStream::peek(std::size_t ahead) const {
  return toks_[std::min(i_ + ahead, toks_.size() - 1)];
}

const Token& TokenStream::next() {
  const Token& t = toks_[i_];
  if (i_ + 1 < toks_.size()) ++i_;
  return t;
}

bool TokenStream::accept(Tok kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

const Token& TokenStream::expect(Tok kind) {
  if (!at(kind))
    fail("expected " + describe(kind) + ", found " + describe(peek().kind));
  return next();
}

void TokenStream::fail(const std::string& what) const {
  throw ParseError(what, peek().pos);
}

void TokenStream::expect_end() {
  if (!at(Tok::End)) fail("unexpected " + describe(peek().kind));
}

bool TokenStream::at_typed_port() const {
  return at(Tok::Ident) || (at(Tok::Minus) && peek(1).kind == Tok::Ident);
}

std::optional<TypedPort> TokenStream::typed_port() {
  if (accept(Tok::Minus)) {
    const Token& t = expect(Tok::Ident);
    if (at(Tok::Bang)) fail("a port cannot be both negative and firing");
    return neg(Port(t.text));
  }
  if (!at(Tok::Ident)) return std::nullopt;
  Port p(next().text);
  if (accept(Tok::Bang)) return fire(p);
  return act(p);
}

}  // namespace bipglue

#include "einobs/parser.hpp"

#include <cctype>
#include <optional>

#include "einobs/error.hpp"

namespace einobs {
namespace {

enum class Tok { kHash, kStar, kLParen, kRParen, kComma, kNumber, kIdent, kEnd };

const char* describe(Tok t) {
  switch (t) {
    case Tok::kHash: return "'#'";
    case Tok::kStar: return "'*'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kNumber: return "number";
    case Tok::kIdent: return "block name";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '~'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      current_ = {Tok::kEnd, start, ""};
      return;
    }
    const char c = src_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      current_ = {kind, start, std::string(1, c)};
    };
    switch (c) {
      case '#': return single(Tok::kHash);
      case '*': return single(Tok::kStar);
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case ',': return single(Tok::kComma);
      default: break;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string text(src_.substr(start, pos_ - start));
      if (text == "-" || text == "+") {
        throw SyntaxError(ErrorKind::kSyntax, start, "sign without digits");
      }
      current_ = {Tok::kNumber, start, std::move(text)};
      return;
    }
    if (ident_start(c)) {
      ++pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      current_ = {Tok::kIdent, start, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    throw SyntaxError(ErrorKind::kSyntax, start, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Tok::kEnd, 0, ""};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ManifoldExpr expr() {
    std::vector<Summand> summands;
    summands.push_back(term());
    while (lex_.peek().kind == Tok::kHash) {
      lex_.take();
      summands.push_back(term());
    }
    expect(Tok::kEnd, "'#' or end of input");
    return ManifoldExpr(std::move(summands));
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    const Token& t = lex_.peek();
    if (t.kind != kind) {
      throw SyntaxError(ErrorKind::kSyntax, t.pos,
                        "expected " + what + ", found " +
                            (t.kind == Tok::kEnd ? std::string("end of input") : "'" + t.text + "'"));
    }
    return lex_.take();
  }

  Integer integer(const std::string& what) {
    const Token t = expect(Tok::kNumber, what);
    return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text, 10);
  }

  Integer natural(const std::string& what) {
    const Token& t = lex_.peek();
    if (t.kind == Tok::kNumber && (t.text[0] == '-' || t.text[0] == '+')) {
      throw SyntaxError(ErrorKind::kSyntax, t.pos, "expected " + what + ", found signed '" + t.text + "'");
    }
    return integer(what);
  }

  Summand term() {
    Integer multiplicity = 1;
    if (lex_.peek().kind == Tok::kNumber) {
      const std::size_t pos = lex_.peek().pos;
      multiplicity = natural("multiplicity");
      if (multiplicity == 0) {
        throw SyntaxError(ErrorKind::kZeroMultiplicity, pos, "multiplicity must be positive");
      }
      expect(Tok::kStar, describe(Tok::kStar));
    }
    return Summand{block(), multiplicity};
  }

  BuildingBlock block() {
    const Token name = expect(Tok::kIdent, describe(Tok::kIdent));
    if (name.text == "CP2") return CP2{};
    if (name.text == "~CP2") return CP2Bar{};
    if (name.text == "S1xS3") return S1xS3{};
    if (name.text == "K3") return K3{};
    if (name.text == "S4") return S4{};
    if (name.text == "Chen") {
      expect(Tok::kLParen, describe(Tok::kLParen));
      Integer x = integer("integer chi_h");
      expect(Tok::kComma, describe(Tok::kComma));
      Integer y = integer("integer c1^2");
      expect(Tok::kRParen, describe(Tok::kRParen));
      return ChenSurface{std::move(x), std::move(y), false};
    }
    if (name.text == "Custom") {
      expect(Tok::kLParen, describe(Tok::kLParen));
      const Token label = expect(Tok::kIdent, "custom block name");
      if (label.text[0] == '~' || !is_valid_custom_name(label.text)) {
        throw SyntaxError(ErrorKind::kSyntax, label.pos, "invalid custom block name '" + label.text + "'");
      }
      expect(Tok::kComma, describe(Tok::kComma));
      Integer e = integer("integer e");
      expect(Tok::kComma, describe(Tok::kComma));
      Integer sigma = integer("integer sigma");
      expect(Tok::kComma, describe(Tok::kComma));
      Integer b1 = natural("natural b1");
      expect(Tok::kRParen, describe(Tok::kRParen));
      if (mpz_odd_p(Integer(e + sigma).get_mpz_t())) {
        throw SyntaxError(ErrorKind::kParityViolation, name.pos,
                          "e + sigma is odd for Custom(" + label.text + ")");
      }
      return Custom(label.text, std::move(e), std::move(sigma), std::move(b1));
    }
    throw SyntaxError(ErrorKind::kUnknownBlock, name.pos, "unknown block '" + name.text + "'");
  }

  Lexer lex_;
};

}  // namespace

ManifoldExpr parse(std::string_view text) { return Parser(text).expr(); }

std::string format(const ManifoldExpr& expr) {
  std::string out;
  for (const auto& s : expr.multiset()) {
    if (!out.empty()) out += " # ";
    if (s.multiplicity >= 2) out += s.multiplicity.get_str() + "*";
    out += block_name(s.block);
  }
  return out;
}

}  // namespace einobs

#include "nmsflow/expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "nmsflow/errors.hpp"

namespace nmsflow {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Manifold parse() {
    std::vector<Manifold> parts{summand()};
    while (accept('#')) parts.push_back(summand());
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return sum_normalize(parts);
  }

 private:
  Manifold summand() {
    skip_ws();
    if (accept_word("S2xS1")) return S2xS1{};
    if (accept_word("S3")) return Sphere{};
    if (accept_word("RP3")) return RP3{};
    if (accept_word("SFS")) {
      expect('(');
      skip_ws();
      if (!accept_word("S2")) fail("expected base S2");
      expect(';');
      SeifertData s;
      s.fibers.push_back(pair());
      while (accept(',')) s.fibers.push_back(pair());
      expect(')');
      return seifert_space(s);
    }
    if (accept_word("L")) {
      expect('(');
      Int p = integer();
      expect(',');
      Int q = integer();
      expect(')');
      return lens_canonical(p, q);
    }
    fail("expected S3, S2xS1, RP3, L(p,q) or SFS(S2; ...)");
  }

  Fiber pair() {
    expect('(');
    Int a = integer();
    expect(',');
    Int b = integer();
    expect(')');
    return {a, b};
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    Int v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    (void)ptr;
    if (ec != std::errc{}) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Manifold parse_manifold(std::string_view text) { return Parser(text).parse(); }

std::string render_fibers(const SeifertData& s) {
  std::string out;
  for (const auto& f : s.fibers) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")";
  }
  return out;
}

std::string render(const Manifold& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          return "S3";
        } else if constexpr (std::is_same_v<T, S2xS1>) {
          return "S2xS1";
        } else if constexpr (std::is_same_v<T, RP3>) {
          return "RP3";
        } else if constexpr (std::is_same_v<T, Lens>) {
          return "L(" + std::to_string(x.params.p) + "," + std::to_string(x.params.q) + ")";
        } else if constexpr (std::is_same_v<T, SeifertOverS2>) {
          return "SFS(S2; " + render_fibers(x.data) + ")";
        } else {
          std::string out;
          for (const auto& s : x.summands) {
            if (!out.empty()) out += " # ";
            out += render(s);
          }
          return out;
        }
      },
      m.variant());
}

}  // namespace nmsflow

#include "rookchar/notation.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "rookchar/quasicycle.hpp"

namespace rookchar {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RookElement run() {
    skip_space();
    if (eof()) fail(Errc::SyntaxError, "empty expression");
    RookElement acc;
    while (!eof()) {
      acc = compose(acc, term());
      skip_space();
    }
    return acc;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(Errc code, const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at position " << pos_;
    throw Error(code, os.str(), static_cast<int>(pos_));
  }

  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  int integer() {
    skip_space();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(Errc::SyntaxError, "expected integer");
    }
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000L) fail(Errc::SyntaxError, "integer too large");
      ++pos_;
    }
    if (v < 1) fail(Errc::NonPositiveIndex, "indices must be >= 1");
    return static_cast<int>(v);
  }

  void expect(char c) {
    if (eof() || peek() != c) {
      fail(Errc::SyntaxError, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  RookElement term() {
    RookElement base_el = base();
    if (!eof() && peek() == '\'') {
      ++pos_;
      base_el = star(base_el);
    }
    return base_el;
  }

  RookElement base() {
    skip_space();
    if (eof()) fail(Errc::SyntaxError, "expected term");
    char c = peek();
    if (c == 'e') {
      ++pos_;
      return RookElement{};
    }
    if (c == '(') return cycle_term();
    if (c == 'k') return kill_term();
    fail(Errc::SyntaxError, "expected '(', 'k{' or 'e'");
  }

  RookElement cycle_term() {
    expect('(');
    skip_space();
    if (!eof() && peek() == ')') fail(Errc::EmptyCycle, "empty cycle");
    std::vector<int> points;
    std::set<int> seen;
    while (true) {
      int p = integer();
      if (!seen.insert(p).second) {
        fail(Errc::DuplicatePoint, "repeated point in cycle");
      }
      points.push_back(p);
      skip_space();
      if (!eof() && peek() == ')') {
        ++pos_;
        break;
      }
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail(Errc::SyntaxError, "expected integer or ')'");
      }
    }
    return cycle(points);
  }

  RookElement kill_term() {
    expect('k');
    expect('{');
    std::set<int> points;
    while (true) {
      points.insert(integer());
      skip_space();
      if (!eof() && peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      break;
    }
    return epsilon(points);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RookElement parse(const std::string& text) { return Parser(text).run(); }

std::string format(const RookElement& r) {
  if (r.is_identity()) return "e";
  std::ostringstream os;
  for (const Quasicycle& q : decompose(r)) {
    os << '(';
    if (q.kind == Quasicycle::Kind::PureCycle) {
      for (std::size_t i = 0; i < q.points.size(); ++i) {
        if (i) os << ' ';
        os << q.points[i];
      }
      os << ')';
    } else {
      // Chain a1 -> ... -> am (am killed) is the product of the cycle
      // (a2 ... am a1) with a kill of a1.
      for (std::size_t i = 1; i < q.points.size(); ++i) {
        os << q.points[i] << ' ';
      }
      os << q.points.front() << ")k{" << q.points.front() << '}';
    }
  }
  return os.str();
}

}  // namespace rookchar

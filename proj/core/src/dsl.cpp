#include "cohomlen/dsl.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>

namespace cohomlen {

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view src) : src_(src) {}

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    std::string out;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      out.push_back(src_[pos_]);
      advance();
    }
    return out;
  }

  void keyword(std::string_view kw) {
    auto [line, col] = position();
    auto w = word();
    if (w != kw) throw ParseError("expected keyword '" + std::string(kw) + "'", line, col);
  }

  std::uint64_t number() {
    skip_space();
    auto [line, col] = position();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    if (start == pos_) throw ParseError("expected a number", line, col);
    std::uint64_t value = 0;
    auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc()) throw ParseError("number out of range", line, col);
    return value;
  }

  std::pair<std::size_t, std::size_t> position() const { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& msg) {
    skip_space();
    throw ParseError(msg, line_, col_);
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::size_t parse_header(Scanner& sc, std::string_view kw) {
  sc.keyword(kw);
  auto [line, col] = sc.position();
  auto d = sc.number();
  if (d == 0 || d > 32) throw ParseError("ambient dimension must be between 1 and 32", line, col);
  sc.expect(';');
  return static_cast<std::size_t>(d);
}

// Returns nullopt for the literal 0, which contributes no generator.
std::optional<ExponentVector> parse_term(Scanner& sc, std::size_t d) {
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    auto [line, col] = sc.position();
    auto v = sc.number();
    if (v == 1) return ExponentVector(d);
    if (v == 0) return std::nullopt;
    throw ParseError("only the constants 0 and 1 are allowed as terms", line, col);
  }
  ExponentVector e(d);
  do {
    auto [line, col] = sc.position();
    if (sc.peek() != 'x') throw ParseError("expected a variable x<i>", line, col);
    sc.expect('x');
    auto idx = sc.number();
    if (idx < 1 || idx > d) throw ParseError("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(d), line, col);
    std::uint64_t exp = 1;
    if (sc.accept('^')) exp = sc.number();
    if (exp > static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max() / 2))
      throw ParseError("exponent too large", line, col);
    e[idx - 1] = checked_add(e[idx - 1], static_cast<Exponent>(exp));
  } while (sc.accept('*'));
  return e;
}

}  // namespace

std::vector<MonomialIdeal> parse_ideals(std::string_view source) {
  Scanner sc(source);
  auto d = parse_header(sc, "ring");
  std::vector<MonomialIdeal> out;
  while (!sc.at_end()) {
    sc.keyword("ideal");
    std::vector<ExponentVector> gens;
    if (sc.peek() != ';') {
      do {
        if (auto t = parse_term(sc, d)) gens.push_back(std::move(*t));
      } while (sc.accept(','));
    }
    sc.expect(';');
    out.push_back(MonomialIdeal::minimalize(d, std::move(gens)));
  }
  if (out.empty()) sc.fail("expected at least one ideal statement");
  return out;
}

MonomialIdeal parse_ideal(std::string_view source) {
  auto ideals = parse_ideals(source);
  if (ideals.size() != 1) throw ParseError("expected exactly one ideal statement", 1, 1);
  return ideals.front();
}

Graph parse_graph(std::string_view source) {
  Scanner sc(source);
  auto d = parse_header(sc, "graph");
  std::vector<Graph::Edge> edges;
  if (!sc.at_end()) {
    sc.keyword("edges");
    if (sc.peek() != ';') {
      do {
        auto [line, col] = sc.position();
        auto a = sc.number();
        sc.expect('-');
        auto b = sc.number();
        if (a < 1 || b < 1 || a > d || b > d) throw ParseError("vertex outside 1.." + std::to_string(d), line, col);
        if (a == b) throw ParseError("loops are not allowed", line, col);
        edges.emplace_back(a - 1, b - 1);
      } while (sc.accept(','));
    }
    sc.expect(';');
    if (!sc.at_end()) sc.fail("unexpected trailing input");
  }
  try {
    return Graph(d, std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string to_dsl(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << "ring " << ideal.dim() << "; ideal ";
  if (ideal.is_zero()) os << '0';
  bool first_term = true;
  for (const auto& g : ideal.generators()) {
    if (!first_term) os << ", ";
    first_term = false;
    if (g.is_zero()) {
      os << '1';
      continue;
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << 'x' << (i + 1);
      if (g[i] != 1) os << '^' << g[i];
    }
  }
  os << ';';
  return os.str();
}

std::string to_dsl(const Graph& graph) {
  std::ostringstream os;
  os << "graph " << graph.universe() << ";";
  if (!graph.edges().empty()) {
    os << " edges ";
    for (std::size_t k = 0; k < graph.edges().size(); ++k) {
      auto [a, b] = graph.edges()[k];
      os << (k ? ", " : "") << (a + 1) << '-' << (b + 1);
    }
    os << ';';
  }
  return os.str();
}

}  // namespace cohomlen

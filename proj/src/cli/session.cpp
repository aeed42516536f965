#include "jstretch/session.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "jstretch/parse.hpp"

namespace jst::cli {

void validate(const SessionConfig& config) {
  if (!is_prime(config.p)) throw PreconditionFailed("characteristic " + std::to_string(config.p) + " is not prime");
  if (config.trials < 1) throw PreconditionFailed("trials must be positive");
  if (config.caps.gb_degree < 1 || config.caps.truncation < 1 || config.caps.search < 1)
    throw PreconditionFailed("caps must be positive");
}

const Ideal& Session::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw PreconditionFailed("no ideal named '" + name + "'");
  return it->second;
}

const std::string& Session::default_ideal() const {
  if (!commands.empty()) return commands.back().ideal;
  if (ideal_order.empty()) throw PreconditionFailed("the session declares no ideal");
  return ideal_order.back();
}

Hypotheses Session::hypotheses(const std::string& name) const {
  auto it = asserted.find(name);
  return it == asserted.end() ? Hypotheses{} : it->second;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineScanner {
 public:
  LineScanner(std::string text, int line) : text_(std::move(text)), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string word(const std::string& what) {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected " + what);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number(const std::string& what) {
    skip_space();
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc() || end == text_.data() + pos_) fail("expected " + what);
    pos_ = static_cast<std::size_t>(end - text_.data());
    return v;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void keyword(const std::string& kw) {
    int col = (skip_space(), column());
    if (word("'" + kw + "'") != kw) throw SyntaxError(line_, col, "expected '" + kw + "'");
  }

  /// Remainder of the line, starting at the next non-space character.
  std::pair<std::string, int> rest() {
    skip_space();
    int col = column();
    std::string r = text_.substr(pos_);
    pos_ = text_.size();
    return {r, col};
  }

  [[noreturn]] void fail(const std::string& reason) const { throw SyntaxError(line_, column(), reason); }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  int line_;
};

struct RingDecl {
  RingPtr ring;
  std::vector<Polynomial> relations;
  AmbientPtr ambient;
};

std::vector<Polynomial> parse_list(const RingPtr& ring, const std::string& text, int line, int column) {
  try {
    return parse_polynomial_list(ring, text);
  } catch (const jst::UnknownVariable& e) {
    throw cli::UnknownVariable(line, column + e.column() - 1, e.what());
  } catch (const ParseError& e) {
    throw SyntaxError(line, column + e.column() - 1, e.what());
  }
}

bool parse_flag_value(LineScanner& sc, int line) {
  if (sc.peek() != '=') return true;
  sc.expect('=');
  int col = (sc.skip_space(), sc.column());
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    auto v = sc.number("0 or 1");
    if (v > 1) throw SyntaxError(line, col, "flag value must be 0 or 1");
    return v == 1;
  }
  auto w = sc.word("flag value");
  if (w == "true") return true;
  if (w == "false") return false;
  throw SyntaxError(line, col, "flag value must be 0, 1, true or false");
}

}  // namespace

Session parse_session(const std::string& text, const SessionConfig& config) {
  Session s;
  std::map<std::string, RingDecl> rings;
  GbOptions gb;
  gb.degree_cap = config.caps.gb_degree;
  gb.truncation_cap = config.caps.truncation;

  auto build = [&](RingDecl& decl, int line) {
    if (decl.ambient) return;
    try {
      decl.ambient = make_ambient(decl.ring, decl.relations, gb);
    } catch (const NotContainedInMaximal& e) {
      throw SyntaxError(line, 1, e.what());
    }
  };

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    LineScanner sc(raw, line);
    if (sc.at_end()) continue;
    int cmd_col = sc.column();
    std::string cmd = sc.word("a command");

    if (cmd == "ring") {
      int name_col = (sc.skip_space(), sc.column());
      std::string name = sc.word("ring name");
      if (rings.count(name)) throw SyntaxError(line, name_col, "duplicate ring name '" + name + "'");
      sc.keyword("vars");
      std::vector<std::string> vars;
      do {
        int col = (sc.skip_space(), sc.column());
        auto v = sc.word("variable name");
        for (const auto& w : vars)
          if (w == v) throw SyntaxError(line, col, "duplicate variable '" + v + "'");
        vars.push_back(v);
        if (sc.peek() != ',') break;
        sc.expect(',');
      } while (true);
      std::uint64_t p = config.p;
      MonomialOrder order = MonomialOrder::grevlex();
      while (!sc.at_end()) {
        int col = sc.column();
        auto key = sc.word("'char' or 'order'");
        if (key == "char") {
          int pcol = (sc.skip_space(), sc.column());
          p = sc.number("a characteristic");
          if (!is_prime(p)) throw NonPrimeChar(line, pcol, p);
          if (p >= (1ull << 31)) throw SyntaxError(line, pcol, "characteristic must be below 2^31");
        } else if (key == "order") {
          int ocol = (sc.skip_space(), sc.column());
          auto o = sc.word("a monomial order");
          if (o == "grevlex") order = MonomialOrder::grevlex();
          else if (o == "lex") order = MonomialOrder::lex();
          else throw SyntaxError(line, ocol, "unknown order '" + o + "'");
        } else {
          throw SyntaxError(line, col, "unexpected '" + key + "'");
        }
      }
      rings[name].ring = make_ring(vars, PrimeField(static_cast<std::uint32_t>(p)), order);
    } else if (cmd == "relations") {
      int name_col = (sc.skip_space(), sc.column());
      std::string name = sc.word("ring name");
      auto it = rings.find(name);
      if (it == rings.end()) throw SyntaxError(line, name_col, "unknown ring '" + name + "'");
      if (it->second.ambient)
        throw SyntaxError(line, name_col, "relations for '" + name + "' after an ideal was declared in it");
      auto [list, col] = sc.rest();
      auto rel = parse_list(it->second.ring, list, line, col);
      it->second.relations.insert(it->second.relations.end(), rel.begin(), rel.end());
    } else if (cmd == "ideal") {
      if (rings.empty()) throw SyntaxError(line, cmd_col, "no ring declared");
      int name_col = (sc.skip_space(), sc.column());
      std::string name = sc.word("ideal name");
      if (s.ideals.count(name)) throw SyntaxError(line, name_col, "duplicate ideal name '" + name + "'");
      sc.keyword("in");
      int ring_col = (sc.skip_space(), sc.column());
      std::string rname = sc.word("ring name");
      auto it = rings.find(rname);
      if (it == rings.end()) throw SyntaxError(line, ring_col, "unknown ring '" + rname + "'");
      build(it->second, line);
      auto [list, col] = sc.rest();
      auto gens = parse_list(it->second.ring, list, line, col);
      s.ideals.emplace(name, Ideal(it->second.ambient, gens));
      s.ideal_order.push_back(name);
      s.ideal_ring[name] = rname;
      s.asserted[name] = config.hyps;
    } else if (cmd == "assert") {
      int name_col = (sc.skip_space(), sc.column());
      std::string name = sc.word("ideal name");
      if (!s.ideals.count(name)) throw SyntaxError(line, name_col, "unknown ideal '" + name + "'");
      Hypotheses& h = s.asserted[name];
      if (sc.at_end()) sc.fail("expected a hypothesis");
      while (!sc.at_end()) {
        int col = sc.column();
        auto flag = sc.word("a hypothesis");
        bool v = parse_flag_value(sc, line);
        if (flag == "G_d") h.G_d = v;
        else if (flag == "AN_minus") h.AN_minus = v;
        else if (flag == "depth_RI") h.depth_RI = v;
        else throw SyntaxError(line, col, "unknown hypothesis '" + flag + "'");
      }
    } else if (cmd == "analyze") {
      int name_col = (sc.skip_space(), sc.column());
      AnalyzeCommand c;
      c.ideal = sc.word("ideal name");
      if (!s.ideals.count(c.ideal)) throw SyntaxError(line, name_col, "unknown ideal '" + c.ideal + "'");
      c.seed = config.seed;
      c.trials = config.trials;
      c.cap = config.caps.search;
      c.line = line;
      while (!sc.at_end()) {
        int col = sc.column();
        auto key = sc.word("an option");
        sc.expect('=');
        int vcol = (sc.skip_space(), sc.column());
        auto v = sc.number("a non-negative integer");
        if (key == "seed") {
          c.seed = v;
        } else if (key == "trials" || key == "cap") {
          if (v < 1 || v > 10000) throw SyntaxError(line, vcol, key + " must be between 1 and 10000");
          (key == "trials" ? c.trials : c.cap) = static_cast<int>(v);
        } else {
          throw SyntaxError(line, col, "unknown option '" + key + "'");
        }
      }
      s.commands.push_back(c);
    } else {
      throw SyntaxError(line, cmd_col, "unknown command '" + cmd + "'");
    }
  }
  if (rings.empty()) throw SyntaxError(line == 0 ? 1 : line, 1, "no ring declared");
  for (auto& [name, decl] : rings) {
    build(decl, line);
    s.rings[name] = decl.ambient;
  }
  return s;
}

}  // namespace jst::cli

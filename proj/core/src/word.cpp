#include "fcg/word.hpp"

#include <cctype>

namespace fcg {

Element evaluate(const Group& group, const Word& word) {
  using K = Word::Kind;
  auto arity = [&](std::size_t n) {
    if (word.children.size() != n) throw InputError("malformed word: wrong number of operands");
  };
  switch (word.kind) {
    case K::Leaf:
      if (!word.children.empty()) throw InputError("malformed word: leaf with operands");
      group.require_owned(word.leaf);
      return word.leaf;
    case K::Product: {
      Element acc = group.identity();
      for (const auto& c : word.children) acc = group.multiply(acc, evaluate(group, c));
      return acc;
    }
    case K::Inverse:
      arity(1);
      return group.inverse(evaluate(group, word.children[0]));
    case K::Conjugate:
      arity(2);
      return group.conjugate(evaluate(group, word.children[0]), evaluate(group, word.children[1]));
    case K::Commutator:
      arity(2);
      return group.commutator(evaluate(group, word.children[0]), evaluate(group, word.children[1]));
  }
  throw InputError("malformed word: unknown node kind");
}

std::map<std::string, Element> generator_table(const Group& group) {
  std::map<std::string, Element> out;
  auto names = group.generator_names();
  auto gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) out.emplace(names[i], gens[i]);
  return out;
}

namespace {

class Parser {
public:
  Parser(const std::string& s, const std::map<std::string, Element>& names) : s_(s), names_(names) {}

  Word parse() {
    Word w = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("cannot parse word \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Word expr() {
    std::vector<Word> factors{term()};
    while (eat('*')) factors.push_back(term());
    return factors.size() == 1 ? std::move(factors[0]) : Word::product(std::move(factors));
  }

  Word term() {
    Word base = atom();
    while (eat('^')) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        bool negative = s_[pos_] == '-';
        if (negative) ++pos_;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        long long n = std::stoll(s_.substr(start, pos_ - start));
        Word unit = negative ? Word::inverse(std::move(base)) : std::move(base);
        std::vector<Word> copies(static_cast<std::size_t>(n), unit);
        base = Word::product(std::move(copies));
      } else {
        base = Word::conjugate(std::move(base), atom());
      }
    }
    return base;
  }

  Word atom() {
    skip();
    if (eat('(')) {
      Word w = expr();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (eat('[')) {
      Word a = expr();
      if (!eat(',')) fail("expected ','");
      Word b = expr();
      if (!eat(']')) fail("expected ']'");
      return Word::commutator(std::move(a), std::move(b));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a generator name");
    std::string name = s_.substr(start, pos_ - start);
    auto it = names_.find(name);
    if (it != names_.end()) return Word::element(it->second);
    if (name == "e" || name == "1") return Word::product({});
    fail("unknown generator '" + name + "'");
  }

  const std::string& s_;
  const std::map<std::string, Element>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::map<std::string, Element>& names) {
  return Parser(text, names).parse();
}

}  // namespace fcg

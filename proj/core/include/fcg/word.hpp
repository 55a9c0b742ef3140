#pragma once

#include <map>
#include <string>
#include <vector>

#include "fcg/group.hpp"

namespace fcg {

/// Expression over group elements.
struct Word {
  enum class Kind { Leaf, Product, Inverse, Conjugate, Commutator };

  Kind kind = Kind::Product;  // an empty product is the identity
  Element leaf;
  std::vector<Word> children;

  static Word element(Element e) { return Word{Kind::Leaf, std::move(e), {}}; }
  static Word product(std::vector<Word> factors) { return Word{Kind::Product, {}, std::move(factors)}; }
  static Word inverse(Word w) { return Word{Kind::Inverse, {}, {std::move(w)}}; }
  /// g^h = h^-1 g h
  static Word conjugate(Word g, Word h) { return Word{Kind::Conjugate, {}, {std::move(g), std::move(h)}}; }
  /// [g, h] = g^-1 h^-1 g h
  static Word commutator(Word g, Word h) { return Word{Kind::Commutator, {}, {std::move(g), std::move(h)}}; }
};

/// Throws InputError on malformed words or leaves from another backend.
Element evaluate(const Group& group, const Word& word);

/// Parses  expr := term ('*' term)* ; term := atom ('^' (int | atom))* ;
/// atom := name | 'e' | '(' expr ')' | '[' expr ',' expr ']'.
/// x^n is a power, x^y a conjugation.
Word parse_word(const std::string& text, const std::map<std::string, Element>& names);

/// Name table for a group: its named generators.
std::map<std::string, Element> generator_table(const Group& group);

}  // namespace fcg

#pragma once

#include <random>
#include <string>
#include <vector>

#include "fcg/io.hpp"
#include "fcg/word.hpp"

namespace fcg::test {

inline io::GroupFile fixture(const std::string& name) { return io::load_fixture(name); }

inline Element word(const Group& g, const std::string& text) {
  return evaluate(g, parse_word(text, generator_table(g)));
}

inline Subgroup sub(const Group& g, const std::vector<std::string>& words) {
  std::vector<Element> gens;
  for (const auto& w : words) gens.push_back(word(g, w));
  return Subgroup::generate(g, gens);
}

inline Element affine(const Group& g, Vector t, const std::string& finite = "e") {
  const Element f = word(g, finite);
  return g.affine_element(std::move(t), f.affine().finite);
}

/// Z^n with trivial finite part.
inline Group free_abelian(std::size_t n) {
  AffineDescriptor d;
  d.rank = n;
  d.finite_part.degree = 1;
  return Group::affine(d, "Z" + std::to_string(n));
}

/// Product of `length` random generators or inverses.
inline Element random_word(const Group& g, const std::vector<Element>& gens, std::size_t length, std::mt19937_64& rng) {
  Element x = g.identity();
  if (gens.empty()) return x;
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t k = pick(rng);
    const Element& s = gens[k / 2];
    x = g.multiply(x, k % 2 ? g.inverse(s) : s);
  }
  return x;
}

}  // namespace fcg::test

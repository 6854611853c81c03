#include "knotsig/braid.hpp"

#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "knotsig/algebra.hpp"
#include "knotsig/errors.hpp"

namespace knotsig {

Coloring::Coloring(std::vector<int> c, int mu_) : entries(std::move(c)), mu(mu_) {
  int top = 1;
  for (int x : entries) {
    if (x == 0) throw ParseError("color 0 is not allowed");
    top = std::max(top, x < 0 ? -x : x);
  }
  if (mu == 0) mu = top;
  if (top > mu) throw ParseError(fmt::format("color {} exceeds mu = {}", top, mu));
}

Coloring Coloring::parse(const std::string& text, int mu) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      throw ParseError(fmt::format("bad color '{}'", item));
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw ParseError(fmt::format("bad color '{}'", item));
    c.push_back(v);
  }
  if (c.empty()) throw ParseError("empty coloring");
  return Coloring(std::move(c), mu);
}

std::string Coloring::to_string() const {
  std::string s;
  for (size_t j = 0; j < entries.size(); ++j) s += (j ? "," : "") + std::to_string(entries[j]);
  return s;
}

BraidWord::BraidWord(Coloring bottom, std::vector<Letter> letters)
    : bottom_(std::move(bottom)), letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index >= bottom_.size())
      throw ParseError(fmt::format("letter {} out of range for {} strands", l.index, bottom_.size()));
    if (l.sign != 1 && l.sign != -1) throw ParseError("letter sign must be +1 or -1");
  }
}

std::vector<Letter> BraidWord::parse_letters(const std::string& text) {
  std::vector<Letter> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      throw ParseError(fmt::format("bad letter '{}'", tok));
    }
    if (used != tok.size() || v == 0) throw ParseError(fmt::format("bad letter '{}'", tok));
    out.push_back({v < 0 ? -v : v, v < 0 ? -1 : 1});
  }
  return out;
}

BraidWord BraidWord::parse(const std::string& word, const std::string& colors, int mu) {
  return BraidWord(Coloring::parse(colors, mu), parse_letters(word));
}

Coloring BraidWord::coloring_at(int level) const {
  Coloring c = bottom_;
  for (int p = 0; p < level; ++p) {
    int i = letters_.at(p).index - 1;
    std::swap(c.entries[i], c.entries[i + 1]);
  }
  return c;
}

std::vector<int> BraidWord::permutation() const {
  // at[k] = bottom strand currently at position k
  std::vector<int> at(strands());
  std::iota(at.begin(), at.end(), 0);
  for (const Letter& l : letters_) std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> perm(strands());
  for (int k = 0; k < strands(); ++k) perm[at[k]] = k;
  return perm;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (size_t p = 0; p < letters_.size(); ++p)
    s += (p ? " " : "") + std::to_string(letters_[p].sign * letters_[p].index);
  return s;
}

std::vector<int> ell(const Coloring& c) {
  std::vector<int> l(c.mu, 0);
  for (int j = 0; j < c.size(); ++j) l[c.color(j) - 1] += c.sign(j);
  return l;
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (!(w1.top() == w2.bottom()))
    throw ColoringMismatch(fmt::format("cannot compose: top {} vs bottom {}", w1.top().to_string(),
                                       w2.bottom().to_string()));
  std::vector<Letter> l = w1.letters();
  l.insert(l.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.bottom(), std::move(l));
}

BraidWord reflect(const BraidWord& w) {
  std::vector<Letter> l(w.letters().rbegin(), w.letters().rend());
  for (Letter& x : l) x.sign = -x.sign;
  return BraidWord(w.top(), std::move(l));
}

BraidWord disjoint_union(const BraidWord& w, const std::vector<int>& extra_colors) {
  std::vector<int> c = w.bottom().entries;
  c.insert(c.end(), extra_colors.begin(), extra_colors.end());
  return BraidWord(Coloring(std::move(c), w.bottom().mu), w.letters());
}

std::vector<ClosureComponent> closure_components(const BraidWord& w) {
  if (!w.is_endomorphism()) throw NotEndomorphism("closure of a non-endomorphism");
  std::vector<int> perm = w.permutation();
  std::vector<bool> seen(perm.size(), false);
  std::vector<ClosureComponent> out;
  for (int s = 0; s < w.strands(); ++s) {
    if (seen[s]) continue;
    ClosureComponent comp;
    comp.id = static_cast<int>(out.size());
    comp.color = w.bottom().entries[s];
    for (int x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      comp.strands.push_back(x);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

BraidWord pad_for_admissibility(const BraidWord& w, const TorusPoint& omega) {
  const Coloring& c = w.bottom();
  if (omega.num_vars() != c.mu) throw DimensionMismatch("torus point and coloring disagree on mu");
  std::vector<int> l = ell(c);
  std::vector<int> extra;
  for (int i = 0; i < c.mu; ++i) {
    long long k = omega.order(i);
    int m = 0;
    while (l[i] + m == 0 || std::gcd(static_cast<long long>(std::abs(l[i] + m)), k) != 1) ++m;
    extra.insert(extra.end(), m, i + 1);
  }
  return disjoint_union(w, extra);
}

}  // namespace knotsig

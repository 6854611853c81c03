#pragma once

#include <string>
#include <vector>

namespace knotsig {

class TorusPoint;

// Signed colors c_j in {+-1, ..., +-mu}; the sign is the strand orientation.
struct Coloring {
  std::vector<int> entries;
  int mu = 1;

  Coloring() = default;
  // mu = 0 infers the number of colors from the largest |c_j|.
  explicit Coloring(std::vector<int> c, int mu = 0);

  // "1,1,-2"
  static Coloring parse(const std::string& text, int mu = 0);

  int size() const { return static_cast<int>(entries.size()); }
  int color(int j) const { return entries.at(j) < 0 ? -entries.at(j) : entries.at(j); }
  int sign(int j) const { return entries.at(j) < 0 ? -1 : 1; }
  std::string to_string() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// sigma_index^sign, index counted from 1.
struct Letter {
  int index = 1;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(Coloring bottom, std::vector<Letter> letters);

  // "1 -2 1" means sigma_1 sigma_2^-1 sigma_1.
  static std::vector<Letter> parse_letters(const std::string& text);
  static BraidWord parse(const std::string& word, const std::string& colors, int mu = 0);
  static BraidWord identity(Coloring c) { return BraidWord(std::move(c), {}); }

  const Coloring& bottom() const { return bottom_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int strands() const { return bottom_.size(); }
  int length() const { return static_cast<int>(letters_.size()); }

  // Coloring seen just below letter `level` (level = length() gives the top).
  Coloring coloring_at(int level) const;
  Coloring top() const { return coloring_at(length()); }
  bool is_endomorphism() const { return top() == bottom_; }

  // perm[s] = top position of the strand starting at bottom position s.
  std::vector<int> permutation() const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  Coloring bottom_;
  std::vector<Letter> letters_;
};

std::vector<int> ell(const Coloring& c);

BraidWord compose(const BraidWord& w1, const BraidWord& w2);
BraidWord reflect(const BraidWord& w);

// Strands appended on the right, letters unchanged.
BraidWord disjoint_union(const BraidWord& w, const std::vector<int>& extra_colors);

struct ClosureComponent {
  int id = 0;
  int color = 0;  // signed color shared by every strand of the component
  std::vector<int> strands;
};

std::vector<ClosureComponent> closure_components(const BraidWord& w);

BraidWord pad_for_admissibility(const BraidWord& w, const TorusPoint& omega);

}  // namespace knotsig

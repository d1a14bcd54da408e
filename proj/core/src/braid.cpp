#include "braidrot/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidrot {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::compose_after(const Permutation& first) const {
  Permutation out;
  out.images.resize(images.size());
  for (int i = 1; i <= n(); ++i) out.images[i - 1] = apply(first.apply(i));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (int i = 1; i <= n(); ++i) out.images[apply(i) - 1] = i;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (apply(i) != i) return false;
  return true;
}

bool Permutation::is_single_cycle() const {
  int len = 0;
  int at = 1;
  do {
    at = apply(at);
    ++len;
  } while (at != 1 && len <= n());
  return len == n();
}

BraidWord parse_braid(const std::string& text, int n) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  BraidWord w;
  w.n = n;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed braid letter: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("malformed braid letter: '" + tok + "'");
    if (g == 0) throw std::invalid_argument("braid letters must be nonzero");
    if (std::abs(g) > n - 1)
      throw std::invalid_argument("letter " + tok + " out of range for " + std::to_string(n) +
                                  " strands");
    w.letters.push_back(g);
  }
  return w;
}

std::string braid_to_string(const BraidWord& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << w.letters[i];
  }
  return out.str();
}

Permutation closure_permutation(const BraidWord& w) {
  // row_strand[r-1] = starting row of the strand currently at row r.
  std::vector<int> row_strand(w.n);
  std::iota(row_strand.begin(), row_strand.end(), 1);
  for (int g : w.letters) {
    int a = std::abs(g);
    std::swap(row_strand[a - 1], row_strand[a]);
  }
  Permutation p;
  p.images.resize(w.n);
  for (int r = 1; r <= w.n; ++r) p.images[row_strand[r - 1] - 1] = r;
  return p;
}

bool is_knot(const BraidWord& w) { return closure_permutation(w).is_single_cycle(); }

BraidWord delta_word(int n) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  BraidWord w;
  w.n = n;
  for (int len = n - 1; len >= 1; --len)
    for (int i = 1; i <= len; ++i) w.letters.push_back(i);
  return w;
}

BraidWord reverse(const BraidWord& w) {
  BraidWord out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

BraidWord flip(const BraidWord& w) {
  BraidWord out = w;
  for (int& g : out.letters) g = (g > 0 ? w.n - g : -(w.n + g));
  return out;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& u) {
  if (w.n != u.n) throw std::invalid_argument("conjugation requires equal strand counts");
  BraidWord out;
  out.n = w.n;
  out.letters = u.letters;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord rotate(const BraidWord& w, int k) {
  BraidWord out = w;
  if (w.letters.empty()) return out;
  k = ((k % w.length()) + w.length()) % w.length();
  std::rotate(out.letters.begin(), out.letters.begin() + k, out.letters.end());
  return out;
}

namespace {

// Lexicographically smallest reduced word for the permutation images:
// repeatedly emit the smallest right descent.
std::vector<int> lex_min_reduced_word(std::vector<int> images) {
  std::vector<int> word;
  const int n = static_cast<int>(images.size());
  for (;;) {
    int g = 0;
    for (int i = 1; i < n; ++i) {
      if (images[i - 1] > images[i]) {
        g = i;
        break;
      }
    }
    if (g == 0) break;
    word.push_back(g);
    std::swap(images[g - 1], images[g]);
  }
  return word;
}

}  // namespace

BraidWord cable(const BraidWord& w, int k, bool add_twist) {
  if (k < 1) throw std::invalid_argument("cable multiplicity must be at least 1");
  BraidWord out;
  out.n = w.n * k;

  // Per generator index, the reduced word of the bundle block transposition:
  // bundle i = rows (i-1)k+1 .. ik crosses bundle i+1 as a rigid ribbon.
  std::vector<std::vector<int>> block(w.n);  // index i-1 -> word
  for (int i = 1; i <= w.n - 1; ++i) {
    std::vector<int> images(out.n);
    std::iota(images.begin(), images.end(), 1);
    int base = (i - 1) * k;
    for (int j = 1; j <= k; ++j) {
      images[base + j - 1] = base + k + j;
      images[base + k + j - 1] = base + j;
    }
    block[i - 1] = lex_min_reduced_word(std::move(images));
  }

  for (int g : w.letters) {
    int i = std::abs(g);
    for (int b : block[i - 1]) out.letters.push_back(g > 0 ? b : -b);
  }
  if (add_twist)
    for (int i = 1; i <= out.n - 1; ++i) out.letters.push_back(i);
  return out;
}

}  // namespace braidrot

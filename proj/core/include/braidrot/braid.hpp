#pragma once

#include <string>
#include <vector>

namespace braidrot {

// A word in the braid group B_n. Letters are signed generator indices:
// +g is the positive crossing of strands g, g+1 and -g its inverse,
// with 1 <= g <= n-1. Words are stored non-cyclically; the closure and all
// cyclic structure live in the loop and Gauss modules.
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

// A bijection of {1..n}; images[i-1] is the image of i.
struct Permutation {
  std::vector<int> images;

  int n() const { return static_cast<int>(images.size()); }
  int apply(int i) const { return images[i - 1]; }
  static Permutation identity(int n);
  Permutation compose_after(const Permutation& first) const;  // this ∘ first
  Permutation inverse() const;
  bool is_identity() const;
  // True iff the permutation is one n-cycle.
  bool is_single_cycle() const;
  bool operator==(const Permutation&) const = default;
};

// Parses a whitespace-separated list of signed nonzero generator indices.
// Throws std::invalid_argument on zero letters, out-of-range indices (|g| > n-1),
// malformed tokens, or n < 2.
BraidWord parse_braid(const std::string& text, int n);

std::string braid_to_string(const BraidWord& w);

// The permutation obtained by composing the transpositions (|g|, |g|+1)
// of every letter in word order: start row -> end row of each strand.
Permutation closure_permutation(const BraidWord& w);

// True iff the closure of w in the solid torus is a knot,
// i.e. closure_permutation(w) is a single n-cycle.
bool is_knot(const BraidWord& w);

// The positive half-twist word (s1 s2 .. s_{n-1})(s1 .. s_{n-2})..(s1),
// of length n(n-1)/2. Its permutation is the order reversal i -> n+1-i.
BraidWord delta_word(int n);

// Letters in reversed order, signs and indices unchanged (the braid read
// backwards; the closure is the reversed-orientation companion).
BraidWord reverse(const BraidWord& w);

// Each letter ±s_i becomes ±s_{n-i} (the flip across the braid axis).
BraidWord flip(const BraidWord& w);

// u · w · u^{-1}, with u^{-1} the reversed letters with negated signs.
// No free reduction is performed. Requires w.n == u.n.
BraidWord conjugate(const BraidWord& w, const BraidWord& u);

// Rotate the word left by k letters (letters[k] becomes first).
BraidWord rotate(const BraidWord& w, int k);

// Replace every strand by k parallel strands. Each letter ±s_i becomes the
// block-transposition word crossing the two adjacent bundles of k strands
// as rigid ribbons: k^2 crossings of the letter's sign and no intra-bundle
// crossings, using the lexicographically earliest valid generator order.
// If add_twist, the positive permutation word s1 s2 .. s_{kn-1} is appended,
// making the closure of a cabled knot a knot again. Requires k >= 1.
BraidWord cable(const BraidWord& w, int k, bool add_twist);

}  // namespace braidrot

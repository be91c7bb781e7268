#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "trigroup/core.hpp"

namespace trigroup {

using HighReal = boost::multiprecision::cpp_bin_float_50;

/// Sequence of generators, written left to right and acting right to left
/// on column vectors (the last letter is applied first).
struct Word {
  std::vector<GeneratorIndex> letters;

  std::size_t length() const { return letters.size(); }
  /// "S4S3S2S1", or "I" for the empty word.
  std::string str() const;
  bool operator==(const Word&) const = default;
};

/// Compact fixed-width images used inside the breadth-first searches.
using PackedMatrix = std::array<std::int64_t, 16>;
using PackedVector = std::array<std::int64_t, 4>;

IntMatrix4 unpack(const PackedMatrix& m);
Vec4 unpack(const PackedVector& v);

/// Default element cap: TRIGROUP_MAX_ELEMENTS if set, otherwise 20 million.
std::size_t default_element_cap();

struct SearchOptions {
  std::size_t element_cap = default_element_cap();
  /// Threads used to expand a layer; layer contents do not depend on it.
  unsigned workers = 1;
};

struct GroupElement {
  PackedMatrix matrix;
  Word word;  // a minimal-length word; lexicographically first among those discovered
};

/// Layered breadth-first closure of the identity under right multiplication
/// by the chosen generators, with exact matrix deduplication.
struct ElementSearch {
  /// layer_sizes[n] = number of distinct elements of word length n.
  std::vector<std::uint64_t> layer_sizes;
  /// Populated only when requested; layers[n] sorted by matrix.
  std::vector<std::vector<GroupElement>> layers;

  std::uint64_t cumulative(std::size_t depth) const;
};

/// Throws ResourceLimit when more than options.element_cap elements are stored.
ElementSearch bfs_elements(std::size_t max_depth, const SearchOptions& options = {},
                           bool keep_elements = false);

/// Same search restricted to a subset of generators.
ElementSearch bfs_subgroup(const std::vector<GeneratorIndex>& generators, std::size_t max_depth,
                           const SearchOptions& options = {}, bool keep_elements = false);

/// Streaming count of elements by length: w S_i is a new element of length
/// n+1 exactly when column i of w is nonnegative, and it is counted from its
/// smallest right descent only. Memory is O(depth).
std::vector<std::uint64_t> count_elements_by_descent(std::size_t max_depth);

/// G_0 = 1, G_1 = 4, G_2 = 12, G_n = 2G_{n-1} + 2G_{n-2} - 3G_{n-3}.
Integer growth_recurrence(std::size_t n);

struct OrbitSearch {
  /// cumulative_sizes[n] = |W_n r|, distinct vectors reachable within n steps.
  std::vector<std::uint64_t> cumulative_sizes;
  /// layers[n] = vectors first reached at step n, sorted.
  std::vector<std::vector<PackedVector>> layers;

  std::vector<Quadruple> all() const;
};

struct OrbitOptions {
  SearchOptions search;
  /// If set, vectors with a^2+b^2+c^2+d^2 above this are not expanded or kept.
  std::optional<std::int64_t> height_squared_bound;
};

OrbitSearch orbit_vectors(const Quadruple& root, std::size_t max_depth, const OrbitOptions& options = {});

struct StabilizerCounts {
  std::vector<std::uint64_t> layer_sizes;
  std::uint64_t cumulative(std::size_t length) const;
};

/// Growth of the subgroup generated by S2, S3, S4 (stabilizer of (0,x,x,x)).
StabilizerCounts stabilizer_counts(std::size_t max_n, const SearchOptions& options = {});

/// 6n^2 + 3n + 1, the element count of the stabilizer up to length 2n.
std::uint64_t stabilizer_closed_form(std::uint64_t n);

/// R_i (S4S3S2S1)^m for n = 4m + i, with R_0..R_3 = I, S1, S2S1, S3S2S1.
Word extremal_word(std::size_t n);

Quadruple apply_word(const Word& word, const Quadruple& q);
IntMatrix4 word_matrix(const Word& word);

/// Largest entry of word applied to root.
Integer word_norm(const Word& word, const Quadruple& root);

struct NormMaximum {
  Integer max_norm;
  Word attained_by;
  /// Number of distinct length-n elements reaching max_norm.
  std::size_t maximizers = 0;
};

/// Exhaustive maximum of the image norm over every element of length exactly n.
NormMaximum max_norm_over_reduced_words(std::size_t n, const Quadruple& root,
                                        const SearchOptions& options = {});

/// Characteristic polynomial coefficients, leading first: det(tI - M).
std::array<Integer, 5> characteristic_polynomial(const IntMatrix4& m);
std::array<Integer, 5> char_poly_s4321();

struct SpectralRadius {
  Rational lower;
  Rational upper;
  HighReal value() const;
};

/// Largest real root of char_poly_s4321, bracketed by exact-sign bisection to
/// a width below 2^-bits.
SpectralRadius spectral_radius(unsigned bits = 64);

/// (1/4)(7 + sqrt13 + 2 sqrt(75/2 + 21 sqrt13 / 2)), the expression as it is
/// usually quoted. It evaluates to about 6.9918 and is not a root of
/// char_poly_s4321.
HighReal gamma_closed_form_as_printed();

/// (1/4)(7 + 3 sqrt13 + 2 sqrt(75/2 + 21 sqrt13 / 2)): with u = t + 1/t the
/// palindromic quartic becomes u^2 - 7u - 17 = 0, so u = (7 + 3 sqrt13)/2 and
/// t = (u + sqrt(u^2 - 4))/2.
HighReal gamma_closed_form();

/// (1 + sqrt13) / 2.
HighReal growth_rate_lambda();

/// Prime factors with multiplicity of a*b*c*d; nothing when an entry is zero.
std::optional<unsigned> alpha(const Quadruple& q);

/// Canonical primitive quadruples with height <= height_bound and alpha <= k.
std::vector<Quadruple> search_small_alpha(std::int64_t height_bound, unsigned k);

struct GrowthRow {
  std::size_t depth;
  std::uint64_t bfs_layer;      // G_n from the hashing search
  Integer recurrence;           // the three-term recurrence value
  std::uint64_t descent_layer;  // G_n from the descent enumerator
  std::uint64_t cumulative;     // |W_n|
  std::uint64_t orbit_size;     // |W_n r|
};

std::vector<GrowthRow> growth_table(std::size_t max_depth, const Quadruple& root,
                                    const SearchOptions& options = {});

}  // namespace trigroup

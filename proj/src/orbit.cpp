#include "trigroup/orbit.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

#include "trigroup/counting.hpp"
#include "trigroup/factorize.hpp"
#include "trigroup/reduction.hpp"

namespace trigroup {

namespace {

struct ParentLink {
  std::uint32_t parent;
  std::uint8_t letter;  // index into the search's letter list
};

template <typename Key>
struct Candidate {
  Key key;
  ParentLink link;
  auto operator<=>(const Candidate& o) const {
    if (auto c = key <=> o.key; c != 0) return c;
    if (auto c = link.parent <=> o.link.parent; c != 0) return c;
    return link.letter <=> o.link.letter;
  }
  bool operator==(const Candidate&) const = default;
};

template <typename Key>
struct LayeredResult {
  std::vector<std::vector<Key>> layers;
  std::vector<std::vector<ParentLink>> links;  // links[n][k] for layers[n][k]
};

// Layer-synchronous search. Each layer is merged, sorted and deduplicated
// before the next one is expanded, so the contents do not depend on workers.
template <typename Key, typename Step>
LayeredResult<Key> layered_search(const Key& start, std::size_t max_depth, std::size_t letters,
                                  const Step& step, const SearchOptions& options) {
  LayeredResult<Key> out;
  out.layers.push_back({start});
  out.links.push_back({ParentLink{0, 0}});
  std::size_t stored = 1;
  auto seen = [&](const Key& k) {
    for (const auto& layer : out.layers)
      if (std::binary_search(layer.begin(), layer.end(), k)) return true;
    return false;
  };

  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const auto& frontier = out.layers.back();
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(frontier.size())));
    std::vector<std::vector<Candidate<Key>>> partial(workers);
    auto expand = [&](unsigned w) {
      const std::size_t lo = frontier.size() * w / workers;
      const std::size_t hi = frontier.size() * (w + 1) / workers;
      auto& sink = partial[w];
      for (std::size_t idx = lo; idx < hi; ++idx)
        for (std::size_t letter = 0; letter < letters; ++letter) {
          std::optional<Key> next = step(frontier[idx], letter);
          if (!next) continue;
          sink.push_back({*next, {static_cast<std::uint32_t>(idx), static_cast<std::uint8_t>(letter)}});
        }
      std::sort(sink.begin(), sink.end());
    };
    if (workers == 1) {
      expand(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(expand, w);
      for (auto& t : pool) t.join();
    }

    std::vector<Candidate<Key>> merged;
    for (auto& p : partial) {
      merged.insert(merged.end(), p.begin(), p.end());
      p.clear();
      p.shrink_to_fit();
    }
    std::sort(merged.begin(), merged.end());

    std::vector<Key> layer;
    std::vector<ParentLink> links;
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if (k > 0 && merged[k].key == merged[k - 1].key) continue;
      if (seen(merged[k].key)) continue;
      layer.push_back(merged[k].key);
      links.push_back(merged[k].link);
    }
    stored += layer.size();
    if (stored > options.element_cap)
      throw ResourceLimit("search exceeded element cap of " + std::to_string(options.element_cap) +
                          " at depth " + std::to_string(depth));
    out.layers.push_back(std::move(layer));
    out.links.push_back(std::move(links));
  }
  return out;
}

PackedMatrix pack_identity() {
  PackedMatrix m{};
  for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(5 * i)] = 1;
  return m;
}

// M * S_i: every other column gains column i, then column i is negated.
PackedMatrix right_multiply(const PackedMatrix& m, std::size_t i) {
  PackedMatrix out = m;
  for (std::size_t r = 0; r < 4; ++r) {
    const std::int64_t pivot = m[4 * r + i];
    for (std::size_t c = 0; c < 4; ++c) {
      if (c == i) continue;
      out[4 * r + c] = checked_add(m[4 * r + c], pivot);
    }
    out[4 * r + i] = checked_sub(0, pivot);
  }
  return out;
}

PackedVector reflect(const PackedVector& v, std::size_t i) {
  PackedVector out = v;
  std::int64_t total = checked_add(checked_add(v[0], v[1]), checked_add(v[2], v[3]));
  out[i] = checked_sub(total, checked_mul(2, v[i]));
  return out;
}

PackedVector pack(const Vec4& v) {
  PackedVector out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = to_int64(v[k]);
  return out;
}

Word rebuild_word(const LayeredResult<PackedMatrix>& res, std::size_t depth, std::size_t idx,
                  const std::vector<GeneratorIndex>& generators) {
  std::vector<GeneratorIndex> reversed;
  while (depth > 0) {
    const ParentLink& link = res.links[depth][idx];
    reversed.push_back(generators[link.letter]);
    idx = link.parent;
    --depth;
  }
  return Word{{reversed.rbegin(), reversed.rend()}};
}

bool column_sign(const PackedMatrix& m, std::size_t c, bool nonnegative) {
  for (std::size_t r = 0; r < 4; ++r) {
    const std::int64_t x = m[4 * r + c];
    if (nonnegative ? x < 0 : x > 0) return false;
  }
  return true;
}

void descend(const PackedMatrix& m, std::size_t depth, std::size_t max_depth, std::vector<std::uint64_t>& counts) {
  ++counts[depth];
  if (depth == max_depth) return;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!column_sign(m, i, true)) continue;
    PackedMatrix child = right_multiply(m, i);
    bool smallest = true;
    for (std::size_t j = 0; j < i && smallest; ++j)
      if (column_sign(child, j, false)) smallest = false;
    if (smallest) descend(child, depth + 1, max_depth, counts);
  }
}

}  // namespace

std::string Word::str() const {
  if (letters.empty()) return "I";
  std::string s;
  for (const auto& g : letters) s += "S" + std::to_string(g.value());
  return s;
}

IntMatrix4 unpack(const PackedMatrix& m) {
  IntMatrix4 out;
  for (std::size_t k = 0; k < 16; ++k) out.a[k] = m[k];
  return out;
}

Vec4 unpack(const PackedVector& v) { return Vec4{v[0], v[1], v[2], v[3]}; }

std::size_t default_element_cap() {
  if (const char* env = std::getenv("TRIGROUP_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return 20'000'000;
}

std::uint64_t ElementSearch::cumulative(std::size_t depth) const {
  std::uint64_t total = 0;
  for (std::size_t n = 0; n <= depth && n < layer_sizes.size(); ++n) total += layer_sizes[n];
  return total;
}

ElementSearch bfs_subgroup(const std::vector<GeneratorIndex>& generators, std::size_t max_depth,
                           const SearchOptions& options, bool keep_elements) {
  auto step = [&](const PackedMatrix& m, std::size_t letter) -> std::optional<PackedMatrix> {
    return right_multiply(m, generators[letter].position());
  };
  auto res = layered_search<PackedMatrix>(pack_identity(), max_depth, generators.size(), step, options);
  ElementSearch out;
  for (const auto& layer : res.layers) out.layer_sizes.push_back(layer.size());
  if (keep_elements) {
    out.layers.resize(res.layers.size());
    for (std::size_t d = 0; d < res.layers.size(); ++d)
      for (std::size_t k = 0; k < res.layers[d].size(); ++k)
        out.layers[d].push_back({res.layers[d][k], rebuild_word(res, d, k, generators)});
  }
  return out;
}

ElementSearch bfs_elements(std::size_t max_depth, const SearchOptions& options, bool keep_elements) {
  return bfs_subgroup({GeneratorIndex(1), GeneratorIndex(2), GeneratorIndex(3), GeneratorIndex(4)}, max_depth,
                      options, keep_elements);
}

std::vector<std::uint64_t> count_elements_by_descent(std::size_t max_depth) {
  std::vector<std::uint64_t> counts(max_depth + 1, 0);
  descend(pack_identity(), 0, max_depth, counts);
  return counts;
}

Integer growth_recurrence(std::size_t n) {
  std::array<Integer, 3> seeds = {1, 4, 12};
  if (n < 3) return seeds[n];
  Integer g0 = 1, g1 = 4, g2 = 12;
  for (std::size_t k = 3; k <= n; ++k) {
    Integer next = 2 * g2 + 2 * g1 - 3 * g0;
    g0 = std::move(g1);
    g1 = std::move(g2);
    g2 = std::move(next);
  }
  return g2;
}

std::vector<Quadruple> OrbitSearch::all() const {
  std::vector<Quadruple> out;
  for (const auto& layer : layers)
    for (const auto& v : layer) out.emplace_back(unpack(v));
  return out;
}

OrbitSearch orbit_vectors(const Quadruple& root, std::size_t max_depth, const OrbitOptions& options) {
  using Wide = __int128;
  const PackedVector start = pack(root.entries());
  auto within = [&](const PackedVector& v) {
    if (!options.height_squared_bound) return true;
    Wide h = 0;
    for (auto x : v) h += Wide(x) * x;
    return h <= *options.height_squared_bound;
  };
  if (!within(start)) throw InvalidInput("orbit root lies outside the height bound");
  auto step = [&](const PackedVector& v, std::size_t letter) -> std::optional<PackedVector> {
    PackedVector next = reflect(v, letter);
    if (!within(next)) return std::nullopt;
    return next;
  };
  auto res = layered_search<PackedVector>(start, max_depth, 4, step, options.search);
  OrbitSearch out;
  std::uint64_t total = 0;
  for (auto& layer : res.layers) {
    total += layer.size();
    out.cumulative_sizes.push_back(total);
    out.layers.push_back(std::move(layer));
  }
  return out;
}

std::uint64_t StabilizerCounts::cumulative(std::size_t length) const {
  std::uint64_t total = 0;
  for (std::size_t n = 0; n <= length && n < layer_sizes.size(); ++n) total += layer_sizes[n];
  return total;
}

StabilizerCounts stabilizer_counts(std::size_t max_n, const SearchOptions& options) {
  auto res = bfs_subgroup({GeneratorIndex(2), GeneratorIndex(3), GeneratorIndex(4)}, max_n, options);
  return StabilizerCounts{std::move(res.layer_sizes)};
}

std::uint64_t stabilizer_closed_form(std::uint64_t n) { return 6 * n * n + 3 * n + 1; }

Word extremal_word(std::size_t n) {
  Word w;
  const std::size_t m = n / 4;
  const std::size_t i = n % 4;
  for (std::size_t k = i; k >= 1; --k) w.letters.emplace_back(static_cast<int>(k));
  for (std::size_t r = 0; r < m; ++r)
    for (int k = 4; k >= 1; --k) w.letters.emplace_back(k);
  return w;
}

Quadruple apply_word(const Word& word, const Quadruple& q) {
  Quadruple out = q;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) out = apply_generator(out, *it);
  return out;
}

IntMatrix4 word_matrix(const Word& word) {
  IntMatrix4 m = IntMatrix4::identity();
  for (const auto& g : word.letters) m = m * generator_matrix(g);
  return m;
}

Integer word_norm(const Word& word, const Quadruple& root) { return apply_word(word, root).max(); }

NormMaximum max_norm_over_reduced_words(std::size_t n, const Quadruple& root, const SearchOptions& options) {
  ElementSearch search = bfs_elements(n, options, true);
  NormMaximum best{-1, {}, 0};
  for (const auto& element : search.layers[n]) {
    Vec4 image = unpack(element.matrix).apply(root.entries());
    Integer norm = *std::max_element(image.begin(), image.end());
    if (norm > best.max_norm) {
      best = {norm, element.word, 1};
    } else if (norm == best.max_norm) {
      ++best.maximizers;
    }
  }
  return best;
}

std::array<Integer, 5> characteristic_polynomial(const IntMatrix4& m) {
  // Faddeev-LeVerrier; every division below is exact over the integers.
  std::array<Integer, 5> coeff{};
  coeff[0] = 1;
  IntMatrix4 acc;  // zero
  for (int k = 1; k <= 4; ++k) {
    acc = m * acc + IntMatrix4::identity().scaled(coeff[static_cast<std::size_t>(k - 1)]);
    IntMatrix4 prod = m * acc;
    Integer trace = prod(0, 0) + prod(1, 1) + prod(2, 2) + prod(3, 3);
    coeff[static_cast<std::size_t>(k)] = -trace / k;
  }
  return coeff;
}

std::array<Integer, 5> char_poly_s4321() {
  return characteristic_polynomial(word_matrix(extremal_word(4)));
}

HighReal SpectralRadius::value() const {
  return (HighReal(lower) + HighReal(upper)) / 2;
}

SpectralRadius spectral_radius(unsigned bits) {
  const auto coeff = char_poly_s4321();
  auto eval = [&](const Rational& t) {
    Rational v = 0;
    for (const auto& c : coeff) v = v * t + Rational(c);
    return v;
  };
  // Cauchy bound: every root has modulus below 1 + max |c_k|.
  Integer bound = 0;
  for (std::size_t k = 1; k < coeff.size(); ++k) bound = std::max(bound, Integer(abs(coeff[k])));
  Rational hi(bound + 1);
  Rational lo = hi - 1;
  while (eval(lo) > 0) {
    hi = lo;
    lo -= 1;
  }
  if (eval(lo) == 0) return {lo, lo};
  const Rational width = Rational(1, Integer(1) << bits);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    Rational v = eval(mid);
    if (v == 0) return {mid, mid};
    (v > 0 ? hi : lo) = mid;
  }
  return {lo, hi};
}

HighReal gamma_closed_form_as_printed() {
  using boost::multiprecision::sqrt;
  const HighReal s13 = sqrt(HighReal(13));
  return (HighReal(7) + s13 + 2 * sqrt(HighReal(75) / 2 + 21 * s13 / 2)) / 4;
}

HighReal gamma_closed_form() {
  using boost::multiprecision::sqrt;
  const HighReal s13 = sqrt(HighReal(13));
  return (HighReal(7) + 3 * s13 + 2 * sqrt(HighReal(75) / 2 + 21 * s13 / 2)) / 4;
}

HighReal growth_rate_lambda() { return (1 + boost::multiprecision::sqrt(HighReal(13))) / 2; }

std::optional<unsigned> alpha(const Quadruple& q) {
  unsigned total = 0;
  for (const auto& v : q.entries()) {
    if (v == 0) return std::nullopt;
    for (const auto& [p, e] : factorize(v)) total += e;
  }
  return total;
}

std::vector<Quadruple> search_small_alpha(std::int64_t height_bound, unsigned k) {
  CensusOptions opts;
  opts.mode = CountMode::Canonical;
  opts.primitive_only = true;
  opts.materialize = true;
  CensusReport census = enumerate_all(height_bound, opts);
  std::vector<Quadruple> out;
  for (const auto& q : census.quadruples) {
    auto a = alpha(q);
    if (a && *a <= k) out.push_back(q);
  }
  return out;
}

std::vector<GrowthRow> growth_table(std::size_t max_depth, const Quadruple& root, const SearchOptions& options) {
  ElementSearch elements = bfs_elements(max_depth, options);
  std::vector<std::uint64_t> descent = count_elements_by_descent(max_depth);
  OrbitOptions orbit_opts;
  orbit_opts.search = options;
  OrbitSearch orbit = orbit_vectors(root, max_depth, orbit_opts);
  std::vector<GrowthRow> rows;
  for (std::size_t n = 0; n <= max_depth; ++n)
    rows.push_back({n, elements.layer_sizes[n], growth_recurrence(n), descent[n], elements.cumulative(n),
                    orbit.cumulative_sizes[n]});
  return rows;
}

}  // namespace trigroup

#include "trigroup/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigroup/core.hpp"
#include "trigroup/counting.hpp"
#include "trigroup/eisenstein.hpp"
#include "trigroup/lie_verify.hpp"
#include "trigroup/orbit.hpp"
#include "trigroup/reduction.hpp"
#include "trigroup/simplex.hpp"

namespace trigroup::cli {

namespace {

using nlohmann::json;

// Integers beyond 2^53 are written as strings so JSON readers keep them exact.
json to_json(const Integer& n) {
  static const Integer kSafe = Integer(1) << 53;
  if (n <= kSafe && n >= -kSafe) return static_cast<std::int64_t>(n);
  return n.str();
}

json to_json(const Vec4& v) { return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2]), to_json(v[3])}); }
json to_json(const Quadruple& q) { return to_json(q.entries()); }
json to_json(const Rational& r) { return to_string(r); }

json to_json(const SimplexTuple& t) {
  json entries = json::array();
  for (const auto& a : t.entries) entries.push_back(to_json(a));
  return {{"n", t.n}, {"entries", entries}};
}

json optional_ratio(const std::optional<double>& r) { return r ? json(*r) : json(nullptr); }

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

Vec4 parse_vec4(const std::vector<std::string>& parts) {
  if (parts.size() != 4) throw InvalidInput("expected four integers");
  return Vec4{parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]), parse_integer(parts[3])};
}

Quadruple parse_quadruple(const std::vector<std::string>& parts) { return Quadruple(parse_vec4(parts)); }

std::int64_t parse_bound(const std::string& text) {
  Integer v = parse_integer(text);
  if (v < 1) throw InvalidInput("bound must be a positive integer");
  if (v > std::numeric_limits<std::int64_t>::max()) throw InvalidInput("bound too large");
  return static_cast<std::int64_t>(v);
}

Rational parse_json_rational(const json& j) {
  if (j.is_array() && j.size() == 2) {
    auto part = [](const json& x) {
      return x.is_string() ? parse_integer(x.get<std::string>()) : Integer(x.get<std::int64_t>());
    };
    Integer den = part(j[1]);
    if (den == 0) throw InvalidInput("zero denominator in configuration");
    return Rational(part(j[0]), den);
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("rational must be [numerator, denominator], an integer, or a string");
}

RationalVector parse_json_vector(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(parse_json_rational(x));
  return v;
}

PointConfiguration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open configuration file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed configuration JSON: ") + e.what());
  }
  try {
    PointConfiguration cfg;
    cfg.n = j.at("n").get<std::size_t>();
    if (j.contains("metric")) {
      for (const auto& row : j.at("metric")) cfg.metric.push_back(parse_json_vector(row));
    } else {
      cfg.metric.assign(cfg.n, RationalVector(cfg.n, 0));
      for (std::size_t i = 0; i < cfg.n; ++i) cfg.metric[i][i] = 1;
    }
    for (const auto& v : j.at("vertices")) cfg.vertices.push_back(parse_json_vector(v));
    cfg.point = parse_json_vector(j.at("point"));
    return cfg;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("configuration is missing fields: ") + e.what());
  }
}

SimplexTuple parse_simplex_tuple(std::size_t n, const std::vector<std::string>& parts) {
  RationalVector entries;
  for (const auto& p : parts) entries.push_back(parse_rational(p));
  return SimplexTuple(n, std::move(entries));
}

json ledger_json(const std::vector<LedgerLine>& lines) {
  json arr = json::array();
  for (const auto& l : lines) {
    json item = {{"identity", l.identity}, {"pass", l.pass}};
    if (!l.detail.empty()) item["detail"] = l.detail;
    arr.push_back(item);
  }
  return arr;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  unsigned workers = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the triangle group acting on triangle quadruples"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_option("--workers", ctx.workers, "Threads for layer expansion and censuses (output is identical)")
      ->check(CLI::Range(1u, 256u));

  std::function<int()> action;

  // check
  std::vector<std::string> check_args;
  auto* check = app.add_subcommand("check", "Test the defining equation 3(a^2+b^2+c^2+d^2) = (a+b+c+d)^2");
  check->add_option("entries", check_args, "a b c d")->expected(4)->required();
  check->callback([&] {
    action = [&] {
      Vec4 v = parse_vec4(check_args);
      emit(out, {{"input", to_json(v)}, {"triangle_quadruple", is_triangle_quadruple(v)}, {"q_form", to_json(q_form(v))}});
      return kExitOk;
    };
  });

  // reduce
  std::vector<std::string> reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Sum-reducing path to the root quadruple (0,x,x,x), x the gcd");
  reduce->add_option("entries", reduce_args, "a b c d")->expected(4)->required();
  reduce->callback([&] {
    action = [&] {
      ReductionTrace trace = reduce_to_root(parse_quadruple(reduce_args));
      json steps = json::array();
      for (const auto& s : trace.steps) steps.push_back({{"generator", s.generator.value()}, {"after", to_json(s.after)}});
      emit(out, {{"start", to_json(trace.start)},
                 {"steps", steps},
                 {"root", to_json(trace.root)},
                 {"gcd", to_json(gcd_content(trace.start))},
                 {"length", trace.length()}});
      return kExitOk;
    };
  });

  // orbit
  std::vector<std::string> orbit_args;
  std::size_t orbit_depth = 5;
  std::string orbit_height;
  bool orbit_list = false;
  auto* orbit = app.add_subcommand("orbit", "Breadth-first orbit of a quadruple under the four reflections");
  orbit->add_option("entries", orbit_args, "a b c d")->expected(4)->required();
  orbit->add_option("--depth", orbit_depth, "Maximum word length");
  orbit->add_option("--max-height", orbit_height, "Discard vectors with height above this");
  orbit->add_flag("--list", orbit_list, "Print every vector as a JSON line");
  orbit->callback([&] {
    action = [&] {
      OrbitOptions opts;
      opts.search.workers = ctx.workers;
      if (!orbit_height.empty()) {
        std::int64_t h = parse_bound(orbit_height);
        opts.height_squared_bound = checked_mul(h, h);
      }
      OrbitSearch res = orbit_vectors(parse_quadruple(orbit_args), orbit_depth, opts);
      if (orbit_list) {
        for (std::size_t d = 0; d < res.layers.size(); ++d)
          for (const auto& v : res.layers[d]) emit(out, {{"depth", d}, {"quadruple", to_json(unpack(v))}});
      } else {
        emit(out, {{"root", to_json(parse_vec4(orbit_args))}, {"depth", orbit_depth}, {"sizes", res.cumulative_sizes}});
      }
      return kExitOk;
    };
  });

  // growth
  std::size_t growth_depth = 8;
  std::vector<std::string> growth_root = {"0", "1", "1", "1"};
  bool growth_descent_only = false;
  auto* growth = app.add_subcommand("growth", "Growth coefficients: hashing search, descent enumerator and recurrence");
  growth->add_option("--depth", growth_depth, "Maximum word length");
  growth->add_option("--root", growth_root, "Root quadruple for |W_n r|")->expected(4);
  growth->add_flag("--descent-only", growth_descent_only, "Skip the hashing search (reaches deeper)");
  growth->callback([&] {
    action = [&] {
      if (growth_descent_only) {
        auto counts = count_elements_by_descent(growth_depth);
        json rows = json::array();
        std::uint64_t total = 0;
        for (std::size_t n = 0; n < counts.size(); ++n) {
          total += counts[n];
          rows.push_back(json::array({n, counts[n], to_json(growth_recurrence(n)), total}));
        }
        emit(out, {{"columns", {"depth", "G_n", "recurrence", "W_n"}}, {"rows", rows}});
        return kExitOk;
      }
      SearchOptions opts;
      opts.workers = ctx.workers;
      auto table = growth_table(growth_depth, parse_quadruple(growth_root), opts);
      json rows = json::array();
      for (const auto& r : table)
        rows.push_back(json::array({r.depth, r.bfs_layer, to_json(r.recurrence), r.cumulative, r.orbit_size, r.descent_layer}));
      emit(out, {{"columns", {"depth", "G_n", "recurrence", "W_n", "W_n_r", "G_n_descent"}}, {"rows", rows}});
      return kExitOk;
    };
  });

  // censuses
  std::string census_bound;
  std::string census_mode = "canonical";
  bool census_primitive = false;
  bool census_list = false;
  bool census_sweep = false;
  auto add_census_flags = [&](CLI::App* sub) {
    sub->add_option("bound", census_bound, "Bound n")->required();
    sub->add_option("--mode", census_mode, "canonical (multisets) or ordered")->check(CLI::IsMember({"canonical", "ordered"}));
    sub->add_flag("--primitive", census_primitive, "Only gcd-1 quadruples");
    sub->add_flag("--list", census_list, "Print every quadruple as a JSON line");
  };
  auto census_options = [&] {
    CensusOptions opts;
    opts.mode = parse_count_mode(census_mode);
    opts.primitive_only = census_primitive;
    opts.materialize = census_list;
    opts.workers = ctx.workers;
    return opts;
  };
  auto emit_census = [&](const CensusReport& r) {
    if (census_list) {
      for (const auto& q : r.quadruples) emit(out, to_json(q));
    } else {
      emit(out, {{"bound", r.bound},
                 {"kind", r.kind == CensusBound::Height ? "height" : "max"},
                 {"mode", to_string(r.mode)},
                 {"primitive", census_primitive},
                 {"count", to_json(r.count)}});
    }
  };
  auto* census_height = app.add_subcommand("census-height", "Count quadruples with height sqrt(a^2+b^2+c^2+d^2) <= n");
  add_census_flags(census_height);
  census_height->add_flag("--sweep", census_sweep, "Emit (n, count, count/(n^2 ln^3 n)) for every n up to the bound");
  census_height->callback([&] {
    action = [&] {
      const std::int64_t n = parse_bound(census_bound);
      if (census_sweep) {
        for (const auto& row : height_sweep(n, census_options()))
          emit(out, {{"n", row.n}, {"count", to_json(row.count)}, {"ratio", optional_ratio(row.ratio)}});
        return kExitOk;
      }
      emit_census(count_by_height(n, census_options()));
      return kExitOk;
    };
  });
  auto* census_max = app.add_subcommand("census-max", "Count quadruples whose largest entry is <= n");
  add_census_flags(census_max);
  census_max->callback([&] {
    action = [&] {
      emit_census(count_by_max(parse_bound(census_bound), census_options()));
      return kExitOk;
    };
  });

  // divisor-sum
  std::string dsum_bound;
  auto* dsum = app.add_subcommand("divisor-sum", "Exact sum of d(k)^2 for k <= n and its ratio to n ln^3 n");
  dsum->add_option("n", dsum_bound, "Upper limit")->required();
  dsum->callback([&] {
    action = [&] {
      const std::int64_t n = parse_bound(dsum_bound);
      auto r = divisor_square_sum(n);
      emit(out, {{"n", n}, {"sum", to_json(r.sum)}, {"ratio", optional_ratio(r.ratio)}});
      return kExitOk;
    };
  });

  // pair
  std::vector<std::string> pair_args;
  auto* pair = app.add_subcommand("pair", "All quadruples (p, q, c, d) extending a fixed positive pair");
  pair->add_option("pair", pair_args, "p q")->expected(2)->required();
  pair->callback([&] {
    action = [&] {
      const std::int64_t p = parse_bound(pair_args[0]);
      const std::int64_t q = parse_bound(pair_args[1]);
      for (const auto& e : quadruples_with_pair(p, q)) emit(out, {{"p", e.p}, {"q", e.q}, {"c", e.c}, {"d", e.d}});
      return kExitOk;
    };
  });

  // normform
  std::string normform_k;
  auto* normform = app.add_subcommand("normform", "Integer solutions of z^2 - zw + w^2 = k with counts A(k) and B(k)");
  normform->add_option("k", normform_k, "Target k >= 0")->required();
  normform->callback([&] {
    action = [&] {
      Integer k = parse_integer(normform_k);
      if (k < 0 || k > kMaxNormFormTarget) throw InvalidInput("k must lie in [0, 2^60]");
      auto sols = solve_norm_form(static_cast<std::int64_t>(k));
      json arr = json::array();
      for (const auto& s : sols) arr.push_back(json::array({s.z, s.w}));
      json result = {{"k", to_json(k)}, {"count", sols.size()}, {"solutions", arr}};
      if (k >= 1) {
        result["b"] = to_json(b_function(k));
        result["repr_count"] = to_json(repr_count(k));
      }
      emit(out, result);
      return kExitOk;
    };
  });

  // stabilizer
  std::size_t stab_depth = 10;
  auto* stabilizer = app.add_subcommand("stabilizer", "Growth of the subgroup generated by S2, S3, S4");
  stabilizer->add_option("--depth", stab_depth, "Maximum length");
  stabilizer->callback([&] {
    action = [&] {
      SearchOptions opts;
      opts.workers = ctx.workers;
      auto counts = stabilizer_counts(stab_depth, opts);
      json closed = json::array();
      for (std::size_t n = 0; 2 * n <= stab_depth; ++n)
        closed.push_back({{"n", n},
                          {"cumulative_to_2n", counts.cumulative(2 * n)},
                          {"six_n2_plus_3n_plus_1", stabilizer_closed_form(n)}});
      emit(out, {{"layers", counts.layer_sizes}, {"closed_form", closed}});
      return kExitOk;
    };
  });

  // extremal
  std::size_t extremal_n = 4;
  std::vector<std::string> extremal_root = {"0", "1", "1", "1"};
  bool extremal_exhaustive = false;
  auto* extremal = app.add_subcommand("extremal", "Extremal word R_n, its image norm and the growth rate of S4S3S2S1");
  extremal->add_option("n", extremal_n, "Word length")->required();
  extremal->add_option("--root", extremal_root, "Root quadruple")->expected(4);
  extremal->add_flag("--exhaustive", extremal_exhaustive, "Also maximize the norm over every element of length n");
  extremal->callback([&] {
    action = [&] {
      const Quadruple root = parse_quadruple(extremal_root);
      const Word w = extremal_word(extremal_n);
      json poly = json::array();
      for (const auto& c : char_poly_s4321()) poly.push_back(to_json(c));
      const SpectralRadius gamma = spectral_radius();
      std::ostringstream gamma_text, closed_text, printed_text;
      gamma_text << std::setprecision(30) << gamma.value();
      closed_text << std::setprecision(30) << gamma_closed_form();
      printed_text << std::setprecision(30) << gamma_closed_form_as_printed();
      json result = {{"n", extremal_n},
                     {"word", w.str()},
                     {"image", to_json(apply_word(w, root))},
                     {"norm", to_json(word_norm(w, root))},
                     {"char_poly", poly},
                     {"gamma", gamma_text.str()},
                     {"gamma_closed_form", closed_text.str()},
                     {"gamma_closed_form_as_printed", printed_text.str()}};
      if (extremal_exhaustive) {
        SearchOptions opts;
        opts.workers = ctx.workers;
        NormMaximum best = max_norm_over_reduced_words(extremal_n, root, opts);
        result["exhaustive"] = {{"max_norm", to_json(best.max_norm)},
                                {"attained_by", best.attained_by.str()},
                                {"maximizers", best.maximizers}};
      }
      emit(out, result);
      return kExitOk;
    };
  });

  // verify
  std::string verify_what;
  std::size_t verify_max_power = 20;
  auto* verify = app.add_subcommand("verify", "Pass/fail ledger for exact identities: coxeter, cartan, lie, a1");
  verify->add_option("what", verify_what, "coxeter | cartan | lie | a1")
      ->required()
      ->check(CLI::IsMember({"coxeter", "cartan", "lie", "a1"}));
  verify->add_option("--max-power", verify_max_power, "Largest n for the A1^n comparison");
  verify->callback([&] {
    action = [&] {
      std::vector<LedgerLine> lines;
      bool fatal = false;
      if (verify_what == "coxeter") {
        for (const auto& c : verify_coxeter_relations().checks) {
          lines.push_back({c.name, c.holds, ""});
          fatal |= !c.holds;
        }
      } else if (verify_what == "cartan") {
        const Signature s = cartan_signature();
        std::ostringstream detail;
        detail << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
        lines.push_back({"signature is (3,1)", s == Signature{3, 1, 0}, detail.str()});
        for (int i = 1; i <= 4; ++i) {
          const IntMatrix4& g = generator_matrix(GeneratorIndex(i));
          lines.push_back({"S" + std::to_string(i) + " preserves the form", g.transpose() * cartan_form() * g == cartan_form(), ""});
          lines.push_back({"det S" + std::to_string(i) + " = -1", g.determinant() == -1, ""});
        }
        for (const auto& l : lines) fatal |= !l.pass;
      } else if (verify_what == "lie") {
        lines = lie_ledger(static_cast<unsigned>(verify_max_power));
      } else {
        const IntMatrix4 a1 = a1_power(1);
        lines.push_back({"A1 = S1S2S1S3 matches display", a1 == a1_display(), ""});
        for (const auto& e : a1_power_formula_check(static_cast<unsigned>(verify_max_power)).entries) {
          std::ostringstream id, detail;
          id << "A1^" << e.n << " entry (" << e.row << "," << e.col << ") closed form";
          detail << "computed " << e.computed << ", closed form " << e.closed_form;
          lines.push_back({id.str(), e.match(), detail.str()});
        }
      }
      std::size_t failed = 0;
      for (const auto& l : lines) failed += l.pass ? 0 : 1;
      emit(out, {{"verify", verify_what}, {"total", lines.size()}, {"failed", failed}, {"ledger", ledger_json(lines)}});
      return fatal ? kExitDefect : kExitOk;
    };
  });

  // simplex
  std::string simplex_what;
  std::size_t simplex_n = 0;
  std::size_t simplex_index = 0;
  std::string simplex_config;
  std::vector<std::string> simplex_entries;
  auto* simplex = app.add_subcommand("simplex", "n-dimensional identity (n+1) sum a^2 = (sum a)^2: verify, reflect, gram");
  simplex->add_option("what", simplex_what, "verify | reflect | gram")
      ->required()
      ->check(CLI::IsMember({"verify", "reflect", "gram"}));
  simplex->add_option("--dim", simplex_n, "Dimension n >= 2 (default: entry count - 2)");
  simplex->add_option("--index", simplex_index, "Entry to reflect, 1..n+1");
  simplex->add_option("--config", simplex_config, "JSON point configuration with [num, den] rationals");
  simplex->add_option("entries", simplex_entries, "a_0 ... a_{n+1} as integers, p/q or decimals");
  simplex->callback([&] {
    action = [&] {
      SimplexTuple t;
      if (!simplex_config.empty()) {
        t = tuple_from_configuration(load_configuration(simplex_config));
      } else {
        const std::size_t n = simplex_n ? simplex_n : (simplex_entries.size() >= 2 ? simplex_entries.size() - 2 : 0);
        t = parse_simplex_tuple(n, simplex_entries);
      }
      if (simplex_what == "verify") {
        emit(out, {{"tuple", to_json(t)}, {"residual", to_json(verify_identity(t))}});
      } else if (simplex_what == "reflect") {
        ReflectResult r = simplex_reflect(t, simplex_index);
        if (r.negative_entry) err << "warning: reflected entry is negative\n";
        emit(out, {{"tuple", to_json(r.tuple)},
                   {"residual", to_json(verify_identity(r.tuple))},
                   {"negative_entry", r.negative_entry},
                   {"integral", is_integral(r.tuple)}});
      } else {
        GramResidual g = gram_residual(t);
        emit(out, {{"tuple", to_json(t)},
                   {"determinant", to_json(g.determinant)},
                   {"closed_form", to_json(g.closed_form)},
                   {"agree", g.agree()}});
      }
      return kExitOk;
    };
  });

  // alpha
  std::vector<std::string> alpha_args;
  std::string alpha_search;
  unsigned alpha_k = 4;
  auto* alpha_cmd = app.add_subcommand("alpha", "Prime factors with multiplicity of a*b*c*d, or a search for small values");
  alpha_cmd->add_option("entries", alpha_args, "a b c d")->expected(0, 4);
  alpha_cmd->add_option("--search", alpha_search, "Height bound for a search over canonical primitive quadruples");
  alpha_cmd->add_option("--k", alpha_k, "Largest alpha kept by --search");
  alpha_cmd->callback([&] {
    action = [&] {
      if (!alpha_search.empty()) {
        for (const auto& q : search_small_alpha(parse_bound(alpha_search), alpha_k))
          emit(out, {{"quadruple", to_json(q)}, {"alpha", *alpha(q)}});
        return kExitOk;
      }
      const Quadruple q = parse_quadruple(alpha_args);
      auto a = alpha(q);
      emit(out, {{"quadruple", to_json(q)}, {"alpha", a ? json(*a) : json(nullptr)}});
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInvalid;
  }

  if (!action) {
    err << app.help();
    return kExitInvalid;
  }
  try {
    return action();
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ArithmeticOverflow& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }
}

}  // namespace trigroup::cli

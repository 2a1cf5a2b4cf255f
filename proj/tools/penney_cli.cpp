// Command-line surface for the word-race engine. One binary, subcommand
// style; JSON by default, CSV for curves, DOT for graphs.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "penney/automaton.hpp"
#include "penney/correlation.hpp"
#include "penney/properties.hpp"
#include "penney/search.hpp"
#include "penney/winprob.hpp"
#include "penney/word.hpp"

using json = nlohmann::ordered_json;
using namespace penney;

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;

// Probabilities arrive as "a/b" or decimal text; both convert exactly
// ("0.45" becomes 9/20), never through floating point.
Rat parse_rational(const std::string& text) {
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      Int a(text.substr(0, slash)), b(text.substr(slash + 1));
      if (b == 0) throw domain_error("zero denominator: " + text);
      return Rat(a, b);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      bool neg = !digits.empty() && digits.front() == '-';
      if (neg) digits.erase(digits.begin());
      // strip leading zeros: cpp_int would read them as an octal prefix
      while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw domain_error("bad rational: " + text);
      Int den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      Int num{digits};
      return Rat(neg ? -num : num, den);
    }
    return Rat(Int(text));
  } catch (const std::runtime_error&) {
    throw domain_error("cannot parse rational: " + text);
  }
}

Rat parse_probability(const std::string& text) {
  Rat q = parse_rational(text);
  if (q <= 0 || q >= 1)
    throw domain_error("probability must lie strictly in (0,1): " + text);
  return q;
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

json poly_json(const IntPoly& f) {
  json coeffs = json::array();
  for (const Int& c : f.coeffs()) coeffs.push_back(c.str());
  return coeffs;
}

json ratfunc_json(const RatFunc& f) {
  return {{"text", f.str()}, {"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (Word u : ws) a.push_back(u.str());
  return a;
}

json overlap_json(Word x, Word y) {
  OverlapSet o = overlap_set(x, y);
  json words = json::array();
  for (int r : o.lengths) words.push_back(o.overlap_word(r).str());
  json corr = json::array();
  for (const auto& [ij, c] : correlation_poly(x, y).terms)
    corr.push_back({{"ones_exp", ij.first}, {"zeros_exp", ij.second}, {"coeff", c}});
  return {{"lengths", o.lengths}, {"overlap_words", words}, {"correlation", corr}};
}

void emit(const json& j, const std::string& format) {
  if (format == "human") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

struct CommonOpts {
  std::string format;
  unsigned threads = 0;
};

int cmd_win(const std::string& vt, const std::string& wt,
            const std::string& at, const CommonOpts& opts) {
  Word v = Word::parse(vt), w = Word::parse(wt);
  RatFunc f = win_probability(v, w);
  SymmetryFlags sym = classify_symmetry(f);
  json out{{"v", v.str()},
           {"w", w.str()},
           {"win", ratfunc_json(f)},
           {"symmetry",
            {{"odd", sym.odd}, {"even", sym.even}, {"constant", sym.constant}}},
           {"limit_at_zero", rat_str(f.limit_at_zero())}};
  if (!at.empty()) {
    Rat q = parse_probability(at);
    out["at"] = rat_str(q);
    out["value"] = rat_str(f.evaluate(q));
  }
  emit(out, opts.format);
  return 0;
}

int cmd_corr(const std::string& vt, const std::string& wt,
             const CommonOpts& opts) {
  Word v = Word::parse(vt), w = Word::parse(wt);
  json out{{"v", v.str()},
           {"w", w.str()},
           {"vv", overlap_json(v, v)},
           {"ww", overlap_json(w, w)},
           {"vw", overlap_json(v, w)},
           {"wv", overlap_json(w, v)},
           {"d_vv", words_json(d_set(v, v))},
           {"d_ww", words_json(d_set(w, w))},
           {"d_vw", words_json(d_set(v, w))},
           {"d_wv", words_json(d_set(w, v))},
           {"f", words_json(f_set(v, w))}};
  emit(out, opts.format);
  return 0;
}

int cmd_check(const std::string& which, const std::string& vt,
              const std::string& wt, int max_len, bool strict,
              const CommonOpts& opts) {
  Word v = Word::parse(vt), w = Word::parse(wt);
  json out{{"property", which}, {"v", v.str()}, {"w", w.str()}};
  if (which == "r") {
    out["verdict"] = has_property_r(v, w);
  } else if (which == "e") {
    auto wit = property_e_witness(v, w, strict);
    out["verdict"] = wit.has_value();
    if (wit) {
      out["witness"] = {{"a", wit->a.str()},
                        {"b", wit->b.str()},
                        {"s_set", words_json(wit->s_set)},
                        {"bound_m", wit->bound_m}};
    }
  } else if (which == "phi") {
    auto wit = property_e_witness(v, w, strict);
    if (!wit) throw domain_error("no split witness found; phi undefined");
    PhiReport rep = verify_phi_bijection(v, w, *wit, max_len);
    out["witness"] = {{"a", wit->a.str()}, {"b", wit->b.str()}};
    out["max_len"] = max_len;
    out["verdict"] = rep.pass;
    out["checked"] = rep.checked;
    out["omega_v_count"] = rep.omega_v_count;
    out["omega_w_count"] = rep.omega_w_count;
    if (!rep.pass) out["counterexample"] = rep.counterexample;
    emit(out, opts.format);
    return rep.pass ? 0 : kExitVerificationFailure;
  } else {
    throw domain_error("unknown property: " + which + " (expected r, e, phi)");
  }
  emit(out, opts.format);
  return 0;
}

int cmd_graph(const std::string& vt, const std::string& wt,
              const std::string& output) {
  Word v = Word::parse(vt);
  PrefixPairAutomaton g =
      wt.empty() ? build_single(v) : build(v, Word::parse(wt));
  std::string dot = to_dot(g);
  if (output.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(output);
    if (!out) throw domain_error("cannot open output file: " + output);
    out << dot;
  }
  return 0;
}

int cmd_oracle(const std::string& vt, const std::string& wt,
               const std::string& at, const CommonOpts& opts) {
  Word v = Word::parse(vt);
  Rat q = parse_probability(at.empty() ? "1/2" : at);
  json out{{"v", v.str()}, {"at", rat_str(q)}};
  if (wt.empty()) {
    PrefixPairAutomaton g = build_single(v);
    out["expected_hitting_time"] = rat_str(expected_absorption_time(g, q));
  } else {
    Word w = Word::parse(wt);
    PrefixPairAutomaton g = build(v, w);
    out["w"] = w.str();
    out["absorption_win"] = rat_str(absorption_win(g, q));
    out["expected_race_time"] = rat_str(expected_absorption_time(g, q));
  }
  emit(out, opts.format);
  return 0;
}

json pair_json(const search::WordPair& p) {
  return {{"v", p.first.str()}, {"w", p.second.str()}};
}

void emit_curve(const search::CurveReport& rep, const CommonOpts& opts) {
  if (opts.format == "json" || opts.format == "human") {
    json pts = json::array();
    for (const auto& pt : rep.points)
      pts.push_back({{"p", rat_str(pt.p)},
                     {"proportion", pt.proportion()},
                     {"ci_half_width", pt.ci_half_width},
                     {"favorable", pt.favorable},
                     {"n_pairs", pt.n_pairs}});
    json out{{"operation", "curve"},
             {"max_len", rep.max_len},
             {"sampled", rep.sampled},
             {"points", pts},
             {"elapsed_s", rep.elapsed_s}};
    if (rep.sampled) {
      out["samples"] = rep.samples;
      out["seed"] = rep.seed;
      out["rng"] = rep.rng;
    }
    emit(out, opts.format);
    return;
  }
  std::cout << "p,proportion,ci_half_width,n_pairs\n";
  for (const auto& pt : rep.points) {
    std::cout << rat_str(pt.p) << ',' << pt.proportion() << ','
              << pt.ci_half_width << ',' << pt.n_pairs << "\n";
  }
}

std::vector<Rat> parse_grid(const std::vector<std::string>& grid_text) {
  std::vector<Rat> grid;
  if (grid_text.empty()) {
    for (int i = 1; i <= 9; ++i) grid.emplace_back(i, 20);
    return grid;
  }
  for (const auto& t : grid_text) grid.push_back(parse_rational(t));
  return grid;
}

struct SearchArgs {
  int n = 0, k = 0, m = 2, max_len = 8;
  std::string at, tol = "1/1000000000", checkpoint;
  std::vector<std::string> grid;
  long long samples = 0;
  std::uint64_t seed = 0;
  bool confirm_long_run = false;
};

int cmd_search(const std::string& op, const SearchArgs& a,
               const CommonOpts& opts) {
  if (op == "longer-by-one") {
    auto rep = search::verify_longer_by_one(a.n, opts.threads);
    json fav = json::array();
    for (const auto& p : rep.favorable_pairs) fav.push_back(pair_json(p));
    json out{{"operation", op},       {"n", rep.n},
             {"pass", rep.pass},      {"pairs_checked", rep.pairs_checked},
             {"favorable", fav},      {"elapsed_s", rep.elapsed_s}};
    if (rep.best_nonconstant) {
      out["best_nonconstant"] = pair_json(*rep.best_nonconstant);
      out["best_nonconstant_win"] = rat_str(rep.best_nonconstant_win);
    }
    emit(out, opts.format);
    return rep.pass ? 0 : kExitVerificationFailure;
  }
  if (op == "tightness") {
    json out{{"operation", op},
             {"m", a.m},
             {"gap", rat_str(search::tightness_gap(a.m))}};
    emit(out, opts.format);
    return 0;
  }
  if (op == "gap-bound") {
    auto rep = search::verify_length_gap_bound(a.n, a.k, opts.threads);
    json out{{"operation", op},
             {"n", rep.n},
             {"k", rep.k},
             {"pass", rep.pass},
             {"pairs_checked", rep.pairs_checked},
             {"bound", rat_str(rep.bound)},
             {"extremal_pair", pair_json(rep.extremal_pair)},
             {"extremal_win", rat_str(rep.extremal_win)},
             {"elapsed_s", rep.elapsed_s}};
    if (rep.maximizer) {
      out["maximizer"] = pair_json(*rep.maximizer);
      out["max_win"] = rat_str(rep.max_win);
    }
    emit(out, opts.format);
    return rep.pass ? 0 : kExitVerificationFailure;
  }
  if (op == "argmax") {
    if (a.at.empty()) throw domain_error("argmax requires --at");
    auto rep = search::argmax_win(a.n, a.k, parse_probability(a.at), opts.threads);
    json out{{"operation", op},
             {"n", rep.n},
             {"k", rep.k},
             {"q", rat_str(rep.q)},
             {"pairs_checked", rep.pairs_checked},
             {"tie_break", rep.tie_break},
             {"elapsed_s", rep.elapsed_s}};
    if (rep.best) {
      out["best"] = pair_json(*rep.best);
      out["best_win"] = rat_str(rep.best_win);
      out["conjectured"] = pair_json(rep.conjectured);
      out["matches_conjecture"] = rep.matches_conjecture;
    } else {
      out["empty_arena"] = true;
    }
    emit(out, opts.format);
    return 0;
  }
  if (op == "threshold") {
    auto r = search::threshold_root(a.k, parse_rational(a.tol));
    json out{{"operation", op},
             {"k", a.k},
             {"lo", rat_str(r.lo)},
             {"hi", rat_str(r.hi)}};
    emit(out, opts.format);
    return 0;
  }
  if (op == "bounds") {
    if (a.at.empty()) throw domain_error("bounds requires --at");
    auto b = search::closed_form_bounds(a.k, parse_rational(a.at));
    json out{{"operation", op},
             {"k", a.k},
             {"q", a.at},
             {"low_branch", rat_str(b.low_branch)},
             {"high_branch", rat_str(b.high_branch)},
             {"applicable", b.applicable}};
    emit(out, opts.format);
    return 0;
  }
  if (op == "curve") {
    auto grid = parse_grid(a.grid);
    auto rep = a.samples > 0
                   ? search::longer_favorable_curve_sampled(
                         a.max_len, grid, a.samples, a.seed, opts.threads)
                   : search::longer_favorable_curve(a.max_len, grid, opts.threads);
    emit_curve(rep, opts);
    return 0;
  }
  if (op == "density") {
    auto rep = search::property_r_density(a.n, opts.threads, a.checkpoint,
                                          a.confirm_long_run);
    json out{{"operation", op},
             {"n", rep.n},
             {"r_count", rep.r_count},
             {"r_density", rat_str(rep.r_density)},
             {"r_density_approx", static_cast<double>(rep.r_density)},
             {"trivial_count", rep.trivial_count},
             {"trivial_density", rat_str(rep.trivial_density)},
             {"trivial_density_approx", static_cast<double>(rep.trivial_density)},
             {"elapsed_s", rep.elapsed_s}};
    emit(out, opts.format);
    return 0;
  }
  throw domain_error("unknown search operation: " + op);
}

int cmd_census(int n, const CommonOpts& opts) {
  auto rep = search::symmetry_census(n, opts.threads);
  auto bucket = [](const search::CensusBucket& b) {
    return json{{"total", b.total},
                {"with_r", b.with_r},
                {"with_e", b.with_e},
                {"bitflip_pair", b.bitflip_pair}};
  };
  json out{{"operation", "census"},
           {"n", rep.n},
           {"pairs_checked", rep.pairs_checked},
           {"odd_only", bucket(rep.odd_only)},
           {"even_only", bucket(rep.even_only)},
           {"constant", bucket(rep.constant)},
           {"none", bucket(rep.none)},
           {"weight_invariant_ok", rep.weight_invariant_ok},
           {"constant_limit_ok", rep.constant_limit_ok},
           {"elapsed_s", rep.elapsed_s}};
  emit(out, opts.format);
  bool ok = rep.weight_invariant_ok && rep.constant_limit_ok;
  return ok ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the two-word race (Penney's ante)"};
  app.require_subcommand(1);

  CommonOpts opts;

  std::string v_text, w_text, at_text, output_path, property, search_op;
  int max_len = 20, n = 0, k = 0;
  SearchArgs sa;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "json|csv|dot|human")
        ->check(CLI::IsMember({"json", "csv", "dot", "human"}));
    sub->add_option("--threads", opts.threads, "worker count (0 = machine)");
  };

  auto* win = app.add_subcommand("win", "exact win probability in the bias p");
  win->add_option("v", v_text)->required();
  win->add_option("w", w_text)->required();
  win->add_option("--at", at_text, "evaluate at an exact rational bias");
  add_common(win);

  auto* corr = app.add_subcommand("corr", "overlap sets, correlation tables, bad prefixes");
  corr->add_option("v", v_text)->required();
  corr->add_option("w", w_text)->required();
  add_common(corr);

  bool strict = false;
  auto* check = app.add_subcommand("check", "decide properties r, e, phi");
  check->add_option("property", property, "r|e|phi")->required();
  check->add_option("v", v_text)->required();
  check->add_option("w", w_text)->required();
  check->add_option("--max-len", max_len, "enumeration bound for phi");
  check->add_flag("--strict", strict, "also check the literal printed split condition");
  add_common(check);

  auto* graph = app.add_subcommand("graph", "emit the race automaton as DOT");
  graph->add_option("v", v_text)->required();
  graph->add_option("w", w_text);
  graph->add_option("-o,--output", output_path, "write DOT here instead of stdout");
  add_common(graph);

  auto* oracle = app.add_subcommand("oracle", "absorption probabilities by exact linear algebra");
  oracle->add_option("v", v_text)->required();
  oracle->add_option("w", w_text);
  oracle->add_option("--at", at_text, "bias (default 1/2)");
  add_common(oracle);

  auto* se = app.add_subcommand("search", "exhaustive and sampled sweeps");
  se->add_option("operation", search_op,
                 "longer-by-one|tightness|gap-bound|argmax|threshold|bounds|curve|density")
      ->required();
  se->add_option("--n", sa.n);
  se->add_option("--k", sa.k);
  se->add_option("--m", sa.m);
  se->add_option("--at", sa.at, "bias as exact rational");
  se->add_option("--tol", sa.tol, "isolation width for threshold");
  se->add_option("--max-len", sa.max_len);
  se->add_option("--grid", sa.grid, "grid biases (default i/20, i=1..9)")
      ->delimiter(',');
  se->add_option("--samples", sa.samples, "sample count (0 = exhaustive)");
  se->add_option("--seed", sa.seed);
  se->add_option("--checkpoint", sa.checkpoint, "resumable progress file");
  se->add_flag("--confirm-long-run", sa.confirm_long_run);
  add_common(se);

  auto* census = app.add_subcommand("census", "symmetry census of equal-length pairs");
  census->add_option("--n", n)->required();
  add_common(census);

  CLI11_PARSE(app, argc, argv);

  try {
    if (win->parsed()) return cmd_win(v_text, w_text, at_text, opts);
    if (corr->parsed()) return cmd_corr(v_text, w_text, opts);
    if (check->parsed())
      return cmd_check(property, v_text, w_text, max_len, strict, opts);
    if (graph->parsed()) return cmd_graph(v_text, w_text, output_path);
    if (oracle->parsed()) return cmd_oracle(v_text, w_text, at_text, opts);
    if (se->parsed()) {
      if (se->count("--format") == 0 && search_op == "curve")
        opts.format = "csv";
      return cmd_search(search_op, sa, opts);
    }
    if (census->parsed()) return cmd_census(n, opts);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return kExitDomainError;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const pole_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}

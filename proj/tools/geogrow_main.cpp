// Command line surface: subcommands over the geodesic-growth pipeline.
// Every run emits one report (text or JSON via --machine); exit codes are
// 0 success, 2 config error, 3 resource cap, 4 validation disagreement.

#include <CLI11.hpp>

#include "geogrow/fellow.hpp"
#include "geogrow/group_io.hpp"
#include "geogrow/growth.hpp"
#include "geogrow/oracle.hpp"
#include "geogrow/polytope.hpp"
#include "geogrow/profile_fsa.hpp"
#include "geogrow/report.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace geogrow;

struct Common {
  std::string group;
  std::vector<std::string> letters;
  std::vector<std::string> weights;  // name=value
  bool machine = false;
  std::string out_path;
  int64_t ball_cap = 10000000;
  int64_t state_cap = 2000000;
};

void add_common(CLI::App* cmd, Common& c, bool group_required = true) {
  auto* g = cmd->add_option("--group", c.group,
                            "group name (bundled) or path to a JSON file");
  if (group_required) g->required();
  cmd->add_option("--letters", c.letters,
                  "restrict to these letters, comma separated")
      ->delimiter(',');
  cmd->add_option("--weight", c.weights,
                  "override a letter weight as name=value; repeatable");
  cmd->add_flag("--machine", c.machine, "print the JSON report");
  cmd->add_option("--out", c.out_path, "also write the JSON report here");
  cmd->add_option("--ball-cap", c.ball_cap, "largest ball size to explore");
  cmd->add_option("--state-cap", c.state_cap,
                  "largest automaton state count");
}

GroupDescription load_group(const Common& c) {
  GroupDescription g = load_group_file(resolve_group_path(c.group));
  if (!c.letters.empty()) {
    GeneratingSet sub;
    for (const std::string& name : c.letters) {
      std::optional<int> idx = g.gens.find(name);
      require(idx.has_value(), ErrorKind::config,
              "no letter named " + name + " in " + c.group);
      sub.letters.push_back(g.gens.letters[*idx]);
    }
    sub.inverse_closed = true;
    for (const Letter& a : sub.letters) {
      GroupElement inv = g.pres.inverse(a.value);
      bool found = false;
      for (const Letter& b : sub.letters)
        found = found || g.pres.equal(b.value, inv);
      sub.inverse_closed = sub.inverse_closed && found;
    }
    g.gens = sub;
  }
  for (const std::string& spec : c.weights) {
    auto eq = spec.find('=');
    require(eq != std::string::npos, ErrorKind::config,
            "weight override must look like name=value: " + spec);
    std::string name = spec.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(spec.substr(eq + 1));
    } catch (const std::exception&) {
      require(false, ErrorKind::config, "bad weight value in " + spec);
    }
    std::optional<int> idx = g.gens.find(name);
    require(idx.has_value(), ErrorKind::config, "no letter named " + name);
    require(value >= 1, ErrorKind::config, "weights must be positive");
    g.gens.letters[*idx].weight = value;
  }
  validate_generating_set(g.pres, g.gens);
  return g;
}

ReportDoc config_echo(const Common& c, const GroupDescription& g) {
  ReportDoc doc;
  doc["group"] = c.group;
  doc["group_path"] = resolve_group_path(c.group);
  ReportDoc names = ReportDoc::array(), weights = ReportDoc::array();
  for (const Letter& l : g.gens.letters) {
    names.push_back(l.name);
    weights.push_back(l.weight);
  }
  doc["letters"] = names;
  doc["weights"] = weights;
  doc["ball_cap"] = c.ball_cap;
  doc["state_cap"] = c.state_cap;
  return doc;
}

std::string letter_line(const GeneratingSet& gens) {
  std::string out;
  for (const Letter& l : gens.letters) {
    if (!out.empty()) out += ' ';
    out += l.name;
    if (l.weight != 1) out += ":" + std::to_string(l.weight);
  }
  return out;
}

std::string fmt_vecq(const VecQ& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_text(v[i]);
  }
  return out + ")";
}

std::string fmt_vecz(const VecZ& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += int_text(v[i]);
  }
  return out + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Prints/stores the finished report; returns the process exit code.
int finish(const Common& c, ReportDoc& doc, const std::string& human,
           std::chrono::steady_clock::time_point start, int code) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  doc["timing"] = ReportDoc{{"total_ms", ms}};
  if (c.machine)
    std::cout << emit_report(doc);
  else
    std::cout << human;
  if (!c.out_path.empty()) {
    std::ofstream out(c.out_path);
    require(bool(out), ErrorKind::config, "cannot write " + c.out_path);
    out << emit_report(doc);
  }
  return code;
}

int cmd_ball(const Common& c, int radius) {
  auto start = std::chrono::steady_clock::now();
  GroupDescription g = load_group(c);
  ReportDoc doc = make_report("ball");
  doc["config"] = config_echo(c, g);
  doc["config"]["radius"] = radius;

  BallIndex ball = build_ball(g.pres, g.gens, radius, Metric::directed,
                              c.ball_cap);
  std::vector<int64_t> spheres = ball.sphere_sizes();
  doc["result"] = ReportDoc{{"spheres", spheres}, {"ball_size", ball.size()}};

  std::ostringstream human;
  human << "command: ball\ngroup: " << c.group
        << "\nletters: " << letter_line(g.gens) << "\nradius: " << radius
        << "\nspheres:";
  for (int64_t s : spheres) human << " " << s;
  human << "\nball_size: " << ball.size() << "\n";
  return finish(c, doc, human.str(), start, 0);
}

int cmd_fft(const Common& c, int delta, int radius,
            const std::string& scan) {
  auto start = std::chrono::steady_clock::now();
  GroupDescription g = load_group(c);
  ReportDoc doc = make_report("fft");
  doc["config"] = config_echo(c, g);
  doc["config"]["radius"] = radius;
  VerifyOptions opts{c.ball_cap, c.state_cap};

  std::ostringstream human;
  human << "command: fft\ngroup: " << c.group
        << "\nletters: " << letter_line(g.gens) << "\nradius: " << radius
        << "\n";
  if (!scan.empty()) {
    auto dots = scan.find("..");
    require(dots != std::string::npos, ErrorKind::config,
            "scan range must look like lo..hi");
    int lo = 0, hi = 0;
    try {
      lo = std::stoi(scan.substr(0, dots));
      hi = std::stoi(scan.substr(dots + 2));
    } catch (const std::exception&) {
      require(false, ErrorKind::config, "bad scan range " + scan);
    }
    require(0 <= lo && lo <= hi, ErrorKind::config,
            "scan range must satisfy 0 <= lo <= hi");
    doc["config"]["scan_delta"] = scan;
    ReportDoc reports = ReportDoc::array();
    std::optional<int> found;
    for (int d = lo; d <= hi && !found; ++d) {
      FellowTravelReport rep = verify_fft(g.pres, g.gens, d, radius, opts);
      reports.push_back(to_json(rep, g.gens));
      human << "delta " << d << ": " << (rep.holds ? "holds" : "fails");
      if (rep.counterexample)
        human << " (counterexample " << word_str(g.gens, *rep.counterexample)
              << ")";
      human << "\n";
      if (rep.holds) found = d;
    }
    doc["result"] = ReportDoc{{"reports", reports}};
    if (found)
      doc["result"]["min_delta"] = *found;
    else
      doc["result"]["min_delta"] = nullptr;
    human << "min_delta: " << (found ? std::to_string(*found) : "none")
          << "\n";
    return finish(c, doc, human.str(), start, 0);
  }

  doc["config"]["delta"] = delta;
  FellowTravelReport rep = verify_fft(g.pres, g.gens, delta, radius, opts);
  doc["result"] = to_json(rep, g.gens);
  human << "delta: " << delta << "\nholds: " << yesno(rep.holds) << "\n";
  if (rep.counterexample)
    human << "counterexample: " << word_str(g.gens, *rep.counterexample)
          << "\n";
  human << "minimal_checked: " << int_text(rep.minimal_checked)
        << "\nfalsified: " << int_text(rep.falsified)
        << "\nstates: " << rep.states << "\n";
  return finish(c, doc, human.str(), start, 0);
}

std::string cache_key(const Common& c, int delta) {
  std::string key = c.group;
  for (char& ch : key)
    if (ch == '/' || ch == '\\' || ch == '.') ch = '_';
  for (const std::string& l : c.letters) key += "_" + l;
  for (const std::string& w : c.weights) key += "_" + w;
  for (char& ch : key)
    if (ch == '=') ch = '-';
  return key + "_d" + std::to_string(delta) + ".aut";
}

int cmd_automaton(const Common& c, int delta, int validate_radius,
                  const std::string& dot_path, const std::string& save_path) {
  auto start = std::chrono::steady_clock::now();
  GroupDescription g = load_group(c);
  ReportDoc doc = make_report("automaton");
  doc["config"] = config_echo(c, g);
  doc["config"]["delta"] = delta;
  doc["config"]["validate"] = validate_radius;

  GeodesicAutomaton aut;
  const char* cache_dir = std::getenv("GEOGROW_CACHE_DIR");
  std::filesystem::path cache_file;
  bool loaded = false;
  if (cache_dir && *cache_dir) {
    cache_file = std::filesystem::path(cache_dir) / cache_key(c, delta);
    if (std::filesystem::exists(cache_file)) {
      std::ifstream in(cache_file);
      std::ostringstream buf;
      buf << in.rdbuf();
      aut = parse_automaton(buf.str());
      loaded = true;
    }
  }
  if (!loaded) {
    AutomatonOptions opts{c.ball_cap, c.state_cap};
    aut = minimize(build_geodesic_automaton(g.pres, g.gens, delta, opts));
    if (cache_dir && *cache_dir) {
      std::filesystem::create_directories(cache_file.parent_path());
      std::ofstream out(cache_file);
      out << serialize(aut);
    }
  }
  doc["result"] = ReportDoc{{"delta", aut.delta},
                            {"states", aut.live_states()},
                            {"letters", aut.nletters()}};

  std::ostringstream human;
  human << "command: automaton\ngroup: " << c.group
        << "\nletters: " << letter_line(g.gens) << "\ndelta: " << delta
        << "\nstates: " << aut.live_states() << "\n";

  int code = 0;
  if (validate_radius > 0) {
    ValidationReport val =
        cross_validate(aut, g.pres, g.gens, validate_radius, c.ball_cap);
    doc["result"]["validation"] = to_json(val, g.gens);
    human << "validate: radius " << validate_radius << ", "
          << (val.agree ? "agree" : "DISAGREE");
    if (val.disagreement)
      human << " at " << word_str(g.gens, *val.disagreement) << " (automaton "
            << (val.automaton_accepts ? "accepts" : "rejects") << ")";
    human << ", words_checked " << int_text(val.words_checked) << "\n";
    if (!val.agree) code = 4;
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    require(bool(out), ErrorKind::config, "cannot write " + dot_path);
    out << export_dot(aut);
    doc["result"]["dot"] = dot_path;
    human << "dot: " << dot_path << "\n";
  }
  if (!save_path.empty()) {
    std::ofstream out(save_path);
    require(bool(out), ErrorKind::config, "cannot write " + save_path);
    out << serialize(aut);
    doc["result"]["saved"] = save_path;
    human << "saved: " << save_path << "\n";
  }
  return finish(c, doc, human.str(), start, code);
}

int cmd_growth(const Common& c, int delta, int terms) {
  auto start = std::chrono::steady_clock::now();
  GroupDescription g = load_group(c);
  ReportDoc doc = make_report("growth");
  doc["config"] = config_echo(c, g);
  doc["config"]["delta"] = delta;
  doc["config"]["terms"] = terms;

  AutomatonOptions opts{c.ball_cap, c.state_cap};
  GeodesicAutomaton aut = build_geodesic_automaton(g.pres, g.gens, delta, opts);
  TransitionMatrix m = transition_matrix(aut);
  TransitionMatrix cm = corrected_matrix(m, parent_counts(aut));
  std::vector<Rat> series = growth_series(cm, terms);
  RationalGF gf = rational_form(cm);

  BallIndex ball = build_ball(g.pres, g.gens, terms, Metric::directed,
                              c.ball_cap);
  bool validated = validate_growth(series, ball);

  doc["result"] = ReportDoc{{"states", aut.live_states()}};
  ReportDoc coeffs = ReportDoc::array();
  for (const Rat& s : series) coeffs.push_back(rat_text(s));
  doc["result"]["series"] = coeffs;
  doc["result"]["growth"] = to_json(gf);
  if (cm.n <= 60) {
    Poly den = char_denominator(cm);
    Poly den_q;
    for (const Int& v : gf.den) den_q.push_back(Rat(v));
    doc["result"]["denominator_divides_char"] = poly_divides(den_q, den);
  }
  doc["result"]["validated"] = validated;
  doc["result"]["validation_radius"] = terms;

  std::ostringstream human;
  human << "command: growth\ngroup: " << c.group
        << "\nletters: " << letter_line(g.gens) << "\ndelta: " << delta
        << "\nstates: " << aut.live_states() << "\nseries:";
  for (const Rat& s : series) human << " " << s;
  human << "\ngrowth: " << gf.text() << "\nvalidated: " << yesno(validated)
        << "\n";
  return finish(c, doc, human.str(), start, validated ? 0 : 4);
}

int cmd_polytope(const Common& c, const std::vector<std::string>& taus,
                 const std::string& goodify, const std::string& cone,
                 int scale, int delta, int radius, int abelian_cap,
                 const GoodSetOptions& good_opts) {
  auto start = std::chrono::steady_clock::now();
  GroupDescription g = load_group(c);
  ReportDoc doc = make_report("polytope");
  doc["config"] = config_echo(c, g);
  doc["config"]["radius"] = radius;

  std::ostringstream human;
  human << "command: polytope\ngroup: " << c.group
        << "\nletters: " << letter_line(g.gens) << "\n";

  LatticeLetters lat = lattice_letters(g.pres, g.gens);
  Polytope poly = translation_polytope(g.pres, g.gens);
  doc["result"] = ReportDoc{{"lattice_letters", lat.letters.size()},
                            {"polytope", to_json(poly)}};
  bool hemi = hemisphere_check(lat.values);
  bool hemi_sym = hemisphere_check_symmetric(lat.values);
  doc["result"]["hemisphere"] = hemi;
  doc["result"]["hemisphere_symmetric"] = hemi_sym;
  human << "lattice_letters: " << lat.letters.size() << "\nvertices:";
  for (const VecQ& v : poly.vertices) human << " " << fmt_vecq(v);
  human << "\nhemisphere: " << yesno(hemi)
        << "\nhemisphere_symmetric: " << yesno(hemi_sym) << "\n";

  if (!taus.empty()) {
    ReportDoc arr = ReportDoc::array();
    for (const std::string& spec : taus) {
      VecZ v(g.pres.rank);
      std::istringstream in(spec);
      std::string tok;
      for (int i = 0; i < g.pres.rank; ++i) {
        require(bool(std::getline(in, tok, ',')), ErrorKind::config,
                "tau vector needs " + std::to_string(g.pres.rank) +
                    " coordinates: " + spec);
        try {
          v[i] = Int(tok);
        } catch (const std::exception&) {
          require(false, ErrorKind::config, "bad coordinate in " + spec);
        }
      }
      require(!std::getline(in, tok, ','), ErrorKind::config,
              "too many coordinates: " + spec);
      Rat tau = translation_length(g.pres, g.gens, v);
      arr.push_back(ReportDoc{{"vector", vec_json(v)}, {"tau", rat_text(tau)}});
      human << "tau " << fmt_vecz(v) << ": " << rat_text(tau) << "\n";
    }
    doc["result"]["tau"] = arr;
  }

  if (!goodify.empty()) {
    doc["config"]["goodify"] = goodify;
    doc["config"]["delta"] = delta;
    Triangulation model = load_triangulation_file(resolve_tri_path(goodify));
    std::vector<VecQ> pts;
    for (const Ray& r : model.rays) pts.push_back(to_vecq(r.dir));
    Polytope q = convex_hull(model.rank, pts);
    GoodSetResult good = good_generating_set(g.pres, g.gens, q, good_opts);
    FellowTravelReport rep =
        verify_fft(g.pres, good.gens, delta, radius,
                   VerifyOptions{c.ball_cap, c.state_cap});
    ReportDoc gj;
    gj["scale"] = int_text(good.scale);
    gj["letters"] = gens_json(good.gens);
    gj["polytope"] = to_json(good.polytope);
    ReportDoc mand = ReportDoc::array();
    for (const VecZ& v : good.mandated) mand.push_back(vec_json(v));
    gj["mandated"] = mand;
    gj["fft"] = to_json(rep, good.gens);
    doc["result"]["goodify"] = gj;
    human << "goodify " << goodify << ": scale " << int_text(good.scale)
          << ", " << good.gens.size() << " letters\ngood_letters: "
          << letter_line(good.gens) << "\ngood_fft: delta " << delta
          << " radius " << radius << ", " << (rep.holds ? "holds" : "fails")
          << "\n";
  }

  int code = 0;
  if (!cone.empty()) {
    doc["config"]["cone"] = cone;
    doc["config"]["scale"] = scale;
    Triangulation tri = load_triangulation_file(resolve_tri_path(cone));
    ConeLanguage lang = cone_language(g.pres, g.gens, tri, scale);
    ConeCheck check = verify_cone_language(g.pres, g.gens, lang, radius);
    doc["result"]["cone"] = to_json(lang, g.gens);
    doc["result"]["cone_check"] = to_json(check);
    human << "cone " << cone << ": scale " << scale << ", "
          << lang.vertex_words.size() << " vertex words, "
          << lang.coset_words.size() << " coset words\ncone_check: radius "
          << radius << ", geodesic " << yesno(check.geodesic_core)
          << ", surjective " << yesno(check.surjective) << ", slack "
          << check.max_slack << "\n";
    if (!check.geodesic_core || !check.surjective) code = 4;
  }

  if (abelian_cap > 0) {
    doc["config"]["abelian_cap"] = abelian_cap;
    AbelianBound bound = abelian_fft_bound(g.pres, g.gens, abelian_cap);
    doc["result"]["abelian"] = to_json(bound);
    human << "abelian_bound: " << bound.bound << " (frontier "
          << (bound.frontier_closed ? "closed" : "open") << ", "
          << bound.minimal.size() << " minimal)\n";
  }
  return finish(c, doc, human.str(), start, code);
}

int cmd_cannon_demo(const Common& c, int n_max) {
  auto start = std::chrono::steady_clock::now();
  GroupDescription g = load_group(c);
  ReportDoc doc = make_report("cannon_demo");
  doc["config"] = config_echo(c, g);
  doc["config"]["n_max"] = n_max;

  NerodeTable table = nerode_separation(g.pres, g.gens, n_max, c.ball_cap);
  std::string explanation =
      "Each pair shows that the prefixes t c^n and t c^m land in different "
      "states of any automaton for the geodesic language: the suffix t c^m "
      "extends t c^n to a geodesic exactly when m < n, so the two prefixes "
      "are distinguished by that suffix. Distinct n up to n_max therefore "
      "need distinct states, and since n_max is arbitrary no finite "
      "automaton accepts the language: it is not regular.";
  doc["result"] = to_json(table, g.gens);
  doc["result"]["explanation"] = explanation;

  std::ostringstream human;
  human << "command: cannon_demo\ngroup: " << c.group
        << "\nn_max: " << n_max << "\nrows:\n";
  for (const NerodeRow& row : table.rows)
    human << "  n=" << row.n << " m=" << row.m << ": geodesic ["
          << word_str(g.gens, row.geodesic) << "], non-geodesic ["
          << word_str(g.gens, row.ungeodesic) << "], "
          << (row.separated ? "separated" : "NOT SEPARATED") << "\n";
  human << "all_separated: " << yesno(table.all_separated) << "\n\n"
        << explanation << "\n";
  return finish(c, doc, human.str(), start, table.all_separated ? 0 : 4);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic growth of weighted generating sets"};
  app.require_subcommand(1);

  Common ball_c;
  int ball_radius = 8;
  auto* ball = app.add_subcommand("ball", "sphere sizes of the weighted ball");
  add_common(ball, ball_c);
  ball->add_option("--radius", ball_radius, "ball radius")->required();

  Common fft_c;
  int fft_delta = 1, fft_radius = 8;
  std::string fft_scan;
  auto* fft = app.add_subcommand(
      "fft", "verify falsification by fellow travelling");
  add_common(fft, fft_c);
  fft->add_option("--delta", fft_delta, "fellow travelling distance");
  fft->add_option("--radius", fft_radius, "word weight bound");
  fft->add_option("--scan-delta", fft_scan, "scan a lo..hi range of deltas");

  Common aut_c;
  int aut_delta = 1, aut_validate = 0;
  std::string aut_dot, aut_save;
  auto* aut = app.add_subcommand(
      "automaton", "build and minimize the geodesic word acceptor");
  add_common(aut, aut_c);
  aut->add_option("--delta", aut_delta, "fellow travelling distance")
      ->required();
  aut->add_option("--validate", aut_validate,
                  "cross-validate against the ball to this radius");
  aut->add_option("--dot", aut_dot, "write a graphviz rendering here");
  aut->add_option("--save", aut_save, "write the serialized automaton here");

  Common growth_c;
  int growth_delta = 1, growth_terms = 12;
  auto* growth = app.add_subcommand(
      "growth", "exact growth series and rational closed form");
  add_common(growth, growth_c);
  growth->add_option("--delta", growth_delta, "fellow travelling distance")
      ->required();
  growth->add_option("--terms", growth_terms,
                     "series terms and validation radius");

  Common poly_c;
  std::vector<std::string> poly_taus;
  std::string poly_goodify, poly_cone;
  int poly_scale = 1, poly_delta = 1, poly_radius = 8, poly_abelian = 0;
  GoodSetOptions good_opts;
  auto* poly = app.add_subcommand(
      "polytope", "translation length polytope and cone languages");
  add_common(poly, poly_c);
  poly->add_option("--tau", poly_taus,
                   "translation length of a vector x,y,...; repeatable");
  poly->add_option("--goodify", poly_goodify,
                   "enlarge to a good set modelled on this fan's hull");
  poly->add_option("--cone", poly_cone,
                   "build the cone language of this triangulation");
  poly->add_option("--scale", poly_scale, "cone language scale");
  poly->add_option("--delta", poly_delta, "delta for the goodify check");
  poly->add_option("--radius", poly_radius,
                   "radius for goodify and cone verification");
  poly->add_option("--abelian-cap", poly_abelian,
                   "search non-geodesic powers up to this weight");
  poly->add_option("--mandate-depth", good_opts.mandate_depth,
                   "length of base words whose corrections are mandated");
  poly->add_flag("--differences", good_opts.include_differences,
                 "also mandate pairwise letter differences");
  poly->add_option("--max-scale", good_opts.max_scale,
                   "largest model scale to try");

  Common demo_c;
  demo_c.group = "cannon";
  int demo_n_max = 5;
  auto* demo = app.add_subcommand(
      "cannon_demo", "pumping witnesses against a regular geodesic language");
  add_common(demo, demo_c, false);
  demo->add_option("--n-max", demo_n_max, "largest pumping exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ball->parsed()) return cmd_ball(ball_c, ball_radius);
    if (fft->parsed()) return cmd_fft(fft_c, fft_delta, fft_radius, fft_scan);
    if (aut->parsed())
      return cmd_automaton(aut_c, aut_delta, aut_validate, aut_dot, aut_save);
    if (growth->parsed()) return cmd_growth(growth_c, growth_delta, growth_terms);
    if (poly->parsed())
      return cmd_polytope(poly_c, poly_taus, poly_goodify, poly_cone,
                          poly_scale, poly_delta, poly_radius, poly_abelian,
                          good_opts);
    if (demo->parsed()) return cmd_cannon_demo(demo_c, demo_n_max);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::config: return 2;
      case ErrorKind::resource: return 3;
      case ErrorKind::validation: return 4;
      case ErrorKind::internal: return 1;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "hrr2/cli.hpp"

#include "hrr2/apolarity.hpp"
#include "hrr2/cattani.hpp"
#include "hrr2/errors.hpp"
#include "hrr2/form_json.hpp"
#include "hrr2/hessian.hpp"
#include "hrr2/linalg.hpp"
#include "hrr2/totalpos.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hrr2::cli {

namespace {

struct Options {
  std::string form_inline;
  std::string form_file;
  bool closed = false;
  bool open = false;
  std::optional<int> index;
  std::string ell;
  std::string tuple_file;
  std::string t_grid;
  std::string family;
  std::optional<std::size_t> count;
  std::optional<std::uint64_t> seed;
  std::optional<int> degree;
};

// Malformed input; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

Rational parse_input_rational(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

struct LoadedForm {
  Json input;
  BivariateForm form;
};

LoadedForm load_form(const Options& opt) {
  if (opt.form_inline.empty() == opt.form_file.empty()) {
    throw InputError("give exactly one of --form or --form-file");
  }
  const std::string text = opt.form_inline.empty() ? read_file(opt.form_file) : opt.form_inline;
  LoadedForm out;
  out.input = parse_json_text(text, "form");
  try {
    out.form = form_from_json(out.input);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (out.form.is_zero()) throw InputError("the zero form is rejected");
  return out;
}

LinearForm parse_linear(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("--ell expects a,b");
  LinearForm l{parse_input_rational(parts[0]), parse_input_rational(parts[1])};
  if (l.is_zero()) throw InputError("--ell must be nonzero");
  return l;
}

// Tuple file: JSON array of [a, b] string pairs, l_0 first.
std::vector<LinearForm> load_tuple(const std::string& path) {
  const Json node = parse_json_text(read_file(path), "tuple file");
  if (!node.is_array()) throw InputError("tuple file must hold a JSON array of [a, b] pairs");
  std::vector<LinearForm> out;
  for (const auto& pair : node) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw InputError("tuple entries must be [\"a\", \"b\"] string pairs");
    }
    LinearForm l{parse_input_rational(pair[0].get<std::string>()), parse_input_rational(pair[1].get<std::string>())};
    if (l.is_zero()) throw InputError("tuple entries must be nonzero linear forms");
    out.push_back(l);
  }
  return out;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_input_rational(part));
  if (out.empty()) throw InputError("--t-grid must list at least one value");
  return out;
}

// ---- JSON rendering -------------------------------------------------------

Json strings(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

Json matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json one_based(const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t k : idx) out.push_back(k + 1);
  return out;
}

Json witness_json(const std::optional<MinorWitness>& w) {
  if (!w) return nullptr;
  Json out = Json::object();
  out["rows"] = one_based(w->rows);
  out["cols"] = one_based(w->cols);
  out["value"] = rational_to_json(w->value);
  return out;
}

Json tp_report_json(const TPReport& r) {
  Json out = Json::object();
  out["is_tnn"] = r.is_tnn;
  out["is_tp"] = r.is_tp;
  out["tp_order"] = r.tp_order;
  out["rank"] = r.rank;
  out["witness"] = witness_json(r.witness);
  return out;
}

std::string monomial_name(int x_exp, int y_exp) {
  auto power = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
  };
  std::string x = power("x", x_exp);
  std::string y = power("y", y_exp);
  if (x.empty() && y.empty()) return "1";
  if (x.empty()) return y;
  if (y.empty()) return x;
  return x + "*" + y;
}

Json poly_json(const BivariateForm& f) {
  Json out = Json::object();
  out["degree"] = f.degree();
  out["monomial_coeffs"] = strings(f.monomial_coeffs());
  out["normalized_coeffs"] = strings(f.normalized());
  return out;
}

Json header(const std::string& command, const LoadedForm& lf) {
  Json out = Json::object();
  out["command"] = command;
  out["input"] = lf.input;
  out["form"] = form_to_json(lf.form);
  return out;
}

Json hrr_json(const HrrReport& r) {
  Json out = Json::object();
  out["holds"] = r.holds;
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json j = Json::object();
    j["j"] = d.j;
    Json basis = Json::array();
    for (int p : d.gram.basis) basis.push_back(monomial_name(p, d.gram.degree - p));
    j["basis"] = std::move(basis);
    j["gram"] = matrix_json(d.gram.matrix);
    Json prim = Json::array();
    for (const auto& v : d.primitive) prim.push_back(strings(v));
    j["primitive_basis"] = std::move(prim);
    j["restricted_gram"] = matrix_json(d.restricted);
    j["nondegenerate"] = d.nondegenerate;
    j["positive_definite_on_primitive"] = d.positive;
    j["holds"] = d.holds;
    degrees.push_back(std::move(j));
  }
  out["degrees"] = std::move(degrees);
  return out;
}

Json quadrant_sides(const BivariateForm& form, const Options& opt,
                    const std::function<bool(bool)>& decide) {
  Json out = Json::object();
  const bool both = opt.closed == opt.open;
  if (both || opt.closed) out["closed"] = decide(true);
  if (both || opt.open) out["open"] = decide(false);
  (void)form;
  return out;
}

std::vector<Rational> perturbation_ts() { return {rat(1, 10), rat(1, 3), rat(9, 10)}; }

// ---- commands -------------------------------------------------------------

int cmd_analyze(const Options& opt, std::ostream& out) {
  const LoadedForm lf = load_form(opt);
  const BivariateForm& f = lf.form;
  Json rep = header("analyze", lf);
  const HilbertData h = hilbert_function(f);
  rep["monomial_coeffs"] = strings(f.monomial_coeffs());
  rep["hilbert_function"] = h.h;
  rep["sperner"] = h.sperner;
  const Annihilator ann = min_annihilator_degree(f);
  Json a = Json::object();
  a["degree"] = ann.degree;
  a["generator"] = strings(ann.generator.coeffs());
  rep["annihilator"] = std::move(a);
  Json mt = Json::object();
  mt["i"] = f.degree() / 2;
  mt["matrix"] = matrix_json(toeplitz(f, f.degree() / 2).matrix);
  mt["report"] = tp_report_json(classify_max_toeplitz(f));
  rep["max_toeplitz"] = std::move(mt);
  out << rep.dump(2) << '\n';
  return kExitOk;
}

int cmd_hessians(const Options& opt, std::ostream& out) {
  const LoadedForm lf = load_form(opt);
  const BivariateForm& f = lf.form;
  Json rep = header("hessians", lf);
  const int s = sperner_number(f);
  rep["sperner"] = s;
  Json list = Json::array();
  for (int i = 0; i <= f.degree() / 2; ++i) {
    const HessianPoly h = hessian_polynomial(f, i);
    Json j = Json::object();
    j["i"] = i;
    j["polynomial"] = poly_json(h.poly);
    j["identically_zero"] = h.poly.is_zero();
    j["positive_closed_quadrant"] = positive_on_quadrant(h.poly, true);
    j["positive_open_quadrant"] = positive_on_quadrant(h.poly, false);
    list.push_back(std::move(j));
  }
  rep["hessians"] = std::move(list);
  rep["hessian_side"] = quadrant_sides(f, opt, [&](bool closed) { return decide_hessian_side(f, closed); });
  out << rep.dump(2) << '\n';
  return kExitOk;
}

int cmd_toeplitz(const Options& opt, std::ostream& out) {
  const LoadedForm lf = load_form(opt);
  const BivariateForm& f = lf.form;
  const int half = f.degree() / 2;
  Json rep = header("toeplitz", lf);
  const int s = sperner_number(f);
  rep["sperner"] = s;
  int first = 0;
  int last = half;
  if (opt.index) {
    if (*opt.index < 0 || *opt.index > half) throw InputError("--i must lie in [0, floor(d/2)]");
    first = last = *opt.index;
  }
  bool rank_law = true;
  Json list = Json::array();
  for (int i = first; i <= last; ++i) {
    const RatMatrix m = toeplitz(f, i).matrix;
    Json j = Json::object();
    j["i"] = i;
    j["matrix"] = matrix_json(m);
    const int rank = static_cast<int>(rank_exact(m));
    j["rank"] = rank;
    j["expected_rank"] = std::min(i + 1, s);
    rank_law = rank_law && rank == std::min(i + 1, s);
    j["report"] = tp_report_json(all_minors_nonneg(m));
    int contiguous = 0;
    for (int k = 1; k <= static_cast<int>(std::min(m.rows(), m.cols())); ++k) {
      if (!is_tp_contiguous(m, k)) break;
      contiguous = k;
    }
    j["contiguous_tp_order"] = contiguous;
    if (i == half) j["in_open_set_Os"] = in_open_set_Os(m, s);
    list.push_back(std::move(j));
  }
  rep["matrices"] = std::move(list);
  rep["rank_law_holds"] = rank_law;
  out << rep.dump(2) << '\n';
  return rank_law ? kExitOk : kExitDisagreement;
}

int cmd_plucker(const Options& opt, std::ostream& out) {
  const LoadedForm lf = load_form(opt);
  const BivariateForm& f = lf.form;
  const int s = sperner_number(f);
  const int i = opt.index.value_or(std::min(s - 1, f.degree() / 2));
  if (i < 0 || i > f.degree() / 2) throw InputError("--i must lie in [0, floor(d/2)]");
  const PluckerExpansion exp = plucker_terms(f, i);
  const BivariateForm direct = hessian_polynomial(f, i).poly;
  Json rep = header("plucker", lf);
  rep["sperner"] = s;
  rep["i"] = i;
  rep["factor"] = exp.factor.get_str();
  Json terms = Json::array();
  for (const auto& t : exp.terms) {
    Json j = Json::object();
    j["J"] = t.partition.subset;
    j["lambda"] = t.partition.lambda;
    j["lambda_conj"] = t.partition.lambda_conj;
    j["N_prime"] = t.n_prime.get_str();
    j["minor"] = rational_to_json(t.minor);
    j["monomial"] = monomial_name(t.x_exponent, t.y_exponent);
    j["contribution"] = rational_to_json(t.contribution);
    terms.push_back(std::move(j));
  }
  rep["terms"] = std::move(terms);
  rep["expansion"] = poly_json(exp.poly);
  rep["direct"] = poly_json(direct);
  const bool equal = exp.poly == direct;
  rep["equal"] = equal;
  out << rep.dump(2) << '\n';
  return equal ? kExitOk : kExitDisagreement;
}

int cmd_hrr(const Options& opt, std::ostream& out) {
  const LoadedForm lf = load_form(opt);
  const BivariateForm& f = lf.form;
  if (opt.ell.empty() && opt.tuple_file.empty()) throw InputError("hrr needs --ell and/or --tuple");
  const int i = opt.index.value_or(f.degree() / 2);
  if (i < 0) throw InputError("--i must be non-negative");
  Json rep = header("hrr", lf);
  rep["i"] = i;
  if (!opt.ell.empty()) {
    const LinearForm l = parse_linear(opt.ell);
    Json o = hrr_json(ordinary_hrr(f, l, i));
    o["ell"] = strings({l.a, l.b});
    rep["ordinary"] = std::move(o);
  }
  if (!opt.tuple_file.empty()) {
    const std::vector<LinearForm> tuple = load_tuple(opt.tuple_file);
    if (tuple.size() != static_cast<std::size_t>(f.degree()) + 1) {
      throw InputError("tuple needs d + 1 linear forms");
    }
    Json m = hrr_json(mixed_hrr(f, tuple, i));
    Json t = Json::array();
    for (const auto& l : tuple) t.push_back(strings({l.a, l.b}));
    m["tuple"] = std::move(t);
    rep["mixed"] = std::move(m);
  }
  rep["cone_decision"] = quadrant_sides(f, opt, [&](bool closed) { return decide_ordinary_hrr_cone(f, i, closed); });
  out << rep.dump(2) << '\n';
  return kExitOk;
}

Json equivalence_json(const EquivalenceReport& r) {
  Json out = Json::object();
  out["sperner"] = r.sperner;
  Json hs = Json::array();
  for (const auto& st : r.per_i_hessian_status) {
    Json j = Json::object();
    j["i"] = st.i;
    j["polynomial"] = poly_json(st.poly);
    j["positive_closed_quadrant"] = st.positive_closed;
    j["positive_open_quadrant"] = st.positive_open;
    hs.push_back(std::move(j));
  }
  out["hessians"] = std::move(hs);
  out["hessian_side"] = Json{{"closed", r.hessian_side_closed}, {"open", r.hessian_side_open}};
  out["toeplitz_side"] = Json{{"closed", r.toeplitz_side_closed}, {"open", r.toeplitz_side_open}};
  out["agree"] = r.agree;
  out["max_toeplitz"] = tp_report_json(r.max_toeplitz);
  out["small_toeplitz"] = Json{{"is_tp", r.small_toeplitz_tp}, {"is_tnn", r.small_toeplitz_tnn}};
  out["max_toeplitz_consistent"] = r.max_toeplitz_consistent;
  return out;
}

struct Replay {
  Json json = Json::object();
  bool ok = true;
  std::optional<Rational> t_found;
};

// Contiguous minors, shift path and perturbation replays for one form.
Replay replay_proof(const BivariateForm& f, const EquivalenceReport& r, const std::optional<std::vector<Rational>>& grid) {
  Replay out;
  if (r.hessian_side_closed) {
    const ContiguousMinorCheck c = contiguous_minor_details(f);
    Json cm = Json::object();
    cm["minors"] = strings(c.minors);
    cm["hessian_values"] = strings(c.hessian_values);
    cm["constants"] = strings(c.constants);
    cm["all_nonzero"] = c.all_nonzero;
    cm["constants_match"] = c.constants_match;
    out.json["contiguous_minors"] = std::move(cm);
    out.ok = out.ok && c.all_nonzero && c.constants_match;

    std::vector<Rational> ts = grid.value_or(std::vector<Rational>{});
    if (!grid) {
      const PathReport probe = shift_path_experiment(f, {});
      const Rational stop = probe.t_found.value_or(Rational(1));
      for (Rational t = 0; t <= stop; t += Rational(1, 4)) ts.push_back(t);
    }
    const PathReport path = shift_path_experiment(f, ts);
    Json sp = Json::object();
    sp["t_samples"] = strings(path.t_samples);
    sp["in_open_set_Os"] = path.in_Os_flags;
    sp["tp_at_large_t"] = path.tp_at_large_t;
    sp["t_found"] = path.t_found ? rational_to_json(*path.t_found) : Json(nullptr);
    sp["cap_hit"] = path.cap_hit;
    out.json["shift_path"] = std::move(sp);
    const bool all_in = std::all_of(path.in_Os_flags.begin(), path.in_Os_flags.end(), [](bool b) { return b; });
    out.ok = out.ok && all_in && path.tp_at_large_t;
    out.t_found = path.t_found;
  }
  if (r.toeplitz_side_open) {
    Json pert = Json::array();
    for (const Rational& t : perturbation_ts()) {
      const bool tp = perturbation_check(f, t);
      pert.push_back(Json{{"t", to_string(t)}, {"tp", tp}});
      out.ok = out.ok && tp;
    }
    out.json["perturbation"] = std::move(pert);
  }
  const bool coeff = coefficient_positivity_check(f);
  out.json["coefficient_positivity"] = coeff;
  out.ok = out.ok && coeff;
  return out;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const LoadedForm lf = load_form(opt);
  const BivariateForm& f = lf.form;
  Json rep = header("verify", lf);
  const EquivalenceReport r = verify_equivalence(f);
  Json eq = equivalence_json(r);
  for (auto it = eq.begin(); it != eq.end(); ++it) rep[it.key()] = it.value();
  std::optional<std::vector<Rational>> grid;
  if (!opt.t_grid.empty()) grid = parse_grid(opt.t_grid);
  for (const auto& t : grid.value_or(std::vector<Rational>{})) {
    if (sgn(t) < 0) throw InputError("--t-grid values must be non-negative");
  }
  const Replay replay = replay_proof(f, r, grid);
  rep["proof_replay"] = replay.json;
  rep["proof_replay_ok"] = replay.ok;
  out << rep.dump(2) << '\n';
  return r.agree && r.max_toeplitz_consistent && replay.ok ? kExitOk : kExitDisagreement;
}

Json anomaly_bundle(const BivariateForm& f, const std::vector<std::string>& failed) {
  Json b = Json::object();
  b["form"] = form_to_json(f);
  b["failed_checks"] = failed;
  Json hs = Json::array();
  for (int i = 0; i <= f.degree() / 2; ++i) hs.push_back(poly_json(hessian_polynomial(f, i).poly));
  b["hessians"] = std::move(hs);
  const RatMatrix m = toeplitz(f, f.degree() / 2).matrix;
  Json minors = Json::array();
  for (const auto& level : all_minors(m).by_size) {
    for (const auto& e : level) {
      minors.push_back(Json{{"rows", one_based(e.rows)}, {"cols", one_based(e.cols)}, {"value", to_string(e.value)}});
    }
  }
  b["max_toeplitz_minors"] = std::move(minors);
  b["witness"] = witness_json(all_minors_nonneg(m).witness);
  return b;
}

int cmd_fuzz(const Options& opt, std::ostream& out) {
  if (opt.family.empty() || !opt.count || !opt.seed) throw InputError("fuzz needs --family, --count and --seed");
  FormFamily family;
  try {
    family = parse_family(opt.family);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  std::vector<int> degrees;
  if (opt.degree) {
    if (*opt.degree < 0 || *opt.degree > kMaxGeneratedDegree) throw InputError("--degree must lie in [0, 10]");
    degrees.push_back(*opt.degree);
  } else {
    for (int d = 1; d <= 8; ++d) degrees.push_back(d);
  }

  std::map<std::string, int> tallies{{"hessian_closed", 0}, {"hessian_open", 0}, {"toeplitz_closed", 0}, {"toeplitz_open", 0}};
  std::map<std::string, int> thresholds;
  std::size_t forms = 0;
  Json anomalies = Json::array();
  for (int d : degrees) {
    for (const auto& f : generate_forms(family, d, *opt.count, *opt.seed)) {
      ++forms;
      std::vector<std::string> failed;
      const EquivalenceReport r = verify_equivalence(f);
      tallies["hessian_closed"] += r.hessian_side_closed;
      tallies["hessian_open"] += r.hessian_side_open;
      tallies["toeplitz_closed"] += r.toeplitz_side_closed;
      tallies["toeplitz_open"] += r.toeplitz_side_open;
      if (!r.agree) failed.push_back("equivalence");
      if (!r.max_toeplitz_consistent) failed.push_back("max_toeplitz_consistency");
      for (int i = 0; i <= d / 2; ++i) {
        if (static_cast<int>(rank_exact(toeplitz(f, i).matrix)) != std::min(i + 1, r.sperner)) {
          failed.push_back("rank_law");
          break;
        }
      }
      for (int i = 0; i < r.sperner; ++i) {
        if (!(plucker_expansion(f, i) == hessian_polynomial(f, i).poly)) {
          failed.push_back("plucker");
          break;
        }
      }
      const Replay replay = replay_proof(f, r, std::nullopt);
      if (!replay.ok) failed.push_back("proof_replay");
      if (replay.t_found) ++thresholds[to_string(*replay.t_found)];
      if (!failed.empty()) anomalies.push_back(anomaly_bundle(f, failed));
    }
  }
  Json rep = Json::object();
  rep["command"] = "fuzz";
  rep["family"] = std::string(family_name(family));
  rep["degrees"] = degrees;
  rep["count_per_degree"] = *opt.count;
  rep["seed"] = *opt.seed;
  rep["forms"] = forms;
  Json t = Json::object();
  for (const auto& [k, v] : tallies) t[k] = v;
  rep["sides_true"] = std::move(t);
  Json th = Json::object();
  for (const auto& [k, v] : thresholds) th[k] = v;
  rep["shift_tp_threshold_counts"] = std::move(th);
  rep["anomaly_count"] = anomalies.size();
  rep["anomalies"] = std::move(anomalies);
  out << rep.dump(2) << '\n';
  return rep["anomaly_count"].get<std::size_t>() == 0 ? kExitOk : kExitDisagreement;
}

void add_form_options(CLI::App* sub, Options& opt) {
  sub->add_option("--form", opt.form_inline, "Form as inline JSON");
  sub->add_option("--form-file", opt.form_file, "Path to a JSON form");
}

void add_side_flags(CLI::App* sub, Options& opt) {
  sub->add_flag("--closed", opt.closed, "Closed quadrant / closed cone only");
  sub->add_flag("--open", opt.open, "Open quadrant / open cone only");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hessian and Toeplitz invariants of bivariate forms", "hrr2"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Hilbert function, Sperner number, maximal Toeplitz matrix");
  add_form_options(analyze, opt);

  auto* hessians = app.add_subcommand("hessians", "Hessian polynomials and quadrant positivity");
  add_form_options(hessians, opt);
  add_side_flags(hessians, opt);

  auto* toep = app.add_subcommand("toeplitz", "Normalized Toeplitz matrices and total positivity reports");
  add_form_options(toep, opt);
  toep->add_option("--i", opt.index, "Single Toeplitz index");

  auto* pl = app.add_subcommand("plucker", "Plucker expansion of a Hessian polynomial");
  add_form_options(pl, opt);
  pl->add_option("--i", opt.index, "Hessian index (default min(s-1, floor(d/2)))");

  auto* hrr = app.add_subcommand("hrr", "Ordinary / mixed Hodge-Riemann checks for given linear forms");
  add_form_options(hrr, opt);
  add_side_flags(hrr, opt);
  hrr->add_option("--i", opt.index, "Degree bound (default floor(d/2))");
  hrr->add_option("--ell", opt.ell, "Linear form a,b meaning a x + b y");
  hrr->add_option("--tuple", opt.tuple_file, "JSON file with d+1 [a, b] pairs");

  auto* verify = app.add_subcommand("verify", "Decide both sides of the equivalence and replay the proof steps");
  add_form_options(verify, opt);
  verify->add_option("--t-grid", opt.t_grid, "Shift parameters t1,t2,... for the O_s path samples");

  auto* fuzz = app.add_subcommand("fuzz", "Run the equivalence checks on a generated corpus");
  fuzz->add_option("--family", opt.family, "a|b|c|d");
  fuzz->add_option("--count", opt.count, "Forms per degree");
  fuzz->add_option("--seed", opt.seed, "Generator seed");
  fuzz->add_option("--degree", opt.degree, "Single degree (default 1..8)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (opt.closed && opt.open) {
    err << "error: --closed and --open are exclusive\n";
    return kExitInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (hessians->parsed()) return cmd_hessians(opt, out);
    if (toep->parsed()) return cmd_toeplitz(opt, out);
    if (pl->parsed()) return cmd_plucker(opt, out);
    if (hrr->parsed()) return cmd_hrr(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (fuzz->parsed()) return cmd_fuzz(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDisagreement;
  }
  return kExitInputError;
}

}  // namespace hrr2::cli

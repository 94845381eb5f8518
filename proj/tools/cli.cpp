#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dessinkit/belyi.hpp"
#include "dessinkit/dessin.hpp"
#include "dessinkit/error.hpp"
#include "dessinkit/gallery.hpp"
#include "dessinkit/kummer.hpp"
#include "dessinkit/models.hpp"

namespace dessinkit::cli {

namespace {

using Json = nlohmann::ordered_json;

Json big(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json rat(const Rational& v) { return to_string(v); }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const std::string& prefix, const Json& v, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) flatten(prefix.empty() ? key : prefix + "." + key, child, out);
    return;
  }
  if (v.is_array()) {
    bool nested = false;
    for (const auto& e : v) nested = nested || e.is_structured();
    if (nested) {
      for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", v[i], out);
      return;
    }
    std::string line = "[";
    for (std::size_t i = 0; i < v.size(); ++i) line += (i ? ", " : "") + scalar_text(v[i]);
    out << prefix << " = " << line << "]\n";
    return;
  }
  out << prefix << " = " << scalar_text(v) << "\n";
}

// "6 3^10" style multiset rendering of a descending cycle type.
std::string cycle_type_text(const std::vector<std::size_t>& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size();) {
    std::size_t j = i;
    while (j < type.size() && type[j] == type[i]) ++j;
    if (!out.empty()) out += " ";
    out += std::to_string(type[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dessin resolve_dessin(const std::string& ref) {
  constexpr std::string_view kPrefix = "gallery:";
  if (ref.rfind(kPrefix, 0) == 0) {
    const Integer k = parse_integer(std::string_view(ref).substr(kPrefix.size()));
    if (!k.fits_sint_p()) fail(ErrorCode::OutOfRange, "gallery index out of range");
    return gallery::dessin(static_cast<int>(k.get_si()));
  }
  return load_dessin(read_file(ref));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

CritProfile parse_profile(const std::string& text) {
  CritProfile p;
  for (const auto& item : split_list(text)) {
    if (item == "inf" || item == "infinity") {
      p.includes_infinity = true;
    } else {
      p.finite_values.insert(parse_rational(item));
    }
  }
  return p;
}

Json profile_json(const CritProfile& p) {
  Json arr = Json::array();
  for (const auto& v : p.finite_values) arr.push_back(rat(v));
  if (p.includes_infinity) arr.push_back("inf");
  return arr;
}

RatPoly parse_polynomial(const std::string& text) {
  const RatMap f = parse_ratmap(text);
  if (!f.is_polynomial()) fail(ErrorCode::SyntaxError, "expected a polynomial, got a rational map");
  return f.numerator() * f.denominator().leading();
}

struct Options {
  bool json = false;
  bool serial = false;
  std::string cap_group_order;
  std::string cap_stage_size;

  // command arguments
  std::string path1, path2, word, with_word = "y^2", map, profile, lo, hi;
  std::vector<std::string> points;
  unsigned k = 0, p = 0;
  std::string q, gamma = "1", variant = "plain", m, n, x0, c, c0, d, poly;
  unsigned i = 0, u = 1;
  unsigned long alpha_nu = 0;
  bool trace = false;
  std::string out_dir;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    caps_ = caps_from_env();
    if (!o.cap_group_order.empty()) caps_ = parse_caps("group_order=" + o.cap_group_order, caps_);
    if (!o.cap_stage_size.empty()) caps_ = parse_caps("stage_size=" + o.cap_stage_size, caps_);
    policy_ = o.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
  }

  void emit(const Json& doc) const {
    if (o_.json) {
      out_ << doc.dump(2) << "\n";
    } else {
      flatten("", doc, out_);
    }
  }

  int dessin_info() const {
    const Dessin d = resolve_dessin(o_.path1);
    const Passport pp = passport_of(d);
    const RegularDescriptor r = regular_descriptor(d, caps_, policy_);
    Json doc;
    doc["degree"] = d.degree();
    doc["black"] = cycle_type_text(pp.black);
    doc["white"] = cycle_type_text(pp.white);
    doc["faces"] = cycle_type_text(pp.faces);
    doc["genus"] = genus_of(d);
    doc["group_order"] = big(r.group_order);
    doc["ord_x"] = big(r.ord_x);
    doc["ord_y"] = big(r.ord_y);
    doc["ord_xy"] = big(r.ord_xy);
    doc["euler_characteristic"] = big(r.euler_characteristic);
    doc["regular_genus"] = big(r.genus);
    emit(doc);
    return 0;
  }

  int dessin_iso() const {
    const Dessin d1 = resolve_dessin(o_.path1);
    const Dessin d2 = resolve_dessin(o_.path2);
    const auto pi = dessins_isomorphic(d1, d2, policy_);
    Json doc;
    doc["isomorphic"] = pi.has_value();
    if (pi) doc["conjugator"] = pi->to_string();
    emit(doc);
    return pi ? 0 : 1;
  }

  int dessin_reg_iso() const {
    const ClosureComparison c =
        compare_regular_closures(resolve_dessin(o_.path1), resolve_dessin(o_.path2), caps_, policy_);
    Json doc;
    doc["isomorphic"] = c.isomorphic;
    doc["order1"] = big(c.order1);
    doc["order2"] = big(c.order2);
    doc["diagonal_order"] = big(c.diagonal_order);
    doc["reason"] = c.reason;
    emit(doc);
    return c.isomorphic ? 0 : 1;
  }

  int dessin_witness() const {
    const FreeWord w = o_.word.empty() ? gallery::witness() : parse_word(o_.word);
    const FreeWord v = parse_word(o_.with_word);
    const WitnessVerdict verdict = distinguish_by_witness(resolve_dessin(o_.path1), resolve_dessin(o_.path2), w, v);
    Json doc;
    doc["word"] = w.to_string();
    doc["commuting_with"] = v.to_string();
    doc["image1"] = verdict.image1.to_string();
    doc["image2"] = verdict.image2.to_string();
    doc["verdict"] = std::string(separation_name(verdict.kind));
    emit(doc);
    return verdict.kind == Separation::None ? 1 : 0;
  }

  int word_eval() const {
    const Dessin d = resolve_dessin(o_.path1);
    const FreeWord w = parse_word(o_.word);
    Json doc;
    doc["word"] = w.to_string();
    doc["image"] = evaluate_word(w, d.sigma0(), d.sigma1()).to_string();
    emit(doc);
    return 0;
  }

  int word_commutes() const {
    const Dessin d = resolve_dessin(o_.path1);
    const FreeWord w = parse_word(o_.word);
    const FreeWord v = parse_word(o_.with_word);
    const Permutation a = evaluate_word(w, d.sigma0(), d.sigma1());
    const Permutation b = evaluate_word(v, d.sigma0(), d.sigma1());
    const bool commute = a * b == b * a;
    Json doc;
    doc["word"] = w.to_string();
    doc["with"] = v.to_string();
    doc["commutes"] = commute;
    emit(doc);
    return commute ? 0 : 1;
  }

  int gallery_list() const {
    Json doc;
    for (int k = 1; k <= gallery::kCount; ++k) {
      Json entry;
      std::string_view text = gallery::text(k);
      // The second comment line names the conjugating automorphism.
      auto first = text.find('\n');
      auto second = text.find('\n', first + 1);
      std::string label(text.substr(first + 1, second - first - 1));
      if (label.rfind("# ", 0) == 0) label = label.substr(2);
      entry["automorphism"] = label;
      entry["witness_image"] = std::string(gallery::expected_witness_image(k));
      doc["gallery:" + std::to_string(k)] = entry;
    }
    emit(doc);
    return 0;
  }

  int gallery_export() const {
    if (o_.k != 0) {
      out_ << gallery::text(static_cast<int>(o_.k));
      return 0;
    }
    if (o_.out_dir.empty()) fail(ErrorCode::SyntaxError, "gallery export needs --k or --out");
    std::filesystem::create_directories(o_.out_dir);
    Json doc;
    Json files = Json::array();
    for (int k = 1; k <= gallery::kCount; ++k) {
      const auto path = std::filesystem::path(o_.out_dir) / ("d" + std::to_string(k) + ".dessin");
      std::ofstream f(path, std::ios::binary);
      if (!f) fail(ErrorCode::IoError, "cannot write '" + path.string() + "'");
      f << gallery::text(k);
      files.push_back(path.string());
    }
    doc["written"] = files;
    emit(doc);
    return 0;
  }

  int model(bool sec32) const {
    const LocalModel m = sec32 ? model_sec32(o_.p, o_.k, variant_j()) : model_sec31(o_.k);
    Json doc;
    doc["family"] = m.family;
    doc["k"] = m.k;
    if (sec32) doc["variant"] = m.j_variant ? "j" : "plain";
    doc["points"] = m.point_count;
    doc["A"] = m.a;
    doc["B"] = m.b;
    doc["C"] = m.c;
    doc["D"] = m.d;
    doc["T"] = m.t.to_string();
    doc["omega"] = m.omega.to_string();
    doc["commutes_with_y2"] = commutes_with_y2(m);
    if (o_.trace) {
      const EdgeTrace t = trace_edge(m, witness_edge(m));
      const std::string e = std::to_string(t.start);
      doc[e + "^omega"] = t.omega;
      doc[e + "^(omega y^2)"] = t.omega_then_y2;
      doc[e + "^(y^2)"] = t.y2;
      doc[e + "^(y^2 omega)"] = t.y2_then_omega;
    }
    emit(doc);
    return 0;
  }

  int belyi_bmn() const {
    const BmnParams p{parse_integer(o_.m), parse_integer(o_.n)};
    const RatMap f = bmn(p, caps_);
    const Rational peak = make_rational(p.m, p.m + p.n);
    Json doc;
    doc["map"] = f.to_string();
    doc["B(0)"] = eval_extended(f, ProjPoint::finite(0)).to_string();
    doc["B(1)"] = eval_extended(f, ProjPoint::finite(1)).to_string();
    doc["B(" + to_string(peak) + ")"] = eval_extended(f, ProjPoint::finite(peak)).to_string();
    doc["critical_values"] = profile_json(finite_critical_values(f));
    emit(doc);
    return 0;
  }

  int belyi_crit() const {
    const RatMap f = parse_ratmap(o_.map);
    Json doc;
    doc["map"] = f.to_string();
    doc["critical_values"] = profile_json(finite_critical_values(f));
    if (!o_.profile.empty()) {
      const CritProfile in = parse_profile(o_.profile);
      doc["input_profile"] = profile_json(in);
      doc["propagated"] = profile_json(propagate_crit(in, f));
    }
    emit(doc);
    return 0;
  }

  int belyi_sturm() const {
    const RatPoly p = parse_polynomial(o_.poly);
    Json doc;
    doc["polynomial"] = p.to_string();
    doc["interval"] = "(" + to_string(parse_rational(o_.lo)) + ", " + to_string(parse_rational(o_.hi)) + "]";
    doc["roots"] = sturm_count(p, parse_rational(o_.lo), parse_rational(o_.hi));
    emit(doc);
    return 0;
  }

  int belyi_increasing() const {
    const RatPoly p = parse_polynomial(o_.poly);
    const bool ok = certify_increasing(p, parse_rational(o_.lo), parse_rational(o_.hi));
    Json doc;
    doc["polynomial"] = p.to_string();
    doc["interval"] = "[" + to_string(parse_rational(o_.lo)) + ", " + to_string(parse_rational(o_.hi)) + "]";
    doc["increasing"] = ok;
    emit(doc);
    return ok ? 0 : 1;
  }

  int belyi_reduce() const {
    std::vector<Rational> pts;
    for (const auto& s : o_.points) {
      for (const auto& item : split_list(s)) pts.push_back(parse_rational(item));
    }
    const BelyiReduction red = dessinkit::belyi_reduce(pts, caps_);
    const ReductionCheck check = verify_reduction(red.chain, pts, caps_);
    if (!check.ok()) fail(ErrorCode::Internal, "reduction failed its own verification");
    Json doc;
    if (!pts.empty()) {
      doc["alpha"] = rat(red.alpha);
      doc["a0"] = rat(red.a0);
      doc["merged_duplicates"] = red.merged_duplicates;
    }
    Json stages = Json::array();
    for (const auto& s : red.chain.stages) stages.push_back(s.to_string());
    doc["stages"] = stages;
    doc["P(0)"] = check.value_at_zero.to_string();
    doc["critical_values"] = profile_json(check.profile);
    doc["verified"] = check.ok();
    emit(doc);
    return 0;
  }

  int tower_jinv() const {
    const TowerField f(o_.p, parse_rational(o_.q));
    const Rational gamma = parse_rational(o_.gamma);
    const GaloisElement g{o_.i, o_.u};
    const TowerElement b = TowerElement::from_rational(f, 1) - galois_apply(g, TowerElement::zeta(f));
    const TowerElement c = galois_apply(g, TowerElement::root(f)) * gamma;
    Json doc;
    doc["a"] = "0";
    doc["b"] = b.to_string();
    doc["c"] = c.to_string();
    doc["j"] = j_invariant_of_triple({TowerElement::zero(f), b, c}).to_string();
    emit(doc);
    return 0;
  }

  int tower_distinct() const {
    const TowerField f(o_.p, parse_rational(o_.q));
    const ConjugateReport r = conjugate_triples_distinct(f, parse_rational(o_.gamma), policy_);
    Json doc;
    doc["conjugates"] = r.automorphisms.size();
    doc["distinct"] = r.distinct();
    doc["equivariant"] = r.equivariant;
    Json coll = Json::array();
    for (auto [a, b] : r.collisions) {
      const auto& ga = r.automorphisms[a];
      const auto& gb = r.automorphisms[b];
      coll.push_back("(" + std::to_string(ga.i) + "," + std::to_string(ga.u) + ")~(" + std::to_string(gb.i) + "," +
                     std::to_string(gb.u) + ")");
    }
    doc["collisions"] = coll;
    emit(doc);
    return r.distinct() ? 0 : 1;
  }

  int lemma_two_adic() const {
    TwoAdicInstance inst;
    inst.p = parse_polynomial(o_.poly);
    inst.c = parse_integer(o_.c);
    if (!o_.x0.empty()) {
      inst.x0 = parse_rational(o_.x0);
    } else {
      if (o_.p == 0 || o_.q.empty()) fail(ErrorCode::SyntaxError, "give --x0 or --p, --q and --gamma");
      inst.x0 = lemma_point(o_.p, parse_rational(o_.q), parse_rational(o_.gamma));
    }
    const TwoAdicReport r = two_adic_verify(inst, caps_);
    Json doc;
    doc["x0"] = rat(inst.x0);
    doc["alpha"] = r.alpha;
    doc["a"] = big(r.a);
    doc["b"] = big(r.b);
    doc["c0"] = big(r.c0);
    doc["nu"] = r.nu;
    doc["m"] = big(r.m);
    doc["n"] = big(r.n);
    doc["e"] = r.e ? big(*r.e) : Json("none");
    doc["e_consistent"] = r.e_consistent;
    doc["v2_num"] = big(r.v2_num);
    doc["v2_den"] = big(r.v2_den);
    doc["bound"] = r.alpha - r.nu;
    doc["certified"] = r.certified;
    if (r.v2_s) {
      doc["r"] = big(*r.r);
      doc["s"] = big(*r.s);
      doc["v2_s"] = *r.v2_s;
    }
    emit(doc);
    return r.certified && r.e_consistent ? 0 : 1;
  }

  int lemma_delta_tilde() const {
    std::vector<Integer> d;
    for (const auto& item : split_list(o_.d)) d.push_back(parse_integer(item));
    const DeltaTildeReport r = delta_tilde_check(d, d.size(), parse_integer(o_.c0), parse_integer(o_.c), o_.alpha_nu);
    Json doc;
    Json terms = Json::array();
    Json partials = Json::array();
    for (const auto& v : r.terms) terms.push_back(big(v));
    for (const auto& v : r.partials) partials.push_back(big(v));
    doc["terms"] = terms;
    doc["partials"] = partials;
    doc["total"] = big(r.total);
    doc["modulus"] = big(r.modulus);
    doc["ok"] = r.ok;
    emit(doc);
    return r.ok ? 0 : 1;
  }

 private:
  bool variant_j() const {
    if (o_.variant == "j") return true;
    if (o_.variant == "plain") return false;
    fail(ErrorCode::SyntaxError, "--variant must be 'j' or 'plain'");
  }

  const Options& o_;
  std::ostream& out_;
  Caps caps_;
  ExecPolicy policy_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on dessins d'enfants, Belyi maps and Kummer towers", "dessinkit"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Structured output");
  app.add_flag("--serial", o.serial, "Use the serial reference kernels");
  app.add_option("--cap-group-order", o.cap_group_order, "Refuse groups larger than this");
  app.add_option("--cap-stage-size", o.cap_stage_size, "Largest m+n for a B_{m,n} stage");

  std::function<int(Runner&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (Runner::*fn)() const) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
    return sub;
  };

  CLI::App* dessin = app.add_subcommand("dessin", "Dessin invariants and isomorphism tests");
  dessin->require_subcommand(1);
  dessin->fallthrough();
  auto* info = leaf(dessin, "info", "Passport, genus and regular closure data", &Runner::dessin_info);
  info->add_option("dessin", o.path1, "File or gallery:k")->required();
  auto* iso = leaf(dessin, "iso", "Dessin isomorphism", &Runner::dessin_iso);
  iso->add_option("first", o.path1)->required();
  iso->add_option("second", o.path2)->required();
  auto* reg = leaf(dessin, "reg-iso", "Regular closure isomorphism", &Runner::dessin_reg_iso);
  reg->add_option("first", o.path1)->required();
  reg->add_option("second", o.path2)->required();
  auto* wit = leaf(dessin, "witness", "Separate two dessins with a word", &Runner::dessin_witness);
  wit->add_option("first", o.path1)->required();
  wit->add_option("second", o.path2)->required();
  wit->add_option("--word", o.word, "Witness word (default [x^-1 y^2 x, x y])");
  wit->add_option("--with", o.with_word, "Word tested for commutation (default y^2)");

  CLI::App* word = app.add_subcommand("word", "Free group words");
  word->require_subcommand(1);
  word->fallthrough();
  auto* weval = leaf(word, "eval", "Evaluate a word on a dessin", &Runner::word_eval);
  weval->add_option("dessin", o.path1)->required();
  weval->add_option("--word", o.word)->required();
  auto* wcomm = leaf(word, "commutes", "Does the word commute with another", &Runner::word_commutes);
  wcomm->add_option("dessin", o.path1)->required();
  wcomm->add_option("--word", o.word)->required();
  wcomm->add_option("--with", o.with_word, "Default y^2");

  CLI::App* gal = app.add_subcommand("gallery", "The six degree-36 conjugates");
  gal->require_subcommand(1);
  gal->fallthrough();
  leaf(gal, "list", "List the gallery", &Runner::gallery_list);
  auto* gexp = leaf(gal, "export", "Print one dessin file or write all six", &Runner::gallery_export);
  gexp->add_option("--k", o.k)->check(CLI::Range(1, 6));
  gexp->add_option("--out", o.out_dir);

  CLI::App* model = app.add_subcommand("model", "Local action models");
  model->require_subcommand(1);
  model->fallthrough();
  CLI::App* s31 = model->add_subcommand("sec31", "24-edge model");
  s31->fallthrough();
  s31->add_option("--k", o.k)->required();
  s31->add_flag("--trace", o.trace);
  s31->callback([&] { action = [](Runner& r) { return r.model(false); }; });
  CLI::App* s32 = model->add_subcommand("sec32", "8p-edge model");
  s32->fallthrough();
  s32->add_option("--p", o.p)->required();
  s32->add_option("--k", o.k)->required();
  s32->add_option("--variant", o.variant, "plain or j");
  s32->add_flag("--trace", o.trace);
  s32->callback([&] { action = [](Runner& r) { return r.model(true); }; });

  CLI::App* bel = app.add_subcommand("belyi", "Belyi polynomial calculus");
  bel->require_subcommand(1);
  bel->fallthrough();
  auto* bb = leaf(bel, "bmn", "The polynomial B_{m,n}", &Runner::belyi_bmn);
  bb->add_option("--m", o.m)->required();
  bb->add_option("--n", o.n)->required();
  auto* bred = leaf(bel, "reduce", "Send rational points to 0 with critical values in {0,1}", &Runner::belyi_reduce);
  bred->add_option("points", o.points);
  auto* bcrit = leaf(bel, "crit", "Critical values of a rational map", &Runner::belyi_crit);
  bcrit->add_option("map", o.map)->required();
  bcrit->add_option("--profile", o.profile, "Comma-separated values to propagate, inf allowed");
  auto* bst = leaf(bel, "sturm", "Count real roots in (lo, hi]", &Runner::belyi_sturm);
  bst->add_option("poly", o.poly)->required();
  bst->add_option("--lo", o.lo)->required();
  bst->add_option("--hi", o.hi)->required();
  auto* binc = leaf(bel, "increasing", "Certify f' > 0 on [lo, hi]", &Runner::belyi_increasing);
  binc->add_option("poly", o.poly)->required();
  binc->add_option("--lo", o.lo)->required();
  binc->add_option("--hi", o.hi)->required();

  CLI::App* tow = app.add_subcommand("tower", "Kummer tower arithmetic");
  tow->require_subcommand(1);
  tow->fallthrough();
  auto* tj = leaf(tow, "jinv", "j-invariant of a conjugate triple", &Runner::tower_jinv);
  tj->add_option("--p", o.p)->required();
  tj->add_option("--q", o.q)->required();
  tj->add_option("--gamma", o.gamma);
  tj->add_option("--i", o.i, "zeta exponent applied to t");
  tj->add_option("--u", o.u, "exponent applied to zeta");
  auto* td = leaf(tow, "distinct", "Are all conjugate j-invariants distinct", &Runner::tower_distinct);
  td->add_option("--p", o.p)->required();
  td->add_option("--q", o.q)->required();
  td->add_option("--gamma", o.gamma);

  CLI::App* lem = app.add_subcommand("lemma", "2-adic verifiers");
  lem->require_subcommand(1);
  lem->fallthrough();
  auto* l2 = leaf(lem, "two-adic", "Check v2(s) >= alpha - nu", &Runner::lemma_two_adic);
  l2->add_option("--poly", o.poly, "Integer polynomial P with beta1 = P/c")->required();
  l2->add_option("--c", o.c)->required();
  l2->add_option("--x0", o.x0, "gamma^(2p) q^2 directly");
  l2->add_option("--p", o.p);
  l2->add_option("--q", o.q);
  l2->add_option("--gamma", o.gamma);
  auto* ld = leaf(lem, "delta-tilde", "Partial sums of delta tilde mod 2^(alpha-nu)", &Runner::lemma_delta_tilde);
  ld->add_option("--d", o.d, "Comma-separated d_1..d_t")->required();
  ld->add_option("--c0", o.c0)->required();
  ld->add_option("--c", o.c)->required();
  ld->add_option("--alpha-nu", o.alpha_nu)->required();

  std::vector<std::string> argv_store{"dessinkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: SyntaxError: " << e.what() << "\n";
    return 2;
  }

  try {
    Runner runner(o, out);
    if (!action) {
      err << "error: SyntaxError: no command\n";
      return 2;
    }
    return action(runner);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_resource_error(e.code()) ? 3 : 2;
  } catch (const std::bad_alloc&) {
    err << "error: ResourceLimit: out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dessinkit::cli

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"

#include "derlab/acceptance.hpp"
#include "derlab/catalog.hpp"
#include "derlab/locder.hpp"
#include "derlab/tables.hpp"
#include "derlab/twolocal.hpp"

using namespace derlab;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string family;
  size_t n = 0;
  std::string alpha;
  std::string algebra_path;
  uint64_t seed = 1;
  size_t samples = 1000;
  std::string strata = "auto";  // auto | full | prefix
  std::string format = "table";
  std::string out;
  size_t min_n = 1;
  size_t max_n = 8;
  bool verify = false;
};

void add_common(CLI::App* cmd, Options& o, bool with_algebra = true) {
  if (with_algebra) {
    cmd->add_option("family", o.family, "catalog family id (e.g. mu0, mu1_1, A4, lam3, m21)");
    cmd->add_option("--n", o.n, "dimension for n-parameterized families");
    cmd->add_option("--alpha", o.alpha, "parameter value, e.g. 2, -1, i, 1/2+i");
    cmd->add_option("--algebra", o.algebra_path, "structure-constant file instead of a catalog id");
  }
  cmd->add_option("--seed", o.seed, "run seed");
  cmd->add_option("--samples", o.samples, "random sample count");
  cmd->add_option("--strata", o.strata, "case-analysis policy: full | prefix")
      ->check(CLI::IsMember({"auto", "full", "prefix"}));
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "json-like", "csv"}));
  cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
}

std::ostream& sink(const Options& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out);
  if (!file) throw CLI::RuntimeError("cannot open output file: " + o.out, 1);
  return file;
}

Algebra load_algebra(const Options& o) {
  if (!o.algebra_path.empty()) {
    std::ifstream in(o.algebra_path);
    if (!in) throw std::runtime_error("cannot read algebra file: " + o.algebra_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return catalog::parse_algebra(ss.str());
  }
  if (o.family.empty()) throw std::runtime_error("no algebra given: pass a family id or --algebra");
  catalog::CatalogId id{o.family, o.n, std::nullopt};
  if (!o.alpha.empty()) id.alpha = Scalar::parse(o.alpha);
  return catalog::build(id);
}

std::optional<StrataPolicy> policy_of(const Options& o) {
  if (o.strata == "full") return StrataPolicy::Full;
  if (o.strata == "prefix") return StrataPolicy::Prefix;
  return std::nullopt;
}

ordered_json matrix_json(const ScalarMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const Scalar& s : v) a.push_back(s.str());
  return a;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

int cmd_catalog(const Options& o, const std::string& action) {
  std::ofstream file;
  std::ostream& os = sink(o, file);
  if (action == "list") {
    if (o.format == "json-like") {
      ordered_json arr = ordered_json::array();
      for (const auto& f : catalog::list())
        arr.push_back({{"family", f.family}, {"arity", f.arity}, {"parameter", f.parameter}});
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& f : catalog::list()) {
        os << f.family << "\t" << f.arity;
        if (!f.parameter.empty()) os << "\t" << f.parameter;
        os << "\n";
      }
    }
    return 0;
  }
  Algebra a = load_algebra(o);
  if (o.format == "json-like") {
    ordered_json j{{"label", a.label()}, {"dim", a.dim()},
                   {"products", catalog::format_products(a)}};
    os << j.dump(2) << "\n";
  } else {
    os << "label: " << a.label() << "\ndim = " << a.dim() << "\n"
       << catalog::format_products(a);
  }
  return 0;
}

int cmd_der(const Options& o) {
  std::ofstream file;
  std::ostream& os = sink(o, file);
  Algebra a = load_algebra(o);
  DerivationSpace s(a);
  if (o.format == "json-like") {
    ordered_json basis = ordered_json::array();
    for (const auto& d : s.basis()) basis.push_back(matrix_json(d));
    ordered_json j{{"label", a.label()}, {"dim_der", s.dim()}, {"basis", basis}};
    os << j.dump(2) << "\n";
  } else {
    os << a.label() << "\ndim Der = " << s.dim() << "\n";
    for (size_t k = 0; k < s.dim(); ++k) {
      os << "D" << (k + 1) << ":";
      for (size_t j = 0; j < a.dim(); ++j) {
        Element ej(a.dim());
        ej[j] = Scalar(1);
        Vec img = s.basis()[k].apply(ej);
        bool nz = false;
        for (const auto& sc : img) nz |= !sc.is_zero();
        if (nz) os << "  e" << (j + 1) << " -> " << vec_str(img);
      }
      os << "\n";
    }
  }
  return 0;
}

int cmd_locder(const Options& o) {
  std::ofstream file;
  std::ostream& os = sink(o, file);
  Algebra a = load_algebra(o);
  LocalDerivationSpace l = locder_space(a, o.seed, 3, policy_of(o), /*verify=*/true);
  bool refuted = false, inconclusive = false;
  for (const auto& v : l.verdicts) {
    refuted |= v.kind == VerifyVerdict::Kind::Refuted;
    inconclusive |= v.kind == VerifyVerdict::Kind::Inconclusive;
  }
  if (o.format == "json-like") {
    ordered_json elems = ordered_json::array();
    for (size_t k = 0; k < l.dim(); ++k) {
      ordered_json e{{"matrix", matrix_json(l.basis[k])}};
      const auto& v = l.verdicts[k];
      e["status"] = v.kind == VerifyVerdict::Kind::Verified
                        ? "verified"
                        : (v.kind == VerifyVerdict::Kind::Refuted ? "refuted" : "inconclusive");
      e["full_coverage"] = v.full_coverage;
      if (v.certificate) {
        e["witness"] = vec_json(v.certificate->witness);
        e["system"] = matrix_json(v.certificate->system);
        e["rhs"] = vec_json(v.certificate->rhs);
      }
      elems.push_back(e);
    }
    ordered_json j{{"label", a.label()},
                   {"dim_locder", l.dim()},
                   {"refinement_points", l.refinement_points},
                   {"basis", elems}};
    os << j.dump(2) << "\n";
  } else {
    os << a.label() << "\ndim LocDer = " << l.dim() << "  ("
       << (l.all_verified() ? "all basis verified" : "NOT all basis verified") << ", "
       << l.refinement_points << " refinement points)\n";
    for (size_t k = 0; k < l.dim(); ++k) {
      const auto& v = l.verdicts[k];
      os << "Delta" << (k + 1) << ": "
         << (v.kind == VerifyVerdict::Kind::Verified
                 ? (v.full_coverage ? "verified (all zero-patterns)" : "verified (prefix strata)")
                 : (v.kind == VerifyVerdict::Kind::Refuted ? "REFUTED" : "inconclusive"))
         << "\n";
      if (v.certificate) os << "  witness x = " << vec_str(v.certificate->witness) << "\n";
    }
  }
  return refuted ? 2 : (inconclusive ? 2 : 0);
}

int cmd_twolocal(const Options& o) {
  std::ofstream file;
  std::ostream& os = sink(o, file);
  Algebra a = load_algebra(o);
  DerivationSpace s(a);
  RigidityVerdict rv = rigidity_check(a, 1);
  TwoLocalMap t = TwoLocalMap::f_construction(a, 1, a.dim());
  PairReport r = check_two_local(t, s, o.samples, o.seed);
  PairReport d = check_two_local_degenerate(t, s, std::max<size_t>(1, o.samples / 20), o.seed);
  auto w = additivity_witness(t, o.seed);
  if (o.format == "json-like") {
    ordered_json j{{"label", a.label()},
                   {"rigid_at_e1", rv.rigid},
                   {"pairs_tested", r.pairs_tested},
                   {"pairs_solvable", r.solvable},
                   {"degenerate_tested", d.pairs_tested},
                   {"degenerate_solvable", d.solvable}};
    if (w)
      j["additivity_witness"] = {{"x", vec_json(w->x)},
                                 {"y", vec_json(w->y)},
                                 {"nabla_x", vec_json(w->nabla_x)},
                                 {"nabla_y", vec_json(w->nabla_y)},
                                 {"nabla_sum", vec_json(w->nabla_sum)}};
    os << j.dump(2) << "\n";
  } else {
    os << a.label() << "\nrigid at e1: " << (rv.rigid ? "yes" : "no") << "\n"
       << r.solvable << "/" << r.pairs_tested << " random pairs solvable\n"
       << d.solvable << "/" << d.pairs_tested << " degenerate-pencil pairs solvable\n";
    if (w)
      os << "additivity witness: x = " << vec_str(w->x) << ", y = " << vec_str(w->y)
         << "; nabla(x)+nabla(y) != nabla(x+y)\n";
    else
      os << "no additivity witness found (map behaves additively on the search set)\n";
  }
  bool findings = r.solvable != r.pairs_tested || d.solvable != d.pairs_tested;
  return findings ? 2 : 0;
}

int cmd_tables(const Options& o) {
  std::ofstream file;
  std::ostream& os = sink(o, file);
  bool formula_mismatch = false, any_mismatch = false;
  struct Row {
    tables::SweepRow sw;
    size_t der, locder;
    tables::ExpectedDims want;
    std::string status;
  };
  std::vector<Row> rows;
  for (const auto& sw : tables::sweep(o.min_n, o.max_n)) {
    Algebra a = catalog::build(sw.id);
    size_t der = DerivationSpace(a).dim();
    LocalDerivationSpace l = locder_space(a, o.seed, 3, policy_of(o), o.verify);
    auto want = tables::expected(sw.id);
    auto corr = tables::corrected(sw.id);
    bool match = der == want->dim_der && l.dim() == want->dim_locder;
    bool match_corr = corr && der == corr->dim_der && l.dim() == corr->dim_locder;
    std::string status = match ? "ok"
                         : match_corr
                             ? "corrected"
                             : (tables::is_formula_family(sw.id.family) ? "MISMATCH" : "flagged");
    if (!match && !match_corr) {
      any_mismatch = true;
      if (tables::is_formula_family(sw.id.family)) formula_mismatch = true;
    }
    rows.push_back({sw, der, l.dim(), *want, status});
  }
  if (o.format == "csv") {
    os << "family,n,alpha,dim_der_computed,dim_der_expected,dim_locder_computed,"
          "dim_locder_expected,status\n";
    for (const Row& r : rows)
      os << r.sw.id.family << "," << r.sw.id.n << "," << r.sw.alpha_display << "," << r.der << ","
         << r.want.dim_der << "," << r.locder << "," << r.want.dim_locder << "," << r.status
         << "\n";
  } else if (o.format == "json-like") {
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows)
      arr.push_back({{"family", r.sw.id.family},
                     {"n", r.sw.id.n},
                     {"alpha", r.sw.alpha_display},
                     {"dim_der_computed", r.der},
                     {"dim_der_expected", r.want.dim_der},
                     {"dim_locder_computed", r.locder},
                     {"dim_locder_expected", r.want.dim_locder},
                     {"status", r.status}});
    os << arr.dump(2) << "\n";
  } else {
    os << "family    n  alpha  Der(got/want)  LocDer(got/want)  status\n";
    for (const Row& r : rows) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%-9s %2zu  %-5s  %3zu / %-3zu      %3zu / %-3zu         %s\n",
                    r.sw.id.family.c_str(), r.sw.id.n, r.sw.alpha_display.c_str(), r.der,
                    r.want.dim_der, r.locder, r.want.dim_locder, r.status.c_str());
      os << buf;
    }
  }
  return formula_mismatch ? 1 : (any_mismatch ? 2 : 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact derivation / local-derivation / 2-local-derivation computations for "
               "structure-constant algebras"};
  app.require_subcommand(1);
  Options o;

  auto* cat = app.add_subcommand("catalog", "list families or show one algebra's products");
  std::string action = "list";
  cat->add_option("action", action, "list | show")->check(CLI::IsMember({"list", "show"}));
  add_common(cat, o);

  auto* der = app.add_subcommand("der", "derivation space of an algebra");
  add_common(der, o);
  auto* locder = app.add_subcommand("locder", "local derivations: candidate space + verification");
  add_common(locder, o);
  auto* twolocal = app.add_subcommand("twolocal", "2-local checks: rigidity, pairwise solvability");
  add_common(twolocal, o);

  auto* tab = app.add_subcommand("tables", "reproduce the expected dimension tables");
  add_common(tab, o, false);
  tab->add_option("--min-n", o.min_n, "smallest n for n-parameterized families");
  tab->add_option("--max-n", o.max_n, "largest n for n-parameterized families");
  tab->add_flag("--verify", o.verify, "run per-element verification of every LocDer basis");

  auto* check = app.add_subcommand("check", "run the full reproduction suite");
  check->add_option("--out", o.out, "write the report to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat->parsed()) return cmd_catalog(o, action);
    if (der->parsed()) return cmd_der(o);
    if (locder->parsed()) return cmd_locder(o);
    if (twolocal->parsed()) return cmd_twolocal(o);
    if (tab->parsed()) return cmd_tables(o);
    if (check->parsed()) {
      std::ofstream file;
      std::ostream& os = sink(o, file);
      return acceptance::run(os) == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

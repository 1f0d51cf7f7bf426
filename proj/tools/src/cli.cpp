#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "qrecip/error.hpp"
#include "qrecip/modular.hpp"
#include "qrecip/represent.hpp"
#include "qrecip/symbols.hpp"

namespace qrecip::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json observations(const std::vector<Observation>& obs) {
  ordered_json j = ordered_json::object();
  for (const auto& o : obs) j[o.label] = o.value;
  return j;
}

ordered_json summary_object(const Summary& s) {
  return {{"total", s.total},
          {"applicable", s.applicable},
          {"matched", s.matched},
          {"counterexamples", s.mismatched},
          {"variant_dependent", s.variant_dependent},
          {"skipped_structural", s.skipped_structural},
          {"skipped_no_hypothesis", s.skipped_no_hypothesis},
          {"explore_applicable", s.explore_applicable},
          {"explore_matched", s.explore_matched},
          {"explore_mismatched", s.explore_mismatched}};
}

std::string human_record(const VerifyRecord& rec) {
  std::ostringstream os;
  os << check_name(rec.check_id) << " p=" << rec.p;
  if (rec.q != 0) os << " q=" << rec.q;
  if (rec.ts) os << " c=" << rec.ts->c << " d=" << rec.ts->d;
  if (rec.rep) os << " x=" << rec.rep->x << " y=" << rec.rep->y;
  if (rec.variant) os << " (a,b)=(" << rec.variant->first << "," << rec.variant->second << ")";
  if (rec.exponent) os << " exp=" << *rec.exponent;
  for (std::size_t i = 0; i < rec.predicted.size(); ++i) {
    os << " " << rec.predicted[i].label << ": " << rec.predicted[i].value;
    if (i < rec.actual.size()) os << " vs " << rec.actual[i].value;
  }
  if (rec.explore_mode) os << " [explore]";
  if (rec.variant_dependent) os << " [variant-dependent]";
  os << (rec.matched ? " ok" : " MISMATCH");
  if (!rec.note.empty()) os << " (" << rec.note << ")";
  return os.str();
}

std::string human_summary(const Summary& s) {
  std::ostringstream os;
  os << "records " << s.total << ", applicable " << s.applicable << ", matched " << s.matched
     << ", counterexamples " << s.mismatched << ", variant-dependent " << s.variant_dependent
     << ", skipped (structure) " << s.skipped_structural << ", skipped (hypotheses) "
     << s.skipped_no_hypothesis;
  if (s.explore_applicable > 0) {
    os << ", explore " << s.explore_matched << "/" << s.explore_applicable << " matched";
  }
  return os.str();
}

}  // namespace

std::string record_json(const VerifyRecord& rec) {
  ordered_json j;
  j["check"] = std::string(check_name(rec.check_id));
  j["p"] = rec.p;
  j["q"] = rec.q;
  j["c"] = rec.ts ? ordered_json(rec.ts->c) : ordered_json(nullptr);
  j["d"] = rec.ts ? ordered_json(rec.ts->d) : ordered_json(nullptr);
  j["x"] = rec.rep ? ordered_json(rec.rep->x) : ordered_json(nullptr);
  j["y"] = rec.rep ? ordered_json(rec.rep->y) : ordered_json(nullptr);
  j["hyp_cxd"] = rec.hyp.gcd_c_xd_ok;
  j["hyp_d0xc"] = rec.hyp.gcd_d0_xc_ok;
  j["applicable"] = rec.applicable;
  j["exponent"] = rec.exponent ? ordered_json(*rec.exponent) : ordered_json(nullptr);
  j["predicted"] = observations(rec.predicted);
  j["actual"] = observations(rec.actual);
  j["matched"] = rec.matched;
  j["explore"] = rec.explore_mode;
  if (rec.params.b_param) j["b"] = *rec.params.b_param;
  if (rec.params.a_param) j["a"] = *rec.params.a_param;
  if (rec.params.alpha) j["alpha"] = *rec.params.alpha;
  if (rec.variant) j["variant"] = {rec.variant->first, rec.variant->second};
  j["variant_dependent"] = rec.variant_dependent;
  j["note"] = rec.note;
  return j.dump();
}

std::string summary_json(const Summary& s) {
  ordered_json j;
  j["summary"] = summary_object(s);
  return j.dump();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quartic residue symbols, prime representations, Lucas sequences and congruence scans"};
  app.require_subcommand(1);

  auto* symbol = app.add_subcommand("symbol", "Residue symbols");
  symbol->require_subcommand(1);
  std::int64_t are = 0, aim = 0, bre = 0, bim = 0;
  auto* quartic = symbol->add_subcommand("quartic", "Quartic Jacobi symbol (a / b)_4, printed as i^k");
  quartic->add_option("are", are)->required();
  quartic->add_option("aim", aim)->required();
  quartic->add_option("bre", bre)->required();
  quartic->add_option("bim", bim)->required();
  std::int64_t qa = 0, qm = 0;
  auto* quadratic = symbol->add_subcommand("quadratic", "Jacobi symbol (a / m) for odd m");
  quadratic->add_option("a", qa)->required();
  quadratic->add_option("m", qm)->required();

  auto* represent = app.add_subcommand("represent", "Prime representations");
  represent->require_subcommand(1);
  std::int64_t rp = 0, rq = 0;
  auto* two = represent->add_subcommand("two-squares", "p = c^2 + d^2");
  two->add_option("p", rp)->required();
  auto* form = represent->add_subcommand("form", "p = x^2 + q y^2");
  form->add_option("p", rp)->required();
  form->add_option("q", rq)->required();

  std::int64_t lb = 0, lc = 0, ln = 0, lp = 0;
  auto* lucas = app.add_subcommand("lucas", "U_n(b, c) and V_n(b, c) modulo an odd prime p");
  lucas->add_option("b", lb)->required();
  lucas->add_option("c", lc)->required();
  lucas->add_option("n", ln)->required()->check(CLI::NonNegativeNumber);
  lucas->add_option("p", lp)->required();

  std::vector<std::string> check_names;
  SuiteOptions opts;
  bool json = false, verbose = false;
  auto* verify = app.add_subcommand("verify", "Scan congruence checks over a prime range");
  verify->add_option("--check", check_names, "Check ids, or 'all'")->required();
  verify->add_option("--pmax", opts.p_max)->required();
  verify->add_option("--pmin", opts.p_min);
  verify->add_option("--q", opts.grid.q);
  verify->add_option("--b", opts.grid.b);
  verify->add_option("--a", opts.grid.a);
  verify->add_option("--alpha", opts.grid.alpha);
  verify->add_flag("--explore", opts.explore, "Waive the gcd hypotheses");
  verify->add_option("--jobs", opts.jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "JSON-lines output");
  verify->add_flag("--verbose", verbose, "Print matching records too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*quartic) {
      const GaussInt beta{bre, bim};
      if (norm(beta) % 2 == 0) throw DomainError("the modulus must have odd norm");
      const UnitNormalized nb = normalize_odd(beta);
      const I4 v = quartic_jacobi({are, aim}, nb.w);
      out << "i^" << v.k << "\n";
    } else if (*quadratic) {
      out << jacobi2(qa, qm) << "\n";
    } else if (*two) {
      const TwoSquares ts = two_squares(rp);
      out << "c=" << ts.c << " d=" << ts.d << " r=" << ts.r << " d0=" << ts.d0 << "\n";
    } else if (*form) {
      if (!is_prime(rp)) throw DomainError("p must be prime");
      const auto reps = quad_reps(rp, rq);
      if (reps.empty()) out << "none\n";
      for (const auto& r : reps) {
        out << "x=" << r.x << " y=" << r.y << " s=" << r.s << " x0=" << r.x0 << " t=" << r.t
            << " y0=" << r.y0 << "\n";
      }
    } else if (*lucas) {
      if (lp < 3 || !is_prime(lp)) throw DomainError("p must be an odd prime");
      const LucasPair uv = lucas_uv_mod({lb, lc}, ln, lp);
      out << "U=" << uv.u << " V=" << uv.v << "\n";
    } else if (*verify) {
      std::vector<CheckId> ids;
      for (const auto& name : check_names) {
        if (name == "all") {
          ids = all_check_ids();
          break;
        }
        const auto id = parse_check_id(name);
        if (!id) {
          err << "unknown check id: " << name << "\n" << verify->help();
          return kExitUsage;
        }
        ids.push_back(*id);
      }
      if (opts.p_min > opts.p_max) throw DomainError("--pmin exceeds --pmax");
      const Summary s = run_suite(ids, opts, [&](const VerifyRecord& rec) {
        if (json) {
          out << record_json(rec) << "\n";
        } else if (verbose || rec.is_counterexample() || rec.variant_dependent) {
          out << human_record(rec) << "\n";
        }
      });
      out << (json ? summary_json(s) : human_summary(s)) << "\n";
      return s.mismatched > 0 ? kExitCounterexample : kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qrecip"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qrecip::cli

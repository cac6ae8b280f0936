#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "jsyz/fixtures.hpp"
#include "jsyz/parse.hpp"
#include "jsyz/report_json.hpp"
#include "suite.hpp"

using namespace jsyz;

namespace {

using Q = Rational;
using AnyArrangement = std::variant<LineArrangement<Q>, LineArrangement<ModP>>;

struct Config {
  std::string input;
  std::string field = "Q";
  int primes = 3;
  std::uint64_t seed = 1;
  bool json_out = false;
  bool exact = false;
  std::string point;
  std::string apex;
  std::string filter;
  int corrupt = 0;

  Backend backend() const { return exact ? Backend{true, primes, seed} : Backend::modular(primes, seed); }
  FieldTag tag() const { return parse_field_tag(field); }
};

std::optional<std::string> file_contents(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Fixture> as_fixture(const std::string& input) {
  const std::string base = input.substr(0, input.find(':'));
  for (const auto& n : fixture_names())
    if (n.substr(0, n.find(':')) == base) return fixture(input);
  return std::nullopt;
}

bool looks_like_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool any = false;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.find_first_not_of("0123456789/-+ \t\r") != std::string::npos) return false;
    any = true;
  }
  return any;
}

// three rationals separated by spaces, commas or colons, optional parentheses
template <class S>
ProjPoint<S> parse_point(const std::string& text, const field_t<S>& F) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == ':' || c == '(' || c == ')') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<S> v;
  for (std::string tok; in >> tok;) v.push_back(F.from_rational(parse_rational(tok)));
  if (v.size() != 3) throw InputError("a point needs three coordinates, got '" + text + "'");
  return make_point<S>({v[0], v[1], v[2]});
}

template <class S>
LineArrangement<ModP> reduce_arrangement(const LineArrangement<S>& A, const PrimeField& F) {
  if constexpr (std::is_same_v<S, ModP>) {
    if (A.field() == F) return A;
    throw InputError("arrangement lives over " + A.field().tag() + ", not " + F.tag());
  } else {
    return parse_arrangement(format_arrangement(A), F);
  }
}

AnyArrangement load_arrangement(const Config& cfg) {
  const FieldTag tag = cfg.tag();
  if (auto fx = as_fixture(cfg.input)) {
    if (fx->arrangement) {
      if (tag.is_rational()) return *fx->arrangement;
      return reduce_arrangement(*fx->arrangement, PrimeField(tag.prime));
    }
    if (fx->split_arrangement) {
      if (!tag.is_rational() && tag.prime != fx->split_arrangement->field().prime())
        throw InputError("fixture " + cfg.input + " has its lines over " + fx->split_arrangement->field().tag());
      return *fx->split_arrangement;
    }
    throw InputError("fixture " + cfg.input + " is not a line arrangement");
  }
  const auto text = file_contents(cfg.input);
  if (!text) throw InputError("no arrangement file or fixture named '" + cfg.input + "'");
  if (tag.is_rational()) return parse_arrangement(*text);
  return parse_arrangement(*text, PrimeField(tag.prime));
}

AnyPoly load_poly(const Config& cfg) {
  const FieldTag tag = cfg.tag();
  if (auto fx = as_fixture(cfg.input)) {
    if (tag.is_rational()) return fx->f;
    return reduce_mod(fx->f, PrimeField(tag.prime));
  }
  const std::string text = file_contents(cfg.input).value_or(cfg.input);
  if (looks_like_arrangement(text) && text.find('\n') != std::string::npos) {
    return std::visit([](const auto& A) -> AnyPoly { return A.polynomial(); },
                      tag.is_rational() ? AnyArrangement(parse_arrangement(text))
                                        : AnyArrangement(parse_arrangement(text, PrimeField(tag.prime))));
  }
  try {
    return poly_parse(text, tag);
  } catch (const ParseError& e) {
    throw InputError("'" + cfg.input + "' is not a fixture, a file or a polynomial (" + e.what() + ")");
  }
}

AnyProductSpec load_product(const Config& cfg, bool need_members) {
  const FieldTag tag = cfg.tag();
  if (auto fx = as_fixture(cfg.input)) {
    if (!fx->pencil) throw InputError("fixture " + cfg.input + " has no pencil");
    PencilProductSpec<Q> spec = fx->product ? *fx->product : PencilProductSpec<Q>{*fx->pencil, {}, std::nullopt};
    if (need_members && !fx->product) throw InputError("fixture " + cfg.input + " is a bare pencil, not a product");
    if (tag.is_rational()) return spec;
    return parse_pencil_spec([&] {
      json j = to_json(spec);
      j["field"] = tag.str();
      return j;
    }());
  }
  const auto text = file_contents(cfg.input);
  if (!text) throw InputError("no pencil spec file or fixture named '" + cfg.input + "'");
  return parse_pencil_spec(*text);
}

void emit(const Config& cfg, const json& j, const std::vector<std::pair<std::string, std::string>>& table) {
  if (cfg.json_out) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, v] : table) w = std::max(w, k.size());
  for (const auto& [k, v] : table) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

std::string pair_text(const std::optional<std::pair<int, int>>& e) {
  return e ? "(" + std::to_string(e->first) + ", " + std::to_string(e->second) + ")" : "-";
}

template <class S>
std::vector<std::pair<std::string, std::string>> report_rows(const FreenessReport<S>& r) {
  return {{"degree", std::to_string(r.d)},
          {"mdr", std::to_string(r.mdr)},
          {"tau", std::to_string(r.tau)},
          {"class", to_string(r.cls)},
          {"exponents", pair_text(r.exponents)},
          {"du Plessis-Wall bound", std::to_string(r.bound.value) + " (" + r.bound.branch + ")"},
          {"certificate degree", std::to_string(r.certificate.degree)},
          {"certificate a", r.certificate.a.to_string()},
          {"certificate b", r.certificate.b.to_string()},
          {"certificate c", r.certificate.c.to_string()},
          {"backend", r.backend.name()},
          {"field", r.field}};
}

int cmd_analyze(const Config& cfg) {
  std::visit(
      [&](const auto& f) {
        const auto r = classify(f, cfg.backend());
        emit(cfg, to_json(r), report_rows(r));
      },
      load_poly(cfg));
  return 0;
}

int cmd_arrangement(const Config& cfg, const std::string& sub) {
  std::visit(
      [&](const auto& A) {
        using S = std::decay_t<decltype(A.lines().front().cov[0])>;
        const auto L = lattice(A);
        if (sub == "lattice") {
          std::map<int, int> counts;
          for (const auto& p : L.points) ++counts[p.multiplicity()];
          std::vector<std::pair<std::string, std::string>> rows{{"lines", std::to_string(A.size())},
                                                                {"points", std::to_string(L.points.size())}};
          for (auto it = counts.rbegin(); it != counts.rend(); ++it)
            rows.emplace_back("points of multiplicity " + std::to_string(it->first), std::to_string(it->second));
          rows.emplace_back("sum (m_p - 1)^2", std::to_string(tau_combinatorial(L)));
          emit(cfg, to_json(L, A.size()), rows);
        } else if (sub == "trichotomy") {
          const ProjPoint<S> p = cfg.point.empty() ? [&] {
            for (const auto& q : L.points)
              if (q.multiplicity() == L.max_multiplicity) return q.point;
            throw InputError("arrangement has no intersection point");
          }()
                                                   : parse_point<S>(cfg.point, A.field());
          const auto t = trichotomy(A, p, cfg.backend());
          json j = to_json(t);
          j["point"] = to_string(p);
          emit(cfg, j,
               {{"point", to_string(p)},
                {"d", std::to_string(t.d)},
                {"m", std::to_string(t.m)},
                {"mdr", std::to_string(t.r)},
                {"tau", std::to_string(t.tau)},
                {"case", std::to_string(t.case_id)},
                {"exponents", pair_text(t.exponents)},
                {"description", t.description}});
        } else if (sub == "cone") {
          if (cfg.apex.empty()) throw InputError("cone needs --apex");
          const auto C = cone_construction(A, parse_point<S>(cfg.apex, A.field()));
          const auto r = classify(C.B.polynomial(), cfg.backend());
          const bool agrees =
              r.cls == CurveClass::free && r.exponents == C.expected_exponents && r.tau == C.expected_tau;
          json j{{"e", C.e},
                 {"m", C.m},
                 {"d", C.d},
                 {"expected_exponents", json::array({C.expected_exponents.first, C.expected_exponents.second})},
                 {"expected_tau", C.expected_tau},
                 {"agrees", agrees},
                 {"report", to_json(r)},
                 {"arrangement", format_arrangement(C.B)}};
          emit(cfg, j,
               {{"lines of A", std::to_string(C.e)},
                {"added lines", std::to_string(C.m)},
                {"class", to_string(r.cls)},
                {"exponents", pair_text(r.exponents)},
                {"expected", pair_text(C.expected_exponents)},
                {"tau", std::to_string(r.tau)},
                {"expected tau", std::to_string(C.expected_tau)}});
          if (!agrees) throw InconsistencyError("cone construction is not free with the expected exponents");
        } else if (sub == "bound") {
          const auto r = classify(A.polynomial(), cfg.backend());
          const int m = L.max_multiplicity;
          const auto mb = multiplicity_bound_check(r.d, m, r.mdr);
          const auto lb = mdr_lower_bound_check(r.d, m, r.mdr);
          json j{{"d", r.d}, {"m", m}, {"mdr", r.mdr}, {"multiplicity_bound", to_json(mb)}, {"mdr_lower_bound", to_json(lb)}};
          std::vector<std::pair<std::string, std::string>> rows{
              {"d", std::to_string(r.d)},
              {"m", std::to_string(m)},
              {"mdr", std::to_string(r.mdr)},
              {"m >= 2d/(mdr+2)", mb.lhs.get_str() + " >= " + mb.rhs.get_str() + (mb.equality ? " (equality)" : "")},
              {"mdr >= 2d/m - 2", lb.lhs.get_str() + " >= " + lb.rhs.get_str()}};
          if (r.exponents && (r.cls == CurveClass::free || r.cls == CurveClass::nearly_free)) {
            const bool gap = exponent_gap_check(r.cls, *r.exponents, m);
            j["exponent_gap"] = gap;
            rows.emplace_back("exponent gap", gap ? "holds" : "fails");
            if (!gap) throw InconsistencyError("exponent gap condition fails");
          }
          emit(cfg, j, rows);
          if (!mb.ok || !lb.ok) throw InconsistencyError("multiple-point bound violated");
        } else {
          throw InputError("unknown arrangement subcommand " + sub);
        }
      },
      load_arrangement(cfg));
  return 0;
}

int cmd_pencil(const Config& cfg, const std::string& sub) {
  std::visit(
      [&](const auto& spec) {
        const auto& P = spec.pencil;
        if (sub == "discriminant") {
          const auto D = discriminant(P, cfg.seed);
          const auto g = genericity_check(P, cfg.seed);
          const auto tm = total_mu_check(P, cfg.backend(), cfg.seed);
          json j = to_json(D);
          j["genericity"] = to_json(g);
          j["total_mu"] = to_json(tm);
          std::string mults;
          for (const auto& root : D.roots)
            mults += (mults.empty() ? "" : ", ") + (root.at_infinity ? std::string("(0:1)") : root.factor.to_string("t")) +
                     " ^" + std::to_string(root.multiplicity);
          emit(cfg, j,
               {{"degree", std::to_string(D.degree)},
                {"D(u,v)", D.binary_text()},
                {"roots", mults},
                {"sum mu", std::to_string(D.sum_mu)},
                {"distinct roots", std::to_string(D.distinct_roots)},
                {"generic", g.generic() ? "yes" : "no"}});
        } else if (sub == "classify") {
          if (spec.h) {
            const auto c = thm13_trichotomy(spec, cfg.backend());
            const auto r = classify(build_product(spec), cfg.backend());
            json j{{"case", to_json(c)}, {"report", to_json(r)}};
            auto rows = report_rows(r);
            rows.insert(rows.begin(), {"pencil case", std::to_string(c.case_id) + ": " + c.description});
            emit(cfg, j, rows);
          } else {
            const auto c = thm11_trichotomy(spec, cfg.backend());
            json j{{"case", to_json(c)}};
            std::vector<std::pair<std::string, std::string>> rows{
                {"pencil case", std::to_string(c.case_id) + ": " + c.description}};
            if (P.k() >= 2 && spec.m() >= 3) {
              const auto v = thmPEN_classify(spec, cfg.backend(), cfg.seed);
              j["criterion"] = to_json(v);
              rows.emplace_back("all singular members chosen", v.condition_a ? "yes" : "no");
              rows.emplace_back("member tau sum", std::to_string(v.member_tau_sum));
              rows.emplace_back("condition holds", v.condition1 ? "yes" : "no");
              for (auto& row : report_rows(v.report)) rows.push_back(row);
            } else {
              const auto r = classify(build_product(spec), cfg.backend());
              j["report"] = to_json(r);
              for (auto& row : report_rows(r)) rows.push_back(row);
            }
            emit(cfg, j, rows);
          }
        } else if (sub == "syzygy") {
          const auto f = build_product(spec);
          const auto s = spec.h ? lemma2_syzygy(P, *spec.h, spec.m(), f) : wedge_syzygy(P, f);
          const bool ok = verify_syzygy(f, s);
          const bool prim = is_primitive(s);
          json j{{"certificate", to_json(s)}, {"verified", ok}, {"primitive", prim}, {"f", f.to_string()}};
          emit(cfg, j,
               {{"degree", std::to_string(s.degree)},
                {"a", s.a.to_string()},
                {"b", s.b.to_string()},
                {"c", s.c.to_string()},
                {"verified", ok ? "yes" : "no"},
                {"primitive", prim ? "yes" : "no"}});
        } else {
          throw InputError("unknown pencil subcommand " + sub);
        }
      },
      load_product(cfg, sub != "discriminant"));
  return 0;
}

int cmd_suite(const Config& cfg) {
  suite::Options opt{cfg.backend(), cfg.filter, cfg.corrupt};
  bool all = true;
  json results = json::array();
  auto report = [&](const suite::CriterionResult& r) {
    all = all && r.pass;
    if (cfg.json_out) {
      results.push_back({{"id", r.info.id}, {"name", r.info.name}, {"group", r.info.group}, {"pass", r.pass},
                         {"detail", r.detail}});
    } else {
      std::cout << suite::format_line(r) << std::endl;
    }
  };
  const auto res = suite::run(opt, report);
  if (cfg.json_out) {
    std::cout << json{{"criteria", results}, {"all_pass", all}}.dump(2) << "\n";
  } else {
    long passed = std::count_if(res.begin(), res.end(), [](const auto& r) { return r.pass; });
    std::cout << passed << "/" << res.size() << " criteria passed\n";
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian syzygies, freeness and Tjurina numbers of plane curves and line arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--field", cfg.field, "Q or Fp:<prime>")->capture_default_str();
  app.add_option("--primes", cfg.primes, "primes voting on each rank over Q")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for primes and random coordinate changes")->capture_default_str();
  app.add_flag("--json", cfg.json_out, "print JSON instead of a table");
  app.add_flag("--exact", cfg.exact, "rational elimination instead of modular voting");

  auto* analyze = app.add_subcommand("analyze", "mdr, tau and freeness of a curve");
  analyze->add_option("input", cfg.input, "fixture name, file, or polynomial text")->required();

  auto* arr = app.add_subcommand("arrangement", "line arrangement tools");
  arr->require_subcommand(1);
  std::string arr_sub;
  const std::vector<std::pair<const char*, const char*>> arr_verbs{
      {"lattice", "intersection points and their multiplicities"},
      {"trichotomy", "multiple-point case analysis at a point (default: a point of maximal multiplicity)"},
      {"cone", "add the lines joining an apex to every intersection point and classify"},
      {"bound", "multiplicity and mdr lower bounds and the exponent gap"}};
  for (const auto& [name, help] : arr_verbs) {
    auto* s = arr->add_subcommand(name, help);
    s->add_option("input", cfg.input, "fixture name or arrangement file")->required();
    if (std::string(name) == "trichotomy") s->add_option("--point", cfg.point, "intersection point, e.g. '0 1 0'");
    if (std::string(name) == "cone") s->add_option("--apex", cfg.apex, "apex off the arrangement")->required();
    s->callback([&arr_sub, name] { arr_sub = name; });
  }

  auto* pen = app.add_subcommand("pencil", "pencil tools");
  pen->require_subcommand(1);
  std::string pen_sub;
  const std::vector<std::pair<const char*, const char*>> pen_verbs{
      {"discriminant", "discriminant of the pencil with genericity and total Milnor number checks"},
      {"classify", "freeness verdict and case analysis for a product of pencil members"},
      {"syzygy", "explicit syzygy from the pencil, verified against f"}};
  for (const auto& [name, help] : pen_verbs) {
    auto* s = pen->add_subcommand(name, help);
    s->add_option("input", cfg.input, "fixture name or pencil JSON file")->required();
    s->callback([&pen_sub, name] { pen_sub = name; });
  }

  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance criteria");
  suite_cmd->add_option("--filter", cfg.filter, "group, criterion number or name fragment");
  suite_cmd->add_option("--corrupt", cfg.corrupt, "perturb the fixtures of one criterion");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*arr) return cmd_arrangement(cfg, arr_sub);
    if (*pen) return cmd_pencil(cfg, pen_sub);
    if (*suite_cmd) return cmd_suite(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

// ddca: command-line front end. Artifacts go to --out (or stdout); exit
// status is 0 on success, 1 when a requested verification fails, 2 on
// usage errors and 10 + code for engine errors.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ddca/errors.hpp"
#include "ddca/expr.hpp"
#include "ddca/guay.hpp"
#include "ddca/interp.hpp"
#include "ddca/parallel.hpp"
#include "ddca/serialize.hpp"
#include "ddca/suites.hpp"
#include "ddca/vlrep.hpp"

using namespace ddca;

namespace {

struct Options {
  int n = 3, r = 2;
  std::string t, k;
  int threads = 1;
  std::string out;
  bool pretty = false;
  std::string cache_dir;
  bool no_cache = false;
  int max_weight = 3;
};

std::optional<Rational> rational_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rational::parse(text);
}

ParamPoly param(const std::string& text, const ParamPoly& symbolic) {
  auto v = rational_option(text);
  return v ? ParamPoly(*v) : symbolic;
}

ContextPtr context(const Options& o, int n, int r) {
  return AlgebraContext::get(n, r, param(o.t, ParamPoly::t()), param(o.k, ParamPoly::k()));
}

ParamPoly specialize_tk(const Options& o, const ParamPoly& c) {
  auto tv = rational_option(o.t), kv = rational_option(o.k);
  if (!tv && !kv) return c;
  ParamPoly tsub = tv ? ParamPoly(*tv) : ParamPoly::t(), ksub = kv ? ParamPoly(*kv) : ParamPoly::k();
  return c.compose(tsub, ksub, ParamPoly::K());
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + o.out);
}

void emit(const Options& o, const json& j) { emit(o, dump(j, o.pretty)); }

std::optional<json> read_json_file(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return std::nullopt;
  std::ifstream f(arg);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, arg + ": " + e.what());
  }
}

// Moves an element into the context selected by --t/--k.
CherednikElement rebase(const Options& o, const CherednikElement& a) {
  if (o.t.empty() && o.k.empty()) return a;
  CherednikElement out(context(o, a.n(), a.r()));
  for (const auto& [m, c] : a.terms()) out.add_term(m, specialize_tk(o, c));
  return out;
}

SphericalElement rebase(const Options& o, const SphericalElement& b) {
  if (o.t.empty() && o.k.empty()) return b;
  SphericalElement out(context(o, b.n(), b.r()));
  for (const auto& [m, c] : b.coords()) out.add(m, specialize_tk(o, c));
  return out;
}

// An operand: a JSON file (element or spherical element) or an expression.
struct Operand {
  std::optional<CherednikElement> element;
  std::optional<SphericalElement> spherical;
};

Operand operand(const Options& o, const std::string& arg) {
  Operand op;
  if (auto j = read_json_file(arg)) {
    const std::string format = j->value("format", std::string());
    if (format == "ddca-spherical")
      op.spherical = rebase(o, spherical_from_json(*j));
    else
      op.element = rebase(o, element_from_json(*j));
  } else {
    op.element = parse_element(arg, context(o, o.n, o.r));
  }
  return op;
}

SphericalElement as_spherical(const Operand& op) { return op.spherical ? *op.spherical : sandwich(*op.element); }

json expansion_json(const TExpansion& ex, int n, int r) {
  return json{{"format", "ddca-t-expansion"}, {"version", kSerialVersion}, {"n", n}, {"r", r},
              {"terms", to_json(ex, r)}};
}

InterpOptions interp_options(const Options& o) {
  InterpOptions io;
  io.threads = o.threads;
  if (o.no_cache) return io;
  std::string dir = o.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("DDCA_CACHE_DIR")) dir = env;
  if (!dir.empty()) io.cache_dir = dir;
  return io;
}

json table_json(const Options& o, StructureConstantTable table) {
  for (auto& [m, c] : table.entries) c = specialize_tk(o, c);
  return json::parse(table_to_text(table));
}

json report_list(const std::vector<json>& reports, bool& pass) {
  json list = json::array();
  for (const auto& r : reports) {
    pass = pass && r.at("pass").get<bool>();
    list.push_back(r);
  }
  return json{{"format", "ddca-report"}, {"version", kSerialVersion}, {"pass", pass}, {"reports", list}};
}

Matrix matrix_option(const std::string& text, int r) {
  // "id", "[a,b]" or a nested list of rationals
  if (text == "id" || (text.size() > 2 && text[1] != '[')) return Matrix::from_label(r, parse_label(r, text));
  Matrix m(r);
  try {
    json j = json::parse(text);
    if (!j.is_array() || static_cast<int>(j.size()) != r) fail(ErrorCode::ParseError, "matrix needs r rows");
    for (int a = 0; a < r; ++a) {
      const auto& row = j[static_cast<std::size_t>(a)];
      if (!row.is_array() || static_cast<int>(row.size()) != r) fail(ErrorCode::ParseError, "matrix needs r columns");
      for (int b = 0; b < r; ++b) {
        const auto& v = row[static_cast<std::size_t>(b)];
        m.at(a, b) = v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long>());
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return m;
}

int verification_status(bool pass) { return pass ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in extended Cherednik algebras and their rank-free limit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--n", o.n, "rank n (number of sites)")->check(CLI::Range(1, 16));
  app.add_option("--r", o.r, "matrix size r")->check(CLI::Range(1, 15));
  app.add_option("--t", o.t, "numeric value for t, as p/q (default: symbolic)");
  app.add_option("--k", o.k, "numeric value for k, as p/q (default: symbolic)");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "output file (default: stdout)");
  app.add_flag("--pretty", o.pretty, "indented output");
  app.add_option("--cache-dir", o.cache_dir, "structure-constant cache (default: $DDCA_CACHE_DIR)");
  app.add_flag("--no-cache", o.no_cache, "bypass the cache");
  app.add_option("--max-weight", o.max_weight, "weight bound for sweeps")->check(CLI::NonNegativeNumber);

  std::string a_arg, b_arg;
  auto* mul = app.add_subcommand("mul", "product of two elements (files or expressions)");
  mul->add_option("a", a_arg, "first factor")->required();
  mul->add_option("b", b_arg, "second factor")->required();

  auto* sw = app.add_subcommand("sandwich", "e a e in the spherical subalgebra");
  sw->add_option("a", a_arg, "element")->required();

  int p = 0, q = 0;
  std::string g_arg = "id";
  auto* tg = app.add_subcommand("tgen", "the generator T_{p,q,n}(g)");
  tg->add_option("--p", p)->check(CLI::NonNegativeNumber);
  tg->add_option("--q", q)->check(CLI::NonNegativeNumber);
  tg->add_option("--g", g_arg, "\"id\", \"[a,b]\" or a matrix [[..],..]");

  auto* ex = app.add_subcommand("expand", "coefficients in the T-basis");
  ex->add_option("a", a_arg, "spherical element file, or an element to sandwich")->required();

  std::string m1_arg, m2_arg;
  int max_size = 3;
  auto* sc = app.add_subcommand("structure-constants", "table of T(m1) T(m2), or a sweep without --m1/--m2");
  sc->add_option("--m1", m1_arg, "index, e.g. [[0,0,\"[1,2]\",1]]");
  sc->add_option("--m2", m2_arg);
  sc->add_option("--max-size", max_size, "|m1| + |m2| bound for sweeps")->check(CLI::NonNegativeNumber);

  std::string table_arg, nu_arg;
  auto* sp = app.add_subcommand("specialize", "set K to a number in a table or T-expansion");
  sp->add_option("input", table_arg, "table or expansion file")->required();
  sp->add_option("--nu", nu_arg, "value of K (default: --n)");

  bool all_indices = false, with_k = false, with_sl = false;
  int ia = 0, ib = 0, ic = 0, id = 0;
  auto* vg = app.add_subcommand("verify-guay", "relations of the image of the deformed double current algebra");
  vg->add_flag("--all-indices", all_indices, "every admissible (a,b,c,d)");
  vg->add_option("--a", ia)->check(CLI::PositiveNumber);
  vg->add_option("--b", ib)->check(CLI::PositiveNumber);
  vg->add_option("--c", ic)->check(CLI::PositiveNumber);
  vg->add_option("--d", id)->check(CLI::PositiveNumber);
  vg->add_flag("--k-extraction", with_k, "also the K-extraction identities");
  vg->add_flag("--sl-current", with_sl, "also the current-algebra relations on matrix units");

  int l = 0, max_degree = 2;
  bool with_relations = false;
  auto* vv = app.add_subcommand("verify-vl", "commuting square on V_l");
  vv->add_option("--l", l, "l (default: --n)")->check(CLI::Range(2, 16));
  vv->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  vv->add_flag("--relations", with_relations, "also the defining relations on the full space");

  int trials = 200;
  std::uint64_t seed = 2024;
  auto* cc = app.add_subcommand("content-check", "interpolated omega values against contents");
  cc->add_option("--trials", trials)->check(CLI::PositiveNumber);
  cc->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mul) {
      Operand a = operand(o, a_arg), b = operand(o, b_arg);
      if (a.element && b.element)
        emit(o, to_json(*a.element * *b.element));
      else
        emit(o, to_json(as_spherical(a) * as_spherical(b)));
    } else if (*sw) {
      emit(o, to_json(as_spherical(operand(o, a_arg))));
    } else if (*tg) {
      emit(o, to_json(t_gen(context(o, o.n, o.r), p, q, matrix_option(g_arg, o.r))));
    } else if (*ex) {
      SphericalElement z = as_spherical(operand(o, a_arg));
      emit(o, expansion_json(expand_in_t_basis(z), z.n(), z.r()));
    } else if (*sc) {
      InterpOptions io = interp_options(o);
      if (!m1_arg.empty() || !m2_arg.empty()) {
        TIndex m1 = TIndex::parse(m1_arg.empty() ? "[]" : m1_arg, o.r);
        TIndex m2 = TIndex::parse(m2_arg.empty() ? "[]" : m2_arg, o.r);
        emit(o, table_json(o, structure_constants(m1, m2, o.r, io)));
      } else {
        auto pairs = structure_constant_pairs(o.r, o.max_weight, max_size);
        std::vector<json> tables(pairs.size());
        io.threads = 1;
        parallel_for(pairs.size(), o.threads, [&](std::size_t i) {
          tables[i] = table_json(o, structure_constants(pairs[i].first, pairs[i].second, o.r, io));
        });
        emit(o, json{{"format", "ddca-structure-constant-sweep"},
                     {"version", kSerialVersion},
                     {"r", o.r},
                     {"maxWeight", o.max_weight},
                     {"maxSize", max_size},
                     {"tables", tables}});
      }
    } else if (*sp) {
      auto j = read_json_file(table_arg);
      if (!j) fail(ErrorCode::InvalidArgument, "cannot read " + table_arg);
      const Rational nu = nu_arg.empty() ? Rational(o.n) : Rational::parse(nu_arg);
      TExpansion out;
      int r = 0;
      if (j->value("format", std::string()) == "ddca-structure-constants") {
        auto table = table_from_text(j->dump());
        r = table.r;
        out = specialize(table, nu);
      } else if (j->value("format", std::string()) == "ddca-t-expansion") {
        r = j->at("r").get<int>();
        out = specialize(t_expansion_from_json(j->at("terms"), r), nu);
      } else {
        fail(ErrorCode::ParseError, "expected a table or a T-expansion");
      }
      TExpansion clean;
      for (const auto& [m, c] : out) {
        ParamPoly v = specialize_tk(o, c);
        if (!v.is_zero()) clean[m] = v;
      }
      json res{{"format", "ddca-t-expansion"}, {"version", kSerialVersion}, {"r", r}, {"K", nu.to_string()},
               {"terms", to_json(clean, r)}};
      emit(o, res);
    } else if (*vg) {
      auto ctx = context(o, o.n, o.r);
      std::vector<std::array<int, 4>> sets;
      if (all_indices) {
        for (int a = 0; a < o.r; ++a)
          for (int b = 0; b < o.r; ++b)
            for (int c = 0; c < o.r; ++c)
              for (int d = 0; d < o.r; ++d)
                if (a != b && c != d && !(a == d && b == c)) sets.push_back({a, b, c, d});
      } else if (ia > 0) {
        sets.push_back({ia - 1, ib - 1, ic - 1, id - 1});
      } else if (!with_k && !with_sl) {
        fail(ErrorCode::InvalidArgument, "give --all-indices, --a/--b/--c/--d, --k-extraction or --sl-current");
      }
      std::vector<json> reports(sets.size());
      parallel_for(sets.size(), o.threads, [&](std::size_t i) {
        const auto& s = sets[i];
        reports[i] = to_json(verify_main_relation(s[0], s[1], s[2], s[3], ctx));
      });
      if (with_sl)
        for (int a = 0; a < o.r; ++a)
          for (int b = 0; b < o.r; ++b)
            for (int c = 0; c < o.r; ++c)
              for (int d = 0; d < o.r; ++d)
                if (a != b && c != d)
                  for (const auto& rep : verify_sl_current(Matrix::unit(o.r, a, b), Matrix::unit(o.r, c, d), ctx))
                    reports.push_back(to_json(rep));
      if (with_k)
        for (const auto& rep : verify_k_extraction(ctx)) reports.push_back(to_json(rep));
      bool pass = true;
      json res = report_list(reports, pass);
      emit(o, res);
      return verification_status(pass);
    } else if (*vv) {
      const int ll = l > 0 ? l : o.n;
      std::vector<json> reports;
      for (const auto& c : verify_commuting_square(ll, o.r, max_degree, o.threads)) reports.push_back(to_json(c));
      if (with_relations) {
        VlModel model(ll, o.r, max_degree + 2);
        auto keys = model.basis(max_degree);
        std::vector<std::vector<RelationFamilyResult>> parts(keys.size());
        parallel_for(keys.size(), o.threads,
                     [&](std::size_t i) { parts[i] = check_relations(model, {model.f_basis_vector(keys[i])}); });
        std::vector<RelationFamilyResult> fams;
        for (const auto& part : parts) {
          if (fams.empty()) fams = part;
          else
            for (std::size_t f = 0; f < part.size(); ++f) {
              fams[f].checks += part[f].checks;
              if (fams[f].failures == 0 && part[f].failures > 0) fams[f].first_failure = part[f].first_failure;
              fams[f].failures += part[f].failures;
            }
        }
        for (const auto& f : fams) reports.push_back(to_json(f));
      }
      bool pass = true;
      emit(o, report_list(reports, pass));
      return verification_status(pass);
    } else if (*cc) {
      SuiteResult res = content_suite(trials, seed);
      emit(o, json::parse(res.artifact));
      return verification_status(res.pass);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(ErrorCode::InvalidArgument);
  }
  return 0;
}

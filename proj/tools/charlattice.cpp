#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charlattice/abmultiset.hpp"
#include "charlattice/charfile.hpp"
#include "charlattice/charmatch.hpp"
#include "charlattice/reps.hpp"
#include "charlattice/subsystems.hpp"
#include "charlattice/verify.hpp"

using namespace charlattice;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  bool structured() const { return format == "structured"; }
};

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

ojson weight_json(const Weight& w) { return ojson(w.coords); }

std::vector<HighestWeight> parse_summands(const SemisimpleAlgebra& alg, const std::string& s) {
  std::vector<HighestWeight> out;
  for (const auto& part : detail::split(s, ';')) out.push_back(parse_highest_weight(alg, part));
  return out;
}

int cmd_dim(const Options& o, const std::string& alg_s, const std::string& hw_s) {
  SemisimpleAlgebra alg = SemisimpleAlgebra::parse(alg_s);
  HighestWeight hw = parse_highest_weight(alg, hw_s);
  BigInt d = weyl_dimension_big(alg, hw);
  if (o.structured())
    print_json({{"algebra", alg.name()}, {"hw", weight_json(hw)}, {"dim", d.str()}});
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_weights(const Options& o, const std::string& alg_s, const std::string& hw_s) {
  SemisimpleAlgebra alg = SemisimpleAlgebra::parse(alg_s);
  FormalCharacter fc = weight_multiset(alg, parse_summands(alg, hw_s));
  if (o.structured()) {
    std::cout << emit_character_file({fc, std::nullopt});
    return 0;
  }
  for (const auto& [w, m] : fc.multiplicities()) {
    for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
    std::cout << "\t" << m << "\n";
  }
  return 0;
}

int cmd_multfree(const Options& o, const std::string& alg_s, const std::string& hw_s) {
  SemisimpleAlgebra alg = SemisimpleAlgebra::parse(alg_s);
  FormalCharacter fc = weight_multiset(alg, parse_summands(alg, hw_s));
  const bool mf = is_multiplicity_free(fc);
  if (o.structured())
    print_json({{"multiplicity_free", mf}, {"max_multiplicity", fc.max_multiplicity()}, {"dim", fc.size()}});
  else
    std::cout << (mf ? "true" : "false") << "\tmax multiplicity " << fc.max_multiplicity() << "\n";
  return 0;
}

int cmd_samechar(const Options& o, const std::string& f1, const std::string& f2) {
  auto a = read_character_file(f1).character;
  auto b = read_character_file(f2).character;
  auto iso = same_formal_character(a, b);
  if (o.structured()) {
    ojson j{{"same", iso.has_value()}};
    if (iso) {
      ojson rows = ojson::array();
      for (std::size_t i = 0; i < iso->map.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t k = 0; k < iso->map.cols(); ++k) row.push_back(iso->map(i, k).str());
        rows.push_back(row);
      }
      j["witness"] = rows;
      j["verified"] = iso->verify();
    }
    print_json(j);
  } else if (iso) {
    std::cout << "same formal character; witness (rows act on fundamental coordinates):\n";
    for (std::size_t i = 0; i < iso->map.rows(); ++i) {
      for (std::size_t k = 0; k < iso->map.cols(); ++k) std::cout << (k ? "\t" : "") << iso->map(i, k);
      std::cout << "\n";
    }
  } else {
    std::cout << "different formal characters\n";
  }
  return iso ? 0 : 1;
}

int cmd_factorize(const Options& o, const std::string& elems, const std::string& file, const std::string& profile_s) {
  GroupMultiset c;
  if (!file.empty()) {
    c = weights_as_multiset(read_character_file(file).character);
  } else {
    std::vector<int> xs;
    for (const auto& t : detail::split(elems, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != t.size()) throw ParseError("bad integer '" + t + "'");
      xs.push_back(v);
    }
    c = GroupMultiset::integers(xs);
  }
  std::vector<std::size_t> profile;
  for (const auto& t : detail::split(profile_s, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size() || v < 1) throw ParseError("bad profile entry '" + t + "'");
    profile.push_back(std::size_t(v));
  }
  auto ds = factorizations(c, profile);
  auto elem_json = [&](const AbGroupElem& e) {
    return c.group().m > 1 ? ojson{{"torsion", e.torsion}, {"free", e.free}} : ojson(e.free);
  };
  if (o.structured()) {
    ojson arr = ojson::array();
    for (const auto& d : ds) {
      ojson fs = ojson::array();
      for (const auto& f : d.factors) {
        ojson es = ojson::array();
        for (const auto& e : f.elems()) es.push_back(elem_json(e));
        fs.push_back(es);
      }
      arr.push_back(fs);
    }
    print_json({{"count", ds.size()}, {"factorizations", arr}});
  } else {
    auto elem_text = [&](const AbGroupElem& e) {
      std::string s;
      for (std::size_t i = 0; i < e.free.size(); ++i) s += (i ? "," : "") + std::to_string(e.free[i]);
      if (e.free.size() != 1) s = "(" + s + ")";
      return c.group().m > 1 ? "[" + std::to_string(e.torsion) + "]" + s : s;
    };
    for (const auto& d : ds) {
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        std::cout << (i ? " * {" : "{");
        for (std::size_t k = 0; k < d.factors[i].size(); ++k)
          std::cout << (k ? ", " : "") << elem_text(d.factors[i].elems()[k]);
        std::cout << "}";
      }
      std::cout << "\n";
    }
    std::cout << ds.size() << " factorization(s) up to translation\n";
  }
  return 0;
}

int cmd_subsystems(const Options& o, const std::string& type_s, bool type_a) {
  RootSystem rs(SimpleType::parse(type_s));
  std::vector<Subsystem> subs = type_a ? std::vector<Subsystem>{type_a_equal_rank(rs)} : equal_rank_subsystems(rs);
  if (o.structured()) {
    ojson arr = ojson::array();
    for (const auto& s : subs) {
      ojson roots = ojson::array();
      for (const auto& r : s.selected_roots) roots.push_back(r);
      arr.push_back({{"type", s.signature()}, {"simple_roots", roots}});
    }
    print_json(arr);
  } else {
    for (const auto& s : subs) std::cout << s.signature() << "\n";
  }
  return 0;
}

int cmd_catalog(const Options& o, const std::string& type_s, std::uint64_t max_dim) {
  SimpleType t = SimpleType::parse(type_s);
  auto cat = multiplicity_free_catalog(t, max_dim);
  if (o.structured()) {
    ojson arr = ojson::array();
    for (const auto& e : cat) arr.push_back({{"hw", weight_json(e.hw)}, {"dim", e.dim}, {"label", e.label}});
    print_json(arr);
  } else {
    for (const auto& e : cat) std::cout << to_string(e.hw) << "\t" << e.dim << "\t" << e.label << "\n";
  }
  return 0;
}

int cmd_allowed(const Options& o, std::uint64_t n) {
  auto r = cmd_allowed_pairs(n);
  if (o.structured()) {
    ojson arr = ojson::array();
    for (const auto& p : r.pairs)
      arr.push_back({{"type", p.type.name()}, {"hw", weight_json(p.hw)}, {"label", p.label}, {"notes", p.notes}});
    print_json({{"n", n}, {"admitted", r.admitted()}, {"gate_violations", r.gate_violations}, {"pairs", arr}});
  } else {
    for (const auto& v : r.gate_violations) std::cerr << "n = " << n << ": " << v << "\n";
    if (!r.admitted()) std::cerr << "would be admitted without the gates:\n";
    for (const auto& p : r.pairs)
      std::cout << p.type.name() << "\t" << to_string(p.hw) << "\t" << p.label << "\t" << p.notes << "\n";
  }
  return r.admitted() ? 0 : 1;
}

Params parse_params(const std::vector<std::string>& kv) {
  Params p;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("parameters look like key=value, got '" + s + "'");
    p[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return p;
}

int print_reports(const Options& o, const std::vector<CaseReport>& reps) {
  bool ok = true;
  for (const auto& r : reps) ok = ok && r.verdict();
  if (o.structured()) {
    ojson arr = ojson::array();
    for (const auto& r : reps) arr.push_back(to_json(r));
    print_json(reps.size() == 1 ? arr[0] : ojson{{"cases", arr}, {"verdict", ok ? "pass" : "fail"}});
  } else {
    for (const auto& r : reps) std::cout << format_text(r);
    if (reps.size() > 1) {
      std::size_t passed = 0;
      for (const auto& r : reps) passed += r.verdict();
      std::cout << passed << "/" << reps.size() << " cases pass\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_verify_one(const Options& o, const std::string& id, const std::vector<std::string>& kv, bool seed_given) {
  Params p = parse_params(kv);
  if (id == "factorization-bound" && seed_given && !p.count("seed")) p["seed"] = std::to_string(o.seed);
  return print_reports(o, {cmd_verify(id, p)});
}

int cmd_verify_all(const Options& o) {
  std::vector<CaseReport> reps;
  for (const auto& [id, p] : default_suite()) reps.push_back(cmd_verify(id, p));
  return print_reports(o, reps);
}

int cmd_emit(const std::string& alg_s, const std::string& hw_s) {
  SemisimpleAlgebra alg = SemisimpleAlgebra::parse(alg_s);
  std::cout << emit_character_file({weight_multiset(alg, parse_summands(alg, hw_s)), std::nullopt});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight multisets, formal characters and verification cases"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", o.seed, "Seed for randomized cases");

  std::string alg, hw, file1, file2, elems, file, profile = "2,2", type;
  std::uint64_t n = 0, max_dim = kDefaultDimensionCap;
  bool type_a = false;
  std::vector<std::string> kv;

  auto* dim = app.add_subcommand("dim", "Weyl dimension of an irreducible");
  dim->add_option("algebra", alg)->required();
  dim->add_option("hw", hw, "w3, omega3, 1,0,2 or hw=2")->required();

  auto* weights = app.add_subcommand("weights", "Weight multiset; ';' separates summands");
  weights->add_option("algebra", alg)->required();
  weights->add_option("hw", hw)->required();

  auto* multfree = app.add_subcommand("multfree", "Whether a representation is multiplicity-free");
  multfree->add_option("algebra", alg)->required();
  multfree->add_option("hw", hw)->required();

  auto* samechar = app.add_subcommand("samechar", "Compare the formal characters of two character files");
  samechar->add_option("first", file1)->required()->check(CLI::ExistingFile);
  samechar->add_option("second", file2)->required()->check(CLI::ExistingFile);

  auto* factorize = app.add_subcommand("factorize", "Factor a multiset as a product of translates");
  factorize->add_option("elements", elems, "Comma-separated integers");
  factorize->add_option("--file", file, "Character file; its weights form the multiset")->check(CLI::ExistingFile);
  factorize->add_option("--profile", profile, "Factor sizes")->capture_default_str();

  auto* subsystems = app.add_subcommand("subsystems", "Equal-rank subsystems of a simple type");
  subsystems->add_option("type", type)->required();
  subsystems->add_flag("--type-a", type_a, "Only the chosen all-type-A subsystem");

  auto* catalog = app.add_subcommand("catalog", "Multiplicity-free irreducibles of a simple type");
  catalog->add_option("type", type)->required();
  catalog->add_option("--max-dim", max_dim)->capture_default_str();

  auto* allowed = app.add_subcommand("allowed-pairs", "Catalog pairs of dimension n, with the divisibility gates");
  allowed->add_option("n", n)->required();

  auto* verify = app.add_subcommand("verify", "Run one verification case");
  verify->add_option("case", type)->required()->check(CLI::IsMember(case_ids()));
  verify->add_option("params", kv, "key=value");

  auto* verify_all = app.add_subcommand("verify-all", "Run the default verification suite");

  auto* emit = app.add_subcommand("emit-char", "Write a character file");
  emit->add_option("algebra", alg)->required();
  emit->add_option("hw", hw)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*dim) return cmd_dim(o, alg, hw);
    if (*weights) return cmd_weights(o, alg, hw);
    if (*multfree) return cmd_multfree(o, alg, hw);
    if (*samechar) return cmd_samechar(o, file1, file2);
    if (*factorize) {
      if (elems.empty() == file.empty()) throw ParseError("give either elements or --file");
      return cmd_factorize(o, elems, file, profile);
    }
    if (*subsystems) return cmd_subsystems(o, type, type_a);
    if (*catalog) return cmd_catalog(o, type, max_dim);
    if (*allowed) return cmd_allowed(o, n);
    if (*verify) return cmd_verify_one(o, type, kv, seed_opt->count() > 0);
    if (*verify_all) return cmd_verify_all(o);
    if (*emit) return cmd_emit(alg, hw);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

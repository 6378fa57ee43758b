// ngtrace: command-line front end.
//
// Exit codes: 0 ok, 2 invalid input, 3 the matrix does not present the
// semigroup, 4 unsupported case, 5 property violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ngtrace/corpus.hpp"

using namespace ngtrace;

namespace {

enum Exit { kOk = 0, kInput = 2, kMismatch = 3, kUnsupported = 4, kViolation = 5 };

struct RunConfig {
  std::string input;
  std::string method = "all";
  Int bound = 150;
  Int max_exponent = 3;
  std::vector<std::size_t> sizes{3, 4, 5};
  std::string format = "table";
  bool full_perm = false;
  bool stretch_syzygy = false;
  bool dihedral_scan = false;
  bool higher = false;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::vector<Int> generators, m, ell;
};

class Violated : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& input) {
  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (input.front() == '{') {
    text = input;
  } else {
    std::ifstream in(input);
    if (!in) throw InvalidInput("cannot read " + input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json_text(text);
}

std::string commas(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string join(const std::vector<Int>& v) { return "{" + commas(v) + "}"; }

std::string yes(bool b) { return b ? "true" : "false"; }

bool uses(const RunConfig& cfg, const std::string& method) {
  return cfg.method == "all" || cfg.method == method;
}

void emit(const RunConfig& cfg, const json& j, const std::string& table) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
}

int cmd_sgp(const RunConfig& cfg) {
  NumericalSemigroup h = cfg.generators.empty() ? semigroup_from_json(read_input(cfg.input))
                                                : NumericalSemigroup(cfg.generators);
  auto apery = h.apery_set(h.multiplicity());
  std::sort(apery.begin(), apery.end());
  json j = to_json(h);
  j["frobenius"] = h.frobenius();
  j["gaps"] = h.gaps();
  j["apery"] = apery;
  j["pseudo_frobenius"] = h.pseudo_frobenius();
  j["type"] = h.type();
  j["symmetric"] = h.is_symmetric();
  j["almost_symmetric"] = h.is_almost_symmetric();
  std::ostringstream t;
  t << "H                 <" << commas(h.generators()) << ">\n"
    << "Frobenius         " << h.frobenius() << "\n"
    << "gaps              " << join(h.gaps()) << "\n"
    << "Apery(" << h.multiplicity() << ")" << std::string(11 - std::to_string(h.multiplicity()).size(), ' ')
    << join(apery) << "\n"
    << "PF                " << join(h.pseudo_frobenius()) << "\n"
    << "type              " << h.type() << "\n"
    << "symmetric         " << yes(h.is_symmetric()) << "\n"
    << "almost symmetric  " << yes(h.is_almost_symmetric()) << "\n";
  emit(cfg, j, t.str());
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  auto inst = instance_from_json(read_input(cfg.input));
  const auto& h = inst.semigroup();
  auto cls = classify_nearly_gorenstein(inst, cfg.full_perm);
  json j = to_json(inst);
  j["c"] = inst.c();
  j["validated"] = true;
  std::ostringstream t;
  t << "instance     " << to_json(inst).dump() << "\n"
    << "validated    I_H = I_2(D), c = " << inst.c() << "\n";
  json ng = {{"theorem", cls.is_ng}};
  t << "NG theorem   " << yes(cls.is_ng);
  if (cls.is_ng) {
    if (cls.other_form) {
      t << " (" << to_string(cls.which) << " in the form "
        << json({{"order", cls.other_form->order}, {"m", cls.other_form->m}, {"ell", cls.other_form->ell}}).dump()
        << ")";
      j["other_form"] = {{"order", cls.other_form->order}, {"m", cls.other_form->m}, {"ell", cls.other_form->ell}};
    } else {
      t << " (main, " << to_string(cls.which) << ", symmetry " << cls.symmetry.label() << ")";
      j["symmetry"] = cls.symmetry.label();
    }
    j["case"] = to_string(cls.which);
  }
  t << "\n";
  std::vector<bool> votes{cls.is_ng};
  if (uses(cfg, "oracle")) {
    bool v = is_nearly_gorenstein_oracle(h);
    ng["oracle"] = v;
    votes.push_back(v);
    t << "NG oracle    " << yes(v) << "\n";
  }
  if (uses(cfg, "lambda")) {
    auto tr = trace_canonical_lambda(inst);
    bool v = std::all_of(h.generators().begin(), h.generators().end(), [&](Int a) { return tr.contains(a); });
    ng["lambda"] = v;
    votes.push_back(v);
    t << "NG lambda    " << yes(v) << "\n";
  }
  if (cfg.stretch_syzygy && uses(cfg, "syzygy") && inst.n() == 3) {
    auto tr = trace_canonical_syzygy(inst);
    bool v = std::all_of(h.generators().begin(), h.generators().end(), [&](Int a) { return tr.contains(a); });
    ng["syzygy"] = v;
    votes.push_back(v);
    t << "NG syzygy    " << yes(v) << "\n";
  }
  j["nearly_gorenstein"] = ng;
  bool ag = classify_almost_gorenstein(inst);
  bool ag_oracle = h.is_almost_symmetric();
  j["almost_gorenstein"] = {{"theorem", ag}, {"oracle", ag_oracle}};
  t << "AG theorem   " << yes(ag) << "\n"
    << "AG oracle    " << yes(ag_oracle) << "\n";
  if (cls.is_ng && !cls.other_form) {
    json rows = json::array();
    for (const auto& row : theorem_if_witnesses(inst)) {
      rows.push_back({{"entries", row.entries}, {"j", row.j}});
      t << "  " << row.to_string() << "\n";
    }
    j["rows"] = rows;
  }
  emit(cfg, j, t.str());
  bool agree = std::all_of(votes.begin(), votes.end(), [&](bool v) { return v == votes[0]; });
  if (!agree || ag != ag_oracle) {
    std::cerr << "disagreement between methods; reproducer: " << to_json(inst).dump() << "\n";
    return kViolation;
  }
  return kOk;
}

int cmd_trace(const RunConfig& cfg) {
  json in = read_input(cfg.input);
  json j;
  std::ostringstream t;
  std::vector<std::vector<Int>> results;
  if (!in.contains("order")) {
    if (cfg.method != "oracle" && cfg.method != "all")
      throw InvalidInput("a bare semigroup only supports --method oracle");
    auto h = std::make_shared<const NumericalSemigroup>(semigroup_from_json(in));
    auto tr = trace_canonical_oracle(h);
    j = to_json(tr);
    t << "oracle  " << join(tr.generators()) << "\n";
    emit(cfg, j, t.str());
    return kOk;
  }
  auto inst = instance_from_json(in);
  j["instance"] = to_json(inst);
  if (uses(cfg, "oracle")) {
    auto tr = trace_canonical_oracle(inst.semigroup_ptr());
    j["oracle"] = tr.generators();
    results.push_back(tr.generators());
    t << "oracle  " << join(tr.generators()) << "\n";
  }
  if (uses(cfg, "lambda")) {
    auto tr = trace_canonical_lambda(inst);
    j["lambda"] = tr.generators();
    results.push_back(tr.generators());
    t << "lambda  " << join(tr.generators()) << "\n";
  }
  if (cfg.stretch_syzygy && uses(cfg, "syzygy")) {
    if (inst.n() != 3 && cfg.method == "syzygy")
      throw NotApplicable("the module kernel route is limited to three generators");
    if (inst.n() == 3) {
      auto tr = trace_canonical_syzygy(inst);
      j["syzygy"] = tr.generators();
      results.push_back(tr.generators());
      t << "syzygy  " << join(tr.generators()) << "\n";
    }
  }
  emit(cfg, j, t.str());
  for (const auto& r : results)
    if (r != results.front()) {
      std::cerr << "trace methods disagree; reproducer: " << to_json(inst).dump() << "\n";
      return kViolation;
    }
  return kOk;
}

int cmd_search(const RunConfig& cfg) {
  auto found = search_instances(cfg.m, cfg.ell, cfg.bound);
  json list = json::array();
  std::ostringstream t;
  t << "order,m,ell,c,nearly_gorenstein,case,almost_gorenstein\n";
  for (const auto& inst : found) {
    auto cls = classify_nearly_gorenstein(inst, cfg.full_perm);
    bool ag = classify_almost_gorenstein(inst);
    json j = to_json(inst);
    j["c"] = inst.c();
    j["nearly_gorenstein"] = cls.is_ng;
    j["case"] = to_string(cls.which);
    j["almost_gorenstein"] = ag;
    list.push_back(j);
    auto q = [](const std::vector<Int>& v) { return "\"" + json(v).dump() + "\""; };
    t << q(inst.order()) << "," << q(inst.m()) << "," << q(inst.ell()) << "," << inst.c() << ","
      << yes(cls.is_ng) << "," << to_string(cls.which) << "," << yes(ag) << "\n";
  }
  emit(cfg, list, t.str());
  return kOk;
}

std::string row_text(const PolyRow& row) {
  std::string out = "f = (";
  for (std::size_t k = 0; k < row.size(); ++k) out += (k ? ", " : "") + row[k].to_string();
  return out + ")";
}

int cmd_higher(const RunConfig& cfg, bool verify_only) {
  auto hd = higher_from_json(read_input(cfg.input));
  auto cls = classify(hd, cfg.dihedral_scan);
  json j = to_json(hd);
  j["dimension"] = dimension(hd);
  j["base_case"] = to_string(hd.base_case());
  j["rule"] = cls.result.rule;
  j["nearly_gorenstein"] = cls.result.is_ng;
  std::ostringstream t;
  t << "instance     " << to_json(hd).dump() << "\n"
    << "base case    " << to_string(hd.base_case()) << "\n"
    << "dimension    " << dimension(hd) << "\n"
    << "clause       " << cls.result.rule;
  if (cls.symmetry) {
    t << " after " << cls.symmetry->label();
    j["symmetry"] = cls.symmetry->label();
  }
  t << "\nNG           " << yes(cls.result.is_ng) << "\n";
  HigherDimInstance target = cls.symmetry ? transformed(hd, *cls.symmetry) : hd;
  if (cls.result.is_ng) {
    auto rep = verify_witness(target);
    json rows = json::array();
    for (const auto& row : rep.rows) {
      json r = json::array();
      for (const auto& p : row) r.push_back(p.to_string());
      rows.push_back(r);
      t << "  " << row_text(row) << "\n";
    }
    j["rows"] = rows;
    j["products_reduced"] = rep.products_reduced;
    j["witness"] = "verified";
    t << "witness      verified, " << rep.products_reduced << " entries of f.M reduce to 0\n";
  } else if (verify_only) {
    throw NotApplicable("the deformation is not nearly Gorenstein; there is no witness to verify");
  }
  if (hd.n() == 3) {
    auto tr = trace_n3(hd);
    j["entry_ideal_nearly_gorenstein"] = tr.is_ng;
    t << "I_1(N)       " << (tr.is_ng ? "contains every variable" : "misses some variable") << "\n";
    if (tr.is_ng != cls.result.is_ng) {
      emit(cfg, j, t.str());
      std::cerr << "classification disagrees with I_1(N); reproducer: " << to_json(hd).dump() << "\n";
      return kViolation;
    }
  }
  emit(cfg, j, t.str());
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  json in = read_input(cfg.input);
  if (in.contains("I") || in.contains("J")) return cmd_higher(cfg, true);
  auto inst = instance_from_json(in);
  auto rows = theorem_if_witnesses(inst);
  json j = to_json(inst);
  json list = json::array();
  std::ostringstream t;
  t << "instance     " << to_json(inst).dump() << "\n";
  for (const auto& row : rows) {
    if (!satisfies_relations(inst, row)) throw Violated("row fails the kernel relations");
    list.push_back({{"entries", row.entries}, {"j", row.j}});
    t << "  " << row.to_string() << "\n";
  }
  j["rows"] = list;
  emit(cfg, j, t.str());
  return kOk;
}

json criterion_json(const CriterionResult& c) {
  json v = json::array();
  for (const auto& x : c.violations) v.push_back({{"message", x.message}, {"reproducer", x.reproducer}});
  return {{"criterion", c.id}, {"title", c.title},   {"checked", c.checked}, {"skipped", c.skipped},
          {"seconds", c.seconds}, {"passed", c.passed()}, {"notes", c.notes}, {"violations", v}};
}

int cmd_corpus(const RunConfig& cfg) {
  CorpusConfig config;
  config.sizes = cfg.sizes;
  config.max_exponent = cfg.max_exponent;
  config.bound = cfg.bound;
  config.sample = cfg.sample;
  config.seed = cfg.seed;
  config.threads = cfg.threads;
  auto corpus = enumerate_corpus(config);
  std::vector<CriterionResult> results = check_corpus(corpus, cfg.threads, 0);

  // agreement table: theorem verdict against the oracle verdict
  std::size_t table[2][2] = {{0, 0}, {0, 0}};
  for (const auto& inst : corpus.instances)
    ++table[classify_nearly_gorenstein(inst).is_ng][is_nearly_gorenstein_oracle(inst.semigroup())];

  if (cfg.higher) {
    CriterionResult c9;
    c9.id = 9;
    c9.title = "nearly Gorenstein deformations respect the dimension caps";
    HigherConfig hc;
    hc.threads = cfg.threads;
    results.push_back(check_higher_if(hc, c9));
    results.back().budget = 0;
    results.push_back(check_higher_n3(3, 500, c9, cfg.threads));
    results.push_back(c9);
  }
  if (cfg.stretch_syzygy) results.push_back(check_syzygy_trace(corpus));

  bool ok = true;
  json j;
  j["instances"] = corpus.instances.size();
  j["tuples"] = corpus.tuples;
  j["resource_overruns"] = corpus.overruns;
  j["agreement"] = {{"theorem_true_oracle_true", table[1][1]},
                    {"theorem_true_oracle_false", table[1][0]},
                    {"theorem_false_oracle_true", table[0][1]},
                    {"theorem_false_oracle_false", table[0][0]}};
  j["criteria"] = json::array();
  std::ostringstream t;
  t << "instances " << corpus.instances.size() << " from " << corpus.tuples << " exponent tuples\n";
  for (const auto& o : corpus.overruns) t << "  resource limit: " << o << "\n";
  t << "                 oracle NG  oracle not NG\n"
    << "theorem NG       " << std::setw(9) << table[1][1] << "  " << std::setw(13) << table[1][0] << "\n"
    << "theorem not NG   " << std::setw(9) << table[0][1] << "  " << std::setw(13) << table[0][0] << "\n";
  for (const auto& c : results) {
    bool blocking = c.id != 10;
    ok = ok && (c.passed() || !blocking);
    j["criteria"].push_back(criterion_json(c));
    t << (c.passed() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [checked "
      << c.checked << ", " << std::fixed << std::setprecision(2) << c.seconds << " s]\n";
    for (const auto& n : c.notes) t << "    " << n << "\n";
  }
  emit(cfg, j, t.str());
  if (!ok) {
    for (const auto& c : results)
      if (!c.violations.empty() && c.id != 10) {
        std::cerr << "criterion " << c.id << " violated: " << c.violations.front().message
                  << "\nreproducer: " << c.violations.front().reproducer.dump() << "\n";
        break;
      }
    return kViolation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical traces of numerical semigroup rings given by 2 x n determinantal ideals"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("input", cfg.input, "instance JSON: a file path, inline JSON, or - for stdin");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "trace method")
        ->check(CLI::IsMember({"oracle", "lambda", "syzygy", "all"}));
    sub->add_flag("--stretch-syzygy", cfg.stretch_syzygy, "enable the module kernel trace");
  };

  auto* sgp = app.add_subcommand("sgp", "invariants of a numerical semigroup");
  sgp->add_option("--generators,-g", cfg.generators, "generators (otherwise JSON input)")->delimiter(',');
  add_common(sgp, true);

  auto* cls = app.add_subcommand("classify", "validate a presentation and classify it");
  add_common(cls, true);
  add_method(cls);
  cls->add_flag("--full-perm", cfg.full_perm, "also scan forms of every generator ordering");

  auto* trace = app.add_subcommand("trace", "canonical trace by the selected methods");
  add_common(trace, true);
  add_method(trace);

  auto* search = app.add_subcommand("search", "instances with given exponents");
  search->add_option("--m", cfg.m, "exponents on the top row")->required()->delimiter(',');
  search->add_option("--ell", cfg.ell, "exponents on the bottom row")->required()->delimiter(',');
  search->add_option("--bound", cfg.bound, "largest generator")->check(CLI::Range(1, 500));
  search->add_flag("--full-perm", cfg.full_perm, "also scan forms of every generator ordering");
  add_common(search, false);

  auto* higher = app.add_subcommand("higher", "classify a deformation with label sets I and J");
  add_common(higher, true);
  higher->add_flag("--dihedral-scan", cfg.dihedral_scan, "relabel unsupported bases dihedrally");

  auto* verify = app.add_subcommand("verify", "check the explicit kernel rows of an instance");
  add_common(verify, true);
  verify->add_flag("--dihedral-scan", cfg.dihedral_scan, "relabel unsupported bases dihedrally");

  auto* corpus = app.add_subcommand("corpus", "exhaustive agreement run");
  add_common(corpus, false);
  corpus->add_option("--bound", cfg.bound, "largest generator")->check(CLI::Range(1, 500));
  corpus->add_option("--max-exponent", cfg.max_exponent, "largest exponent")->check(CLI::Range(1, 6));
  corpus->add_option("--sizes", cfg.sizes, "embedding dimensions")->delimiter(',')->check(CLI::Range(3, 6));
  corpus->add_option("--sample", cfg.sample, "number of exponent tuples to keep (0 keeps all)");
  corpus->add_option("--seed", cfg.seed, "seed for --sample");
  corpus->add_option("--threads", cfg.threads, "worker threads (0: one per core)");
  corpus->add_flag("--higher", cfg.higher, "also run the deformation checks");
  corpus->add_flag("--stretch-syzygy", cfg.stretch_syzygy, "also run the module kernel trace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  if (cfg.method == "syzygy" && !cfg.stretch_syzygy) {
    std::cerr << "error: --method syzygy needs --stretch-syzygy\n";
    return kInput;
  }

  try {
    if (*sgp) return cmd_sgp(cfg);
    if (*cls) return cmd_classify(cfg);
    if (*trace) return cmd_trace(cfg);
    if (*search) return cmd_search(cfg);
    if (*higher) return cmd_higher(cfg, false);
    if (*verify) return cmd_verify(cfg);
    if (*corpus) return cmd_corpus(cfg);
  } catch (const IdealMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const InhomogeneousMatrix& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const UnsupportedBaseCase& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const NoTabulatedWitness& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const NotApplicable& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const WitnessFailed& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const Violated& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}

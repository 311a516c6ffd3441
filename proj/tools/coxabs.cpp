// coxabs: command-line front end for the absolute order on finite Coxeter
// groups.
//
// Exit codes: 0 success, 1 a verification check failed or lattice tests
// disagree, 2 usage error (bad type, word, file, or a size cap).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "coxabs/classification.hpp"
#include "coxabs/errors.hpp"
#include "coxabs/oracles.hpp"
#include "coxabs/verify.hpp"

using namespace coxabs;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Target {
  std::string name;
  RootSystemPtr system;
  /// Set for I2(m) with m > 6, which only the symbolic model handles.
  std::optional<long> dihedral;
};

Target load_target(const std::string& arg) {
  Target t;
  t.name = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    t.system = RootSystem::build(CoxeterMatrix::parse(in));
    return t;
  }
  const std::vector<TypeLabel> labels = parse_type_product(arg);
  if (labels.size() == 1 && labels[0].family == Family::I2 && labels[0].bond > 6) {
    t.dihedral = labels[0].bond;
    return t;
  }
  t.system = RootSystem::build(CoxeterMatrix::named(arg));
  return t;
}

int rank_of(const Target& t) { return t.dihedral ? 2 : t.system->rank(); }

std::vector<int> element_word(const Target& t, const std::string& word, bool w0) {
  if (w0 == !word.empty()) throw UsageError("give exactly one of --word and --w0");
  if (w0) {
    if (t.dihedral) {
      std::vector<int> out;
      for (long i = 0; i < *t.dihedral; ++i) out.push_back(static_cast<int>(i % 2));
      return out;
    }
    return longest_element(t.system).reduced_word();
  }
  return parse_word(word, rank_of(t));
}

std::string word_text(const std::vector<int>& word) { return word.empty() ? "1" : word_to_string(word); }

std::string verdict(bool lattice) { return lattice ? "LATTICE" : "NOT A LATTICE"; }

std::string closure_text(const Parabolic& p) { return p.is_trivial() ? "trivial" : to_string(p.type()); }

int cmd_build(const std::string& type) {
  const Target t = load_target(type);
  if (t.dihedral) {
    const dihedral::Group g(*t.dihedral);
    std::cout << "type: " << type << "\nrank: 2\npositive roots: " << g.m() << "\n|W|: " << g.order()
              << "\nw0 = -Id: " << (g.m() % 2 == 0 ? "yes" : "no") << "\n";
    return kExitOk;
  }
  const RootSystemPtr& sys = t.system;
  const Parabolic whole = Parabolic::whole(sys);
  std::cout << "type: " << closure_text(whole) << "\nrank: " << sys->rank() << "\npositive roots: " << sys->num_positive()
            << "\n";
  const std::uint64_t order = whole.order();
  if (order <= group_size_cap()) {
    std::cout << "|W|: " << enumerate_group(sys).size() << "\n";
  } else {
    std::cout << "|W|: " << order << " (from the type; enumeration cap " << group_size_cap() << ")\n";
  }
  const Element w0 = longest_element(sys);
  bool minus_id = true;
  for (RootIndex b = 0; b < sys->num_roots(); ++b) minus_id &= w0(b) == sys->negate(b);
  std::cout << "w0 = -Id: " << (minus_id ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_length(const std::string& type, const std::string& word_arg, bool w0) {
  const Target t = load_target(type);
  const std::vector<int> word = element_word(t, word_arg, w0);
  if (t.dihedral) {
    const dihedral::Group g(*t.dihedral);
    const dihedral::Element w = g.from_word(word);
    std::cout << "element: " << g.word(w) << "\nl_S: " << g.coxeter_length(w) << "\nl_T: " << g.reflection_length(w)
              << "\n";
    return kExitOk;
  }
  const Element w = Element::from_word(t.system, word);
  const std::vector<int> reduced = w.reduced_word();
  std::cout << "element: " << word_text(reduced) << "\nl_S: " << reduced.size() << "\nl_T: " << w.reflection_length()
            << "\n";
  if (reduced.size() > oracle::kDyerWordCap) {
    std::cout << "l_T (Dyer): skipped, l_S exceeds the cap of " << oracle::kDyerWordCap << "\n";
    return kExitOk;
  }
  const int dyer = oracle::dyer_reflection_length(t.system, reduced);
  const bool agree = dyer == w.reflection_length();
  std::cout << "l_T (Dyer): " << dyer << "\noracle agrees: " << (agree ? "yes" : "no") << "\n";
  return agree ? kExitOk : kExitFailure;
}

int cmd_interval(const std::string& type, const std::string& word_arg, bool w0, const std::string& dot_path) {
  const Target t = load_target(type);
  if (t.dihedral) throw UsageError("interval output needs a root system; I2(m) with m > 6 is only modelled symbolically");
  const std::vector<int> word = element_word(t, word_arg, w0);
  const Element u = Element::from_word(t.system, word);
  LengthCache lengths;
  const IntervalPoset poset = interval_of_involution(u, lengths);
  std::cout << interval_to_json(poset, t.name, word_text(u.reduced_word()), lengths) << "\n";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw UsageError("cannot write " + dot_path);
    out << interval_to_dot(poset, lengths);
  }
  return kExitOk;
}

int cmd_lattice(const std::string& type, const std::string& word_arg, bool w0) {
  const Target t = load_target(type);
  const std::vector<int> word = element_word(t, word_arg, w0);
  if (t.dihedral) {
    const DihedralReport d = dihedral_fast_path(*t.dihedral, word);
    std::cout << "element: " << d.word << " (l_T = " << d.reflection_length << ", |[1,u]| = " << d.interval_size
              << ")\nstructural:     " << verdict(d.verdicts.structural) << "\nbrute force:    "
              << verdict(d.verdicts.bruteforce) << "\nclassification: " << verdict(d.verdicts.classification) << "\n"
              << verdict(d.lattice) << "\n";
    return d.verdicts.structural == d.verdicts.bruteforce && d.verdicts.bruteforce == d.verdicts.classification
               ? kExitOk
               : kExitFailure;
  }
  const Element u = Element::from_word(t.system, word);
  if (!u.is_involution()) throw UsageError("lattice tests need an involution; " + word_text(word) + " is not one");
  const Parabolic closure = parabolic_closure(u);
  LengthCache lengths;
  const IntervalPoset poset = interval_of_involution(u, lengths);
  const StructuralVerdict st = is_lattice_structural(poset);
  const bool cls = lattice_by_classification(u);
  std::optional<BruteForceVerdict> bf;
  if (closure.order() <= group_size_cap()) bf = is_lattice_bruteforce(poset);

  std::cout << "element: " << word_text(u.reduced_word()) << " (l_T = " << lengths(u) << ", P(u) = " << closure_text(closure)
            << ", |[1,u]| = " << poset.size() << ")\n";
  std::cout << "structural:     " << verdict(st.is_lattice) << "\n";
  if (bf) {
    std::cout << "brute force:    " << verdict(bf->is_lattice);
    if (bf->witness) {
      std::cout << " (elements " << bf->witness->a << " and " << bf->witness->b << " have "
                << bf->witness->maximal_lower_bounds.size() << " maximal lower bounds)";
    }
    std::cout << "\n";
  } else {
    std::cout << "brute force:    skipped, |P(u)| exceeds the cap of " << group_size_cap() << "\n";
  }
  std::cout << "classification: " << verdict(cls) << "\n";
  if (st.witness) {
    std::cout << "NOT A LATTICE; witness: P1 ∩ P2 of type " << closure_text(st.witness->intersection) << "\n"
              << "  P1 = P(" << word_text(st.witness->v.reduced_word()) << "), type " << closure_text(st.witness->closure_v)
              << "\n  P2 = P(" << word_text(st.witness->w.reduced_word()) << "), type "
              << closure_text(st.witness->closure_w) << "\n";
  } else {
    std::cout << "LATTICE\n";
  }
  const bool agree = st.is_lattice == cls && (!bf || bf->is_lattice == cls);
  return agree ? kExitOk : kExitFailure;
}

int cmd_classify(const std::string& type, const std::string& json_path) {
  const Target t = load_target(type);
  if (t.dihedral) throw UsageError("classify needs a root system; use lattice for I2(m) with m > 6");
  const SweepSummary s = sweep_involutions(t.system, t.name, group_size_cap());
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << std::left << std::setw(18) << "closure" << std::setw(6) << "l_T" << std::setw(8) << "class" << std::setw(10)
            << "|[1,u]|" << std::setw(8) << "class." << std::setw(8) << "struct" << std::setw(8) << "brute"
            << std::setw(7) << "agree" << "representative\n";
  json rows = json::array();
  for (const auto& r : s.rows) {
    std::cout << std::left << std::setw(18) << r.closure_type << std::setw(6) << r.reflection_length << std::setw(8)
              << r.class_size << std::setw(10) << r.interval_size << std::setw(8) << yn(r.classification) << std::setw(8)
              << yn(r.structural) << std::setw(8) << (r.bruteforce ? yn(*r.bruteforce) : "-") << std::setw(7)
              << (r.agree ? "PASS" : "FAIL") << r.representative << "\n";
    rows.push_back({{"closure", r.closure_type},
                    {"reflection_length", r.reflection_length},
                    {"class_size", r.class_size},
                    {"interval_size", r.interval_size},
                    {"classification", r.classification},
                    {"structural", r.structural},
                    {"bruteforce", r.bruteforce ? json(*r.bruteforce) : json(nullptr)},
                    {"agree", r.agree},
                    {"representative", r.representative}});
  }
  std::cout << s.involutions << " involutions, " << s.rows.size() << " classes, " << s.disagreements
            << " disagreements\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    out << json{{"type", t.name}, {"involutions", s.involutions}, {"classes", rows}}.dump(2) << "\n";
  }
  return s.disagreements == 0 && s.product_failures == 0 ? kExitOk : kExitFailure;
}

int cmd_verify(bool deep, const std::string& json_path, const std::vector<int>& only) {
  Verifier verifier({deep, &std::cerr});
  std::vector<int> ids = only;
  if (ids.empty()) {
    for (int i = 1; i <= Verifier::kCriteria; ++i) ids.push_back(i);
  }
  bool all = true;
  json results = json::array();
  for (int id : ids) {
    if (id < 1 || id > Verifier::kCriteria) throw UsageError("criterion ids are 1.." + std::to_string(Verifier::kCriteria));
    const CriterionResult r = verifier.run(id);
    std::cout << format_result(r) << std::endl;
    all = all && r.pass;
    results.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    out << json{{"deep", deep}, {"pass", all}, {"criteria", results}}.dump(2) << "\n";
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Absolute order, involution intervals and lattice checks for finite Coxeter groups"};
  app.require_subcommand(1);

  std::string type, word, dot_path, json_path;
  bool w0 = false, deep = false;
  std::vector<int> only;
  const std::string type_help = "Named type (A3, B4, D6, E7, F4, H3, H4, I2(8), A1xA2) or a Coxeter matrix file";

  auto* build = app.add_subcommand("build", "Root system summary");
  build->add_option("type", type, type_help)->required();

  auto add_element = [&](CLI::App* sub) {
    sub->add_option("type", type, type_help)->required();
    sub->add_option("--word", word, "S-word, e.g. s1,s2,s1 (1-based; s,t allowed in rank 2)");
    sub->add_flag("--w0", w0, "Use the longest element");
  };
  auto* length = app.add_subcommand("length", "Coxeter and reflection lengths of an element");
  add_element(length);
  auto* interval = app.add_subcommand("interval", "The interval [1,u]_T as JSON");
  add_element(interval);
  interval->add_option("--dot", dot_path, "Also write the Hasse diagram in DOT format");
  auto* lattice = app.add_subcommand("lattice", "Lattice verdicts for [1,u]_T");
  add_element(lattice);
  auto* classify = app.add_subcommand("classify", "Lattice verdicts per conjugacy class of involutions");
  classify->add_option("type", type, type_help)->required();
  classify->add_option("--json", json_path, "Also write the table as JSON");
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_flag("--deep", deep, "Include the E6 sweep and the w0 interval of H4");
  verify->add_option("--json", json_path, "Also write the results as JSON");
  verify->add_option("--only", only, "Run only these criteria (1-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(type);
    if (*length) return cmd_length(type, word, w0);
    if (*interval) return cmd_interval(type, word, w0, dot_path);
    if (*lattice) return cmd_lattice(type, word, w0);
    if (*classify) return cmd_classify(type, json_path);
    if (*verify) return cmd_verify(deep, json_path, only);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

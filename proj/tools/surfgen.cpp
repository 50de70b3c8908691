#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "surfgen/catalog.hpp"
#include "surfgen/groupfile.hpp"
#include "surfgen/kernels.hpp"
#include "surfgen/selfcheck.hpp"
#include "surfgen/structconst.hpp"
#include "surfgen/tuplefile.hpp"

using namespace surfgen;

namespace
{

struct CliConfig
{
  std::uint64_t seed = 0;
  double budget = 60.0;
  std::size_t cap = default_class_cap;
  unsigned jobs = 1;
  bool deterministic = false;

  unsigned workers() const { return deterministic ? 1 : std::max(1u, jobs); }
};

class UsageError : public Error
{
public:
  using Error::Error;
};

char const *yes_no(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split_words(std::string const &text)
{
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

/// "<g0> m:n m:n ..." or a catalog line id for the given group.
HurwitzDatum parse_datum(std::string const &text, GroupHandle const &grp)
{
  std::vector<std::string> words = split_words(text);
  if (words.empty())
    throw UsageError("empty datum");
  bool numeric = words[0].find_first_not_of("0123456789") == std::string::npos;
  if (!numeric) {
    for (TableLine const &l : catalog_lines()) {
      if ((l.id == words[0] || l.display_id() == words[0]) && l.group_order() == grp.order())
        return minimal_cogenus_datum(l);
    }
    throw UsageError("no catalog line '" + words[0] + "' for a group of order " +
                     grp.order().str());
  }
  HurwitzDatum datum;
  datum.group_order = grp.order();
  datum.cogenus = std::stoull(words[0]);
  for (std::size_t i = 1; i < words.size(); ++i)
    datum.branches.push_back(parse_branch(words[i]));
  datum.branches = sorted_branches(datum.branches);
  GenusResult r = genus_from(datum.group_order, datum.cogenus, datum.branches);
  if (!r.genus)
    throw UsageError("datum has non-integral genus");
  datum.genus = *r.genus;
  return datum;
}

std::vector<std::uint64_t> parse_list(std::string const &text)
{
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    out.push_back(std::stoull(item));
  return out;
}

int run_hurwitz(std::string const &order, std::uint64_t cogenus,
                std::vector<std::string> const &branches)
{
  std::vector<Branch> bs;
  for (std::string const &b : branches)
    bs.push_back(parse_branch(b));
  GenusResult r = genus_from(BigInt(order), cogenus, bs);
  if (!r.genus) {
    std::cout << "non-integral\n";
    return 1;
  }
  std::cout << "genus = " << *r.genus << "\n";
  return 0;
}

int run_dijl(CliConfig const &cfg, std::string const &group, std::string const &orders,
             std::string const &indices)
{
  GroupHandle grp = resolve_group(group);
  std::vector<std::uint64_t> ord = parse_list(orders);
  std::vector<std::uint64_t> idx = indices.empty() ? std::vector<std::uint64_t>{1, 1, 1}
                                                   : parse_list(indices);
  if (ord.size() != 3 || idx.size() != 3)
    throw UsageError("--orders and --class-index take three comma-separated values");

  RandomSource rng(cfg.seed, 0xD11);
  std::cout << "group = " << grp.name() << "\n";
  std::cout << "order = " << grp.order() << "\n";
  std::vector<ConjugacyClass> chosen;
  char const *names[] = {"i", "j", "l"};
  for (int k = 0; k < 3; ++k) {
    std::vector<ConjugacyClass> list = classes_of_order(grp, ord[k], rng, cfg.cap);
    if (idx[k] < 1 || idx[k] > list.size())
      throw UsageError("group has " + std::to_string(list.size()) + " classes of order " +
                       std::to_string(ord[k]));
    ConjugacyClass const &C = list[idx[k] - 1];
    std::cout << "class_" << names[k] << " = order " << ord[k] << " index " << idx[k] << " of "
              << list.size() << " size " << C.size << " centralizer " << C.centralizer_order
              << " representative " << print_cycles(C.representative) << "\n";
    chosen.push_back(C);
  }
  std::cout << "d_ijl = " << count_dijl(chosen[0], chosen[1], chosen[2], cfg.workers(), cfg.cap)
            << "\n";
  return 0;
}

void print_verdict(Verdict const &v)
{
  std::cout << "cond_a = " << yes_no(v.cond_a) << "\n";
  std::cout << "cond_b = " << yes_no(v.cond_b) << "\n";
  std::cout << "cond_c = " << yes_no(v.cond_c) << "\n";
  for (std::string const &detail : v.details)
    std::cout << "detail = " << detail << "\n";
  std::cout << "verdict = " << (v.accepted() ? "ACCEPTED" : "REJECTED") << "\n";
}

int run_test_tuple(std::string const &group, std::string const &datum_text, std::string const &tuple)
{
  GroupHandle grp = resolve_group(group);
  HurwitzDatum datum = parse_datum(datum_text, grp);
  TupleFile tf = load_tuple_file(tuple, grp.degree());
  std::cout << "genus = " << datum.genus << "\n";
  std::cout << "cogenus = " << datum.cogenus << "\n";
  Verdict v = test_tuple(grp, datum, tf.tuple);
  print_verdict(v);
  return v.accepted() ? 0 : 1;
}

int run_find_tuple(CliConfig const &cfg, std::string const &group, std::string const &datum_text,
                   std::string const &out_path, std::size_t attempts)
{
  GroupHandle grp = resolve_group(group);
  HurwitzDatum datum = parse_datum(datum_text, grp);
  SearchBudget b;
  b.max_attempts = attempts;
  b.seconds = cfg.budget;
  b.rng = RandomSource(cfg.seed, 0xF17D);
  b.workers = cfg.workers();
  b.class_cap = cfg.cap;
  FindResult r = find_tuple(grp, datum, b);
  std::cout << "genus = " << datum.genus << "\n";
  std::cout << "cogenus = " << datum.cogenus << "\n";
  if (!r.tuple) {
    std::cout << "verdict = NOT_FOUND\n";
    std::cout << "reason = " << r.failure << "\n";
    return 1;
  }
  if (cfg.workers() == 1)
    std::cout << "attempts = " << r.attempts << "\n";
  std::cout << "verdict = FOUND\n";
  std::string text = format_tuple_file(grp.name(), *r.tuple);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw UsageError("cannot write " + out_path);
    out << text;
  }
  return 0;
}

int run_reproduce(CliConfig const &cfg, std::string const &line, std::size_t attempts)
{
  ReproduceOptions opts;
  opts.seed = cfg.seed;
  opts.budget_seconds = cfg.budget;
  opts.max_attempts = attempts;
  opts.jobs = cfg.workers();
  opts.class_cap = cfg.cap;
  bool all_green = true;
  for (LineReport const &r : reproduce(line, opts)) {
    std::string id = r.line.display_id();
    std::cout << "line " << id << ": " << r.status;
    if (r.datum.genus >= 2)
      std::cout << " genus = " << r.datum.genus << " cogenus = " << r.datum.cogenus;
    std::cout << "\n";
    for (MethodReport const &m : r.methods) {
      std::cout << "line " << id << " " << m.method << " = "
                << (m.accepted ? "ACCEPTED" : "REJECTED");
      if (!m.accepted && !m.note.empty())
        std::cout << " (" << m.note << ")";
      std::cout << "\n";
    }
    all_green = all_green && r.green();
  }
  return all_green ? 0 : 1;
}

int run_centralizer(std::uint64_t field_size)
{
  CentralizerReport r = sp4_centralizer_check(field_size);
  std::cout << "group = Sp4(" << field_size << ")\n";
  std::cout << "order = " << r.group_order << "\n";
  bool consistent = true;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    auto const &c = r.classes[i];
    std::cout << "involution_class_" << i + 1 << " = size " << c.size << " centralizer "
              << c.centralizer_order << "\n";
    consistent = consistent && c.size * c.centralizer_order == r.group_order;
  }
  std::cout << "centralizer_q4 = " << yes_no(r.found) << "\n";
  return r.found && consistent ? 0 : 1;
}

int run_selfcheck(CliConfig const &cfg)
{
  std::cout << "kernels = " << kernels::active().name << "\n";
  bool ok = true;
  for (GroupHandle const &grp : oracle_corpus()) {
    OracleReport r = brute_force_check(grp, cfg.seed);
    std::cout << "selfcheck " << r.group << " = " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (std::string const &f : r.failures)
      std::cout << "selfcheck " << r.group << " failure = " << f << "\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

int run_convert(CliConfig const &cfg, std::string const &group, std::string const &name)
{
  GroupDefinition def = parse_group_definition(read_text_file(group));
  GroupHandle grp = build_from_definition(def, cfg.cap);
  std::cout << format_perm_group(name.empty() ? def.name : name, grp.generators(), grp.order());
  return 0;
}

int run_table(std::string const &which)
{
  if (which == "lines")
    std::cout << render_line_table(catalog_lines());
  else if (which == "families")
    std::cout << render_family_table();
  else
    throw UsageError("--which takes lines or families");
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Generating tuples and branching data for groups acting on surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--budget", cfg.budget, "Seconds per search");
  app.add_option("--cap", cfg.cap, "Largest conjugacy class to materialize");
  app.add_option("--jobs", cfg.jobs, "Worker threads");
  app.add_flag("--deterministic", cfg.deterministic, "Single worker, reproducible output");

  std::string order, group, datum_text, tuple, orders, indices, out_path, line = "all", name;
  std::string which = "lines";
  std::uint64_t cogenus = 0, field_size = 4;
  std::vector<std::string> branches;
  std::size_t attempts = 100000;

  auto *hurwitz = app.add_subcommand("hurwitz", "Genus from the Riemann-Hurwitz formula");
  hurwitz->add_option("--order", order, "Group order")->required();
  hurwitz->add_option("--cogenus", cogenus, "Genus of the quotient");
  hurwitz->add_option("--branch", branches, "Branching m:n (repeatable)");

  auto *dijl = app.add_subcommand("dijl", "Class multiplication coefficient");
  dijl->add_option("--group", group, "Group file or builtin name")->required();
  dijl->add_option("--orders", orders, "Element orders i,j,l")->required();
  dijl->add_option("--class-index", indices, "1-based class choice per order, default 1,1,1");

  auto *test = app.add_subcommand("test-tuple", "Check a generating tuple");
  test->add_option("--group", group, "Group file or builtin name")->required();
  test->add_option("--datum", datum_text, "\"g0 m:n ...\" or a line id")->required();
  test->add_option("--tuple", tuple, "Tuple file")->required();

  auto *find = app.add_subcommand("find-tuple", "Search for a generating tuple");
  find->add_option("--group", group, "Group file or builtin name")->required();
  find->add_option("--datum", datum_text, "\"g0 m:n ...\" or a line id")->required();
  find->add_option("--attempts", attempts, "Attempt cap");
  find->add_option("--out", out_path, "Write the tuple file here");

  auto *repro = app.add_subcommand("reproduce", "Reproduce table lines");
  repro->add_option("--line", line, "Line id, id@q, or all");
  repro->add_option("--attempts", attempts, "Attempt cap per search");

  auto *centralizer = app.add_subcommand("centralizer", "Involution centralizers of Sp4(q)");
  centralizer->add_option("--q", field_size, "Field size");

  auto *selfcheck = app.add_subcommand("selfcheck", "Brute-force oracle suite on small groups");

  auto *convert = app.add_subcommand("convert", "Print a group file as permutations");
  convert->add_option("--group", group, "Group file")->required();
  convert->add_option("--name", name, "Name for the output");

  auto *table = app.add_subcommand("table", "Print the encoded line or family table");
  table->add_option("--which", which, "lines or families");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*hurwitz)
      return run_hurwitz(order, cogenus, branches);
    if (*dijl)
      return run_dijl(cfg, group, orders, indices);
    if (*test)
      return run_test_tuple(group, datum_text, tuple);
    if (*find)
      return run_find_tuple(cfg, group, datum_text, out_path, attempts);
    if (*repro)
      return run_reproduce(cfg, line, attempts);
    if (*centralizer)
      return run_centralizer(field_size);
    if (*selfcheck)
      return run_selfcheck(cfg);
    if (*convert)
      return run_convert(cfg, group, name);
    if (*table)
      return run_table(which);
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

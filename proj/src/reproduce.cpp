#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "surfgen/catalog.hpp"
#include "surfgen/tuplefile.hpp"

namespace surfgen
{

namespace
{

std::uint64_t stream_key(std::string const &text)
{
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001B3ull;
  }
  return h;
}

SearchBudget budget_for(TableLine const &line, ReproduceOptions const &opts, std::uint64_t salt)
{
  SearchBudget b;
  b.max_attempts = opts.max_attempts;
  b.seconds = opts.budget_seconds;
  b.rng = RandomSource(opts.seed, stream_key(line.display_id())).split(salt);
  b.workers = 1;
  b.class_cap = opts.class_cap;
  return b;
}

MethodReport judge(std::string method, GroupHandle const &grp, HurwitzDatum const &datum,
                   GeneratingTuple t)
{
  MethodReport r;
  r.method = std::move(method);
  Verdict v = test_tuple(grp, datum, t);
  r.accepted = v.accepted();
  for (std::string const &s : v.details)
    r.note += (r.note.empty() ? "" : "; ") + s;
  r.tuple = std::move(t);
  return r;
}

std::size_t entry_of_order(GeneratingTuple const &t, std::uint64_t m)
{
  for (std::size_t i = 0; i < t.branch.size(); ++i) {
    if (t.declared_orders[i] == m)
      return i;
  }
  throw Error("tuple has no entry of order " + std::to_string(m));
}

GeneratingTuple load_fixture(std::string const &id, GroupHandle const &grp)
{
  return load_tuple_file(data_dir() / "tuples" / (id + ".tup"), grp.degree()).tuple;
}

HurwitzDatum datum_with(BigInt const &order, std::uint64_t cogenus, std::vector<Branch> branches)
{
  HurwitzDatum datum;
  datum.group_order = order;
  datum.cogenus = cogenus;
  datum.branches = sorted_branches(branches);
  return datum;
}

GeneratingTuple searched(GroupHandle const &grp, HurwitzDatum const &datum, SearchBudget const &b)
{
  FindResult r = find_tuple(grp, datum, b);
  if (!r.tuple)
    throw Error("intermediate search failed: " + r.failure);
  return *r.tuple;
}

// x of order x_order is a commutator [a, b] with a of order a_order and
// <a, x> = G; the handle pair closes against x^-1.
struct Handle
{
  Permutation x, left, right;
};

Handle handle_recipe(GroupHandle const &grp, std::uint64_t x_order, std::uint64_t a_order,
                     SearchBudget &budget, ClassCache &cache)
{
  Permutation x = element_of_order(grp, x_order, budget.rng);
  CommutatorOptions co;
  co.a_order = a_order;
  co.generate_with = {x};
  auto [a, b] = commutator_solve(grp, x, budget, cache, co);
  return {x, a, b};
}

GeneratingTuple handle_tuple(Handle const &h)
{
  GeneratingTuple t;
  t.left = {h.left};
  t.right = {h.right};
  t.branch = {~h.x};
  t.declared_orders = {h.x.order()};
  return t;
}

// Splits x^-1 into y z with y conjugate to x and z of order z_order.
GeneratingTuple handle_with_split(GroupHandle const &grp, Handle const &h, std::uint64_t z_order,
                                  SearchBudget &budget)
{
  BudgetClock clock(budget);
  while (clock.tick()) {
    Permutation y = conjugate(h.x, grp.uniform_element(budget.rng));
    Permutation z = ~y * ~h.x;
    if (z.order() != z_order)
      continue;
    GeneratingTuple t;
    t.left = {h.left};
    t.right = {h.right};
    t.branch = {y, z};
    t.declared_orders = {y.order(), z_order};
    return t;
  }
  throw BudgetExhausted("no conjugate split found");
}

struct RecipePlan
{
  std::string group;
  std::uint64_t x_order, a_order;
};

std::optional<RecipePlan> handle_plan(std::string const &id)
{
  static std::map<std::string, RecipePlan> const plans = {
      {"4a", {"PSU4", 5, 12}}, {"4b", {"PSU4", 5, 12}}, {"11", {"M11", 5, 11}},
      {"12a", {"M22", 5, 11}}, {"12b", {"M22", 5, 11}}, {"13", {"J1", 15, 19}}};
  if (auto it = plans.find(id); it != plans.end())
    return it->second;
  return std::nullopt;
}

bool has_recipe(TableLine const &line)
{
  static std::vector<std::string> const ids = {"1b", "2a", "2c", "2f", "3a", "3g", "3h", "3i"};
  if (line.id == "5d" && line.field_size == 9)
    return true;
  return !line.entry->series &&
         (handle_plan(line.id) || std::find(ids.begin(), ids.end(), line.id) != ids.end());
}

GeneratingTuple run_recipe(TableLine const &line, GroupHandle const &grp, SearchBudget &budget)
{
  std::string const &id = line.id;
  BigInt const order = grp.order();
  ClassCache cache(grp, budget.class_cap);

  if (auto plan = handle_plan(id)) {
    Handle h = handle_recipe(grp, plan->x_order, plan->a_order, budget, cache);
    if (id == "4b" || id == "12b")
      return handle_with_split(grp, h, 7, budget);
    return handle_tuple(h);
  }
  if (id == "1b") {
    // (x, y, z) of orders 5, 5, 7 with x y z = 1; replace x by [a, b].
    GeneratingTuple base = searched(grp, datum_with(order, 0, {{5, 2}, {7, 1}}), budget);
    CommutatorOptions co;
    co.a_order = 5;
    auto [a, b] = commutator_solve(grp, base.branch[0], budget, cache, co);
    GeneratingTuple t;
    t.left = {a};
    t.right = {b};
    t.branch = {base.branch[1], base.branch[2]};
    t.declared_orders = {base.declared_orders[1], base.declared_orders[2]};
    return t;
  }
  if (id == "2a" || id == "3a") {
    // Cogenus 1 with two involutions; the first involution becomes a handle.
    GeneratingTuple base = searched(grp, datum_with(order, 1, {{2, 2}}), budget);
    auto [a, b] = commutator_solve(grp, base.branch[0], budget, cache);
    GeneratingTuple t;
    t.left = {base.left[0], a};
    t.right = {base.right[0], b};
    t.branch = {base.branch[1]};
    t.declared_orders = {2};
    return t;
  }
  if (id == "2c") {
    GeneratingTuple base = searched(grp, datum_with(order, 0, {{2, 2}, {3, 2}}), budget);
    auto [a, b] = commutator_solve(grp, base.branch[0], budget, cache);
    GeneratingTuple t;
    t.left = {a};
    t.right = {b};
    t.branch.assign(base.branch.begin() + 1, base.branch.end());
    t.declared_orders.assign(base.declared_orders.begin() + 1, base.declared_orders.end());
    return t;
  }
  if (id == "5d" && line.field_size == 9) {
    // One involution and two elements of one class of order 5, from a pair
    // of classes with both mixed coefficients nonzero.
    RandomSource rng = budget.rng.split(5);
    std::vector<ConjugacyClass> twos = classes_of_order(grp, 2, rng, budget.class_cap);
    std::optional<GeneratingTuple> last;
    for (ConjugacyClass const &C5 : classes_of_order(grp, 5, rng, budget.class_cap)) {
      GeneratingTuple t = two_class_build(grp, twos.at(0), C5, MaxVariant::split_12,
                                          budget.class_cap);
      if (generates_whole(grp, t.entries()))
        return t;
      last = std::move(t);
    }
    if (!last)
      throw Error("no class of order 5");
    return *last;
  }
  if (id == "2f") {
    GeneratingTuple base = load_fixture("2e", grp);
    return split_entry(base, entry_of_order(base, 3), -1, -1);
  }
  if (id == "3g" || id == "3h" || id == "3i") {
    GeneratingTuple t = load_fixture("3f", grp);
    if (id != "3h")
      t = split_entry(t, entry_of_order(t, 7), 2, 6);
    if (id != "3g")
      t = split_entry(t, entry_of_order(t, 9), 2, 8);
    return t;
  }
  throw Error("no recipe for line " + id);
}

} // namespace

LineReport reproduce_line(TableLine const &line, ReproduceOptions const &opts)
{
  auto start = Clock::now();
  LineReport rep;
  rep.line = line;

  auto finish = [&](std::string status) {
    rep.status = std::move(status);
    rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
  };

  try {
    rep.datum = minimal_cogenus_datum(line);
  } catch (Error const &e) {
    rep.methods.push_back({"datum", false, e.what(), std::nullopt});
    return finish("REJECTED");
  }
  DatumVerdict dv = validate_datum(rep.datum, line.id);
  if (!dv.accepted()) {
    MethodReport m{"datum", false, {}, std::nullopt};
    for (std::string const &f : dv.failures)
      m.note += (m.note.empty() ? "" : "; ") + f;
    rep.methods.push_back(std::move(m));
    return finish("REJECTED");
  }
  if (!desk_scale(line))
    return finish("OUT_OF_DESK_SCALE");

  GroupHandle grp;
  try {
    grp = construct_group(line.entry->group, line.field_size);
  } catch (Error const &e) {
    rep.methods.push_back({"group", false, e.what(), std::nullopt});
    return finish("REJECTED");
  }

  bool fixture = !line.entry->series &&
                 std::filesystem::exists(data_dir() / "tuples" / (line.id + ".tup"));
  bool recipe = has_recipe(line);

  auto guarded = [&](std::string const &method, auto &&body) {
    try {
      rep.methods.push_back(body());
    } catch (Error const &e) {
      rep.methods.push_back({method, false, e.what(), std::nullopt});
    }
  };

  if (fixture)
    guarded("fixture", [&] { return judge("fixture", grp, rep.datum, load_fixture(line.id, grp)); });
  if (recipe) {
    guarded("recipe", [&] {
      SearchBudget b = budget_for(line, opts, 1);
      return judge("recipe", grp, rep.datum, run_recipe(line, grp, b));
    });
  } else {
    guarded("search", [&] {
      SearchBudget b = budget_for(line, opts, 2);
      FindResult r = find_tuple(grp, rep.datum, b);
      if (!r.tuple)
        return MethodReport{"search", false, r.failure, std::nullopt};
      MethodReport m = judge("search", grp, rep.datum, *r.tuple);
      m.note = std::to_string(r.attempts) + " attempts";
      return m;
    });
  }

  bool ok = !rep.methods.empty() &&
            std::all_of(rep.methods.begin(), rep.methods.end(),
                        [](MethodReport const &m) { return m.accepted; });
  return finish(ok ? "ACCEPTED" : "REJECTED");
}

std::vector<LineReport> reproduce(std::string const &which, ReproduceOptions const &opts)
{
  std::vector<TableLine> selected;
  for (TableLine const &l : catalog_lines()) {
    if (which == "all" || which == l.id || which == l.display_id())
      selected.push_back(l);
  }
  if (selected.empty())
    throw Error("unknown line '" + which + "'");

  std::vector<LineReport> reports(selected.size());
  unsigned workers = std::max(1u, std::min<unsigned>(opts.jobs, selected.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < selected.size();)
      reports[i] = reproduce_line(selected[i], opts);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work);
    for (std::thread &t : pool)
      t.join();
  }
  return reports;
}

CentralizerReport sp4_centralizer_check(std::uint64_t field_size)
{
  CentralizerReport rep;
  rep.field_size = field_size;
  GroupHandle grp = construct_group("Sp4", field_size);
  rep.group_order = grp.order();
  RandomSource rng(0, stream_key("sp4"));
  BigInt target = BigInt(field_size) * field_size * field_size * field_size;
  for (ConjugacyClass const &C : classes_of_order(grp, 2, rng)) {
    rep.classes.push_back({C.size, C.centralizer_order});
    if (C.centralizer_order == target)
      rep.found = true;
  }
  return rep;
}

} // namespace surfgen

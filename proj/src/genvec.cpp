#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "surfgen/genvec.hpp"

namespace surfgen
{

namespace
{

Permutation fit(Permutation const &p, std::size_t degree)
{
  return p.degree() < degree ? p.extended(degree) : p;
}

std::vector<Branch> merge_branches(std::vector<Branch> const &branches)
{
  std::map<std::uint64_t, std::uint64_t> counts;
  for (Branch const &b : branches)
    counts[b.order] += b.count;
  std::vector<Branch> out;
  for (auto [m, n] : counts)
    out.push_back({m, n});
  return out;
}

std::vector<std::uint64_t> expanded_orders(std::vector<Branch> const &branches)
{
  std::vector<std::uint64_t> out;
  for (Branch const &b : sorted_branches(branches)) {
    for (std::uint64_t i = 0; i < b.count; ++i)
      out.push_back(b.order);
  }
  return out;
}

void check_relations(GeneratingTuple const &t, std::size_t degree, char const *who)
{
  for (std::size_t i = 0; i < t.branch.size(); ++i) {
    if (t.branch[i].order() != t.declared_orders[i])
      throw Error(std::string(who) + " built an entry of the wrong order");
  }
  if (!tuple_product(t, degree).is_identity())
    throw Error(std::string(who) + " built a tuple violating the product relation");
}

} // namespace

std::vector<Branch> GeneratingTuple::branches() const
{
  std::vector<Branch> raw;
  for (std::uint64_t m : declared_orders)
    raw.push_back({m, 1});
  return merge_branches(raw);
}

std::vector<Permutation> GeneratingTuple::entries() const
{
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < left.size(); ++k) {
    out.push_back(left[k]);
    out.push_back(right[k]);
  }
  out.insert(out.end(), branch.begin(), branch.end());
  return out;
}

Permutation tuple_product(GeneratingTuple const &t, std::size_t degree)
{
  Permutation p(degree);
  for (std::size_t k = 0; k < t.left.size() && k < t.right.size(); ++k)
    p = p * commutator(fit(t.left[k], degree), fit(t.right[k], degree));
  for (Permutation const &c : t.branch)
    p = p * fit(c, degree);
  return p;
}

Verdict test_relations(GroupHandle const &grp, HurwitzDatum const &datum, GeneratingTuple const &t)
{
  for (Permutation const &e : t.entries()) {
    if (!grp.contains(e))
      throw Error("tuple entry " + print_cycles(e) + " is not in the group");
  }

  Verdict v;
  v.cond_a = true;
  if (t.left.size() != t.right.size() || t.left.size() != datum.cogenus) {
    v.cond_a = false;
    v.details.push_back("expected " + std::to_string(datum.cogenus) + " handle pairs, got " +
                        std::to_string(t.left.size()) + " and " + std::to_string(t.right.size()));
  }
  if (t.branch.size() != t.declared_orders.size()) {
    v.cond_a = false;
    v.details.push_back("every branch entry needs a declared order");
  } else {
    for (std::size_t i = 0; i < t.branch.size(); ++i) {
      std::uint64_t o = t.branch[i].order();
      if (o != t.declared_orders[i]) {
        v.cond_a = false;
        v.details.push_back("entry c" + std::to_string(i + 1) + " has order " +
                            std::to_string(o) + ", declared " +
                            std::to_string(t.declared_orders[i]));
      }
    }
  }
  if (t.branches() != merge_branches(datum.branches)) {
    v.cond_a = false;
    v.details.push_back("branch entries " + format_branches(t.branches()) +
                        " do not match the datum " +
                        format_branches(merge_branches(datum.branches)));
  }

  Permutation prod = tuple_product(t, grp.degree());
  v.cond_b = prod.is_identity();
  if (!v.cond_b)
    v.details.push_back("product of commutators and entries is " + print_cycles(prod));
  return v;
}

Verdict test_tuple(GroupHandle const &grp, HurwitzDatum const &datum, GeneratingTuple const &t)
{
  Verdict v = test_relations(grp, datum, t);
  std::vector<Permutation> gens;
  for (Permutation const &e : t.entries())
    gens.push_back(fit(e, grp.degree()));
  v.cond_c = generates_whole(grp, gens);
  if (!v.cond_c)
    v.details.push_back("the entries generate a proper subgroup");
  return v;
}

bool BudgetClock::tick()
{
  if (attempts_ >= max_attempts_ || elapsed() >= seconds_)
    return false;
  ++attempts_;
  return true;
}

double BudgetClock::elapsed() const
{
  return std::chrono::duration<double>(Clock::now() - start_).count();
}

std::pair<Permutation, Permutation> commutator_solve(GroupHandle const &grp, Permutation const &z,
                                                     SearchBudget &budget, ClassCache &cache,
                                                     CommutatorOptions const &opts)
{
  Permutation target = fit(z, grp.degree());
  if (target.is_identity())
    throw Error("commutator_solve needs a non-identity target");
  if (!grp.contains(target))
    throw Error("commutator target is not in the group");

  BudgetClock clock(budget);
  while (clock.tick()) {
    Permutation a = opts.a_order ? element_of_order(grp, *opts.a_order, budget.rng)
                                 : grp.uniform_element(budget.rng);
    Permutation az = a * target;
    if (!cache.conjugate(a, az))
      continue;
    if (!opts.generate_with.empty()) {
      std::vector<Permutation> gens{a};
      for (Permutation const &g : opts.generate_with)
        gens.push_back(fit(g, grp.degree()));
      if (!generates_whole(grp, gens))
        continue;
    }
    Permutation b = *cache.representative_action(a, az);
    if (!(commutator(a, b) == target))
      throw Error("commutator_solve produced a wrong pair");
    return {a, b};
  }
  throw BudgetExhausted("commutator_solve: budget exhausted after " +
                        std::to_string(clock.attempts()) + " draws");
}

std::pair<Permutation, Permutation> commutator_solve(GroupHandle const &grp, Permutation const &z,
                                                     SearchBudget &budget)
{
  ClassCache cache(grp, budget.class_cap);
  return commutator_solve(grp, z, budget, cache);
}

GeneratingTuple two_class_build(GroupHandle const &grp, ConjugacyClass const &cls_a,
                                ConjugacyClass const &cls_b, MaxVariant variant, std::size_t cap,
                                std::size_t generation_tries)
{
  if (cls_a.representative.is_identity() || cls_b.representative.is_identity())
    throw Error("two_class_build needs classes of non-identity elements");

  auto full = [&](ConjugacyClass const &C) {
    return C.materialized() ? C : class_of(grp, C.representative, true, cap);
  };
  auto fits = [&](GeneratingTuple const &t) {
    return generates_whole(grp, t.entries());
  };
  auto pick = [&](std::vector<GeneratingTuple> const &candidates) {
    if (candidates.empty())
      throw Error("two_class_build: the required structure constant is zero");
    for (GeneratingTuple const &t : candidates) {
      if (fits(t))
        return t;
    }
    return candidates.front();
  };

  std::size_t const n = grp.degree();

  // Pairs (x, y) in P x Q with x y = a, a the representative of P: runs
  // over y^-1 in Q^-1 and keeps x = a y^-1 when it lies in P. Returns
  // (conjugator g with a^g = x, y).
  auto solutions = [&](ConjugacyClass const &cls_p, ConjugacyClass const &cls_q, std::size_t limit) {
    ConjugacyClass cls_p_full = full(cls_p);
    ConjugacyClass Qinv = class_of(grp, ~cls_q.representative, true, cap);
    std::vector<std::pair<Permutation, Permutation>> out;
    for (std::size_t r = 0; r < Qinv.index->size() && out.size() < limit; ++r) {
      Permutation yinv = Permutation::unchecked(Qinv.index->element(r));
      Permutation x = cls_p_full.representative * yinv;
      if (auto g = cls_p_full.witness_for(x))
        out.emplace_back(*g, ~yinv);
    }
    return std::make_pair(cls_p_full.representative, out);
  };

  std::vector<GeneratingTuple> candidates;
  switch (variant) {
  case MaxVariant::one_c:
  case MaxVariant::split_21:
  case MaxVariant::split_12: {
    bool swap = variant == MaxVariant::split_12;
    ConjugacyClass const &cls_p = swap ? cls_b : cls_a;
    ConjugacyClass const &cls_q = swap ? cls_a : cls_b;
    auto [a, sols] = solutions(cls_p, cls_q, generation_tries);
    for (auto const &[g, b] : sols) {
      GeneratingTuple t;
      Permutation ag = conjugate(a, g);
      if (variant == MaxVariant::one_c) {
        t.left = {a};
        t.right = {g};
        t.branch = {b};
      } else if (variant == MaxVariant::split_21) {
        t.branch = {~a, ag, b};
      } else {
        t.branch = {~b, ~ag, a};
      }
      for (Permutation const &c : t.branch)
        t.declared_orders.push_back(c.order());
      check_relations(t, n, "two_class_build");
      candidates.push_back(std::move(t));
    }
    break;
  }
  case MaxVariant::two_c: {
    // c1 c2 = a with a, c1 in C1 and c2 in C2.
    auto [a, sols] = solutions(cls_a, cls_b, generation_tries);
    // x in C2 and g with x^g a = x, i.e. x^g = x a^-1 in C2.
    ConjugacyClass X = full(cls_b);
    Permutation ainv = ~a;
    std::vector<std::pair<Permutation, Permutation>> handles;
    for (std::size_t r = 0; r < X.index->size() && handles.size() < generation_tries; ++r) {
      Permutation x = Permutation::unchecked(X.index->element(r));
      Permutation w = x * ainv;
      auto ww = X.witness_for(w);
      if (!ww)
        continue;
      Permutation wx = Permutation::unchecked(X.index->witness(r));
      handles.emplace_back(x, ~wx * *ww);
    }
    for (std::size_t i = 0; i < sols.size() && candidates.size() < generation_tries; ++i) {
      for (std::size_t j = 0; j < handles.size() && candidates.size() < generation_tries; ++j) {
        auto const &[g1, c2] = sols[i];
        GeneratingTuple t;
        t.left = {handles[j].first};
        t.right = {handles[j].second};
        t.branch = {conjugate(a, g1), c2};
        for (Permutation const &c : t.branch)
          t.declared_orders.push_back(c.order());
        check_relations(t, n, "two_class_build");
        candidates.push_back(std::move(t));
      }
    }
    if (handles.empty())
      candidates.clear();
    break;
  }
  }
  return pick(candidates);
}

GeneratingTuple split_entry(GeneratingTuple const &t, std::size_t k, long long u, long long v)
{
  if (k >= t.branch.size())
    throw Error("split_entry: no branch entry " + std::to_string(k));
  long long m = static_cast<long long>(t.branch[k].order());
  auto norm = [m](long long e) { return ((e % m) + m) % m; };
  long long un = norm(u), vn = norm(v);
  if (std::gcd(un, m) != 1 || std::gcd(vn, m) != 1)
    throw Error("split_entry: exponents must be coprime to the order " + std::to_string(m));
  if ((un + vn) % m != 1 % m)
    throw Error("split_entry: exponents must sum to 1 modulo the order " + std::to_string(m));

  GeneratingTuple out = t;
  std::uint64_t order = t.declared_orders.at(k);
  out.branch.erase(out.branch.begin() + static_cast<long>(k));
  out.declared_orders.erase(out.declared_orders.begin() + static_cast<long>(k));
  out.branch.insert(out.branch.begin() + static_cast<long>(k), {t.branch[k].pow(u), t.branch[k].pow(v)});
  out.declared_orders.insert(out.declared_orders.begin() + static_cast<long>(k), {order, order});
  return out;
}

GeneratingTuple lift_cogenus(GeneratingTuple const &t, std::size_t target, std::size_t degree)
{
  GeneratingTuple out = t;
  while (out.left.size() < target) {
    out.left.emplace_back(degree);
    out.right.emplace_back(degree);
  }
  return out;
}

namespace
{

// Classes of each required order, shared read-only by the workers.
struct SearchPlan
{
  std::vector<std::uint64_t> orders;                      // expanded, sorted
  std::map<std::uint64_t, std::vector<ConjugacyClass>> classes;
  std::map<std::uint64_t, bool> distinct;                 // force distinct classes
};

std::optional<std::size_t> class_position(std::vector<ConjugacyClass> const &list,
                                          Permutation const &x)
{
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].contains(x))
      return i;
  }
  return std::nullopt;
}

std::optional<GeneratingTuple> attempt(GroupHandle const &grp, HurwitzDatum const &datum,
                                       SearchPlan const &plan, RandomSource &rng,
                                       ClassCache &cache, FindOptions const &opts,
                                       std::size_t class_cap)
{
  std::size_t const k = plan.orders.size();
  std::size_t const n = grp.degree();

  // Class choice per entry; equal orders draw without replacement when the
  // distinct rule applies and enough classes exist.
  std::vector<std::size_t> choice(k);
  std::map<std::uint64_t, std::vector<std::size_t>> used;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t m = plan.orders[i];
    auto const &list = plan.classes.at(m);
    std::vector<std::size_t> pool;
    for (std::size_t c = 0; c < list.size(); ++c) {
      auto const &u = used[m];
      if (!plan.distinct.at(m) || std::find(u.begin(), u.end(), c) == u.end())
        pool.push_back(c);
    }
    if (pool.empty()) {
      for (std::size_t c = 0; c < list.size(); ++c)
        pool.push_back(c);
    }
    choice[i] = pool[rng.below(pool.size())];
    used[m].push_back(choice[i]);
  }

  GeneratingTuple t;
  t.declared_orders = plan.orders;
  std::size_t const drawn = datum.cogenus == 0 ? k - 1 : k;
  Permutation prod(n);
  for (std::size_t i = 0; i < drawn; ++i) {
    ConjugacyClass const &C = plan.classes.at(plan.orders[i])[choice[i]];
    Permutation c = conjugate(C.representative, grp.uniform_element(rng));
    prod = prod * c;
    t.branch.push_back(std::move(c));
  }

  if (datum.cogenus == 0) {
    // Solve for the last entry and check its order and class constraint.
    Permutation last = ~prod;
    std::uint64_t m = plan.orders[k - 1];
    if (last.order() != m)
      return std::nullopt;
    if (plan.distinct.at(m)) {
      auto const &list = plan.classes.at(m);
      auto pos = class_position(list, last);
      if (!pos)
        return std::nullopt;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (plan.orders[i] == m && choice[i] == *pos && list.size() > 1)
          return std::nullopt;
      }
    }
    t.branch.push_back(std::move(last));
  } else {
    // Random handles except the last pair, which solves the commutator.
    Permutation handles(n);
    for (std::size_t h = 0; h + 1 < datum.cogenus; ++h) {
      t.left.push_back(grp.uniform_element(rng));
      t.right.push_back(grp.uniform_element(rng));
      handles = handles * commutator(t.left.back(), t.right.back());
    }
    Permutation z = ~handles * ~prod;
    if (z.is_identity()) {
      Permutation a = grp.uniform_element(rng);
      t.left.push_back(a);
      t.right.push_back(a);
    } else {
      SearchBudget inner;
      inner.max_attempts = opts.inner_commutator_draws;
      inner.seconds = 1e9;
      inner.rng = rng.split(rng.next());
      inner.class_cap = class_cap;
      try {
        auto [a, b] = commutator_solve(grp, z, inner, cache);
        t.left.push_back(std::move(a));
        t.right.push_back(std::move(b));
      } catch (BudgetExhausted const &) {
        return std::nullopt;
      }
    }
  }

  if (!generates_whole(grp, t.entries()))
    return std::nullopt;
  return t;
}

} // namespace

FindResult find_tuple(GroupHandle const &grp, HurwitzDatum const &datum, SearchBudget const &budget,
                      FindOptions const &opts)
{
  FindResult result;
  auto start = Clock::now();

  SearchPlan plan;
  plan.orders = expanded_orders(datum.branches);
  if (plan.orders.empty() && datum.cogenus == 0) {
    result.failure = "a cogenus 0 datum needs branch entries";
    return result;
  }

  RandomSource class_rng = budget.rng.split(0xC1A55);
  for (Branch const &b : merge_branches(datum.branches)) {
    std::vector<ConjugacyClass> list;
    try {
      list = classes_of_order(grp, b.order, class_rng, budget.class_cap);
    } catch (Error const &e) {
      result.failure = e.what();
      return result;
    }
    if (list.empty()) {
      result.failure = "the group has no element of order " + std::to_string(b.order);
      return result;
    }
    plan.distinct[b.order] = opts.distinct_equal_orders && b.count >= 2 && list.size() > 1;
    plan.classes[b.order] = std::move(list);
  }

  unsigned workers = std::max(1u, budget.workers);
  std::atomic<bool> done{false};
  std::atomic<std::size_t> attempts{0};
  std::mutex lock;
  std::optional<GeneratingTuple> found;
  std::string failure;

  auto work = [&](unsigned w) {
    SearchBudget share = budget;
    share.max_attempts = budget.max_attempts / workers + (w < budget.max_attempts % workers);
    RandomSource rng = budget.rng.split(w + 1);
    ClassCache cache(grp, budget.class_cap);
    BudgetClock clock(share);
    while (!done && clock.tick()) {
      ++attempts;
      std::optional<GeneratingTuple> t;
      try {
        t = attempt(grp, datum, plan, rng, cache, opts, budget.class_cap);
      } catch (Error const &e) {
        std::lock_guard<std::mutex> g(lock);
        failure = e.what();
        done = true;
        return;
      }
      if (t) {
        std::lock_guard<std::mutex> g(lock);
        if (!found)
          found = std::move(t);
        done = true;
        return;
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
    for (std::thread &t : pool)
      t.join();
  }

  result.attempts = attempts;
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (found) {
    Verdict v = test_tuple(grp, datum, *found);
    if (!v.accepted())
      throw Error("find_tuple produced a tuple that test_tuple rejects");
    result.tuple = std::move(found);
  } else {
    result.failure = failure.empty() ? "budget exhausted after " +
                                         std::to_string(result.attempts) + " attempts"
                                     : failure;
  }
  return result;
}

} // namespace surfgen

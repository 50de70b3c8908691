#include <algorithm>

#include "surfgen/group.hpp"

namespace surfgen
{

namespace
{

void compute_orbit(ChainLevel &level, std::size_t degree)
{
  level.orbit.assign(1, level.base_point);
  level.where.assign(degree, -1);
  level.where[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree));
  level.inverse_transversal.assign(1, Permutation(degree));

  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point p = level.orbit[head];
    for (Permutation const &s : level.strong_generators) {
      Point q = s[p];
      if (level.where[q] >= 0)
        continue;
      level.where[q] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(q);
      Permutation u = level.transversal[head] * s;
      level.inverse_transversal.push_back(~u);
      level.transversal.push_back(std::move(u));
    }
  }
}

struct Sifted
{
  Permutation residue;
  std::size_t level; // first level where sifting stopped, or levels.size()
};

Sifted sift(std::vector<ChainLevel> const &levels, Permutation g, std::size_t from)
{
  for (std::size_t l = from; l < levels.size(); ++l) {
    Point image = g[levels[l].base_point];
    std::int32_t idx = levels[l].where[image];
    if (idx < 0)
      return {std::move(g), l};
    g = g * levels[l].inverse_transversal[static_cast<std::size_t>(idx)];
  }
  return {std::move(g), levels.size()};
}

Point first_moved_point(Permutation const &p)
{
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (p[i] != i)
      return static_cast<Point>(i);
  }
  throw Error("identity has no moved point");
}

class ChainBuilder
{
public:
  ChainBuilder(std::vector<Permutation> const &gens, std::size_t degree)
  : degree_(degree)
  {
    for (Permutation const &g : gens) {
      if (!g.is_identity())
        strong_.push_back(g);
    }
    if (strong_.empty())
      return;

    // Greedy base: the smallest point moved by some generator.
    Point b = static_cast<Point>(degree_);
    for (Permutation const &g : strong_)
      b = std::min(b, first_moved_point(g));
    add_level(b);
    levels_[0].strong_generators = strong_;
    compute_orbit(levels_[0], degree_);
  }

  void random_phase(RandomSource rng, std::size_t patience)
  {
    if (levels_.empty())
      return;

    std::vector<Permutation> slots = strong_;
    while (slots.size() < ProductReplacement::slots)
      slots.push_back(strong_[slots.size() % strong_.size()]);
    slots.insert(slots.begin(), Permutation(degree_));

    auto mix = [&] {
      std::size_t n = slots.size() - 1;
      std::size_t s = 1 + rng.below(n);
      std::size_t t = 1 + rng.below(n - 1);
      if (t >= s)
        ++t;
      Permutation other = rng.coin() ? slots[t] : ~slots[t];
      if (rng.coin()) {
        slots[s] = slots[s] * other;
        slots[0] = slots[0] * slots[s];
      } else {
        slots[s] = other * slots[s];
        slots[0] = slots[s] * slots[0];
      }
      return slots[0];
    };

    for (std::size_t i = 0; i < ProductReplacement::burn_in; ++i)
      mix();

    std::size_t quiet = 0;
    while (quiet < patience) {
      Sifted r = sift(levels_, mix(), 0);
      if (r.level == levels_.size() && r.residue.is_identity()) {
        ++quiet;
        continue;
      }
      quiet = 0;
      insert_residue(r, 0);
    }
  }

  void deterministic_phase()
  {
    if (levels_.empty())
      return;

    std::size_t i = levels_.size() - 1;
    for (;;) {
      std::optional<std::size_t> restart;
      ChainLevel const &lv = levels_[i];

      for (std::size_t pi = 0; !restart && pi < lv.orbit.size(); ++pi) {
        for (std::size_t si = 0; !restart && si < lv.strong_generators.size(); ++si) {
          Permutation const &s = lv.strong_generators[si];
          Point image = s[lv.orbit[pi]];
          std::size_t qi = static_cast<std::size_t>(lv.where[image]);
          Permutation h = lv.transversal[pi] * s * lv.inverse_transversal[qi];
          if (h.is_identity())
            continue;

          Sifted r = sift(levels_, std::move(h), i + 1);
          if (r.level == levels_.size() && r.residue.is_identity())
            continue;
          restart = insert_residue(r, i + 1);
        }
      }

      if (restart) {
        i = *restart;
        continue;
      }
      if (i == 0)
        break;
      --i;
    }
  }

  std::vector<ChainLevel> take() { return std::move(levels_); }

private:
  void add_level(Point b)
  {
    ChainLevel lv;
    lv.base_point = b;
    levels_.push_back(std::move(lv));
  }

  // Adds a non-trivial sift residue to levels from..r.level and returns the
  // deepest level touched.
  std::size_t insert_residue(Sifted const &r, std::size_t from)
  {
    std::size_t j = r.level;
    if (j == levels_.size()) {
      add_level(first_moved_point(r.residue));
      levels_.back().strong_generators.clear();
    }
    for (std::size_t l = from; l <= j; ++l) {
      levels_[l].strong_generators.push_back(r.residue);
      compute_orbit(levels_[l], degree_);
    }
    return j;
  }

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<ChainLevel> levels_;
};

} // namespace

std::vector<Point> GroupHandle::base() const
{
  std::vector<Point> b;
  for (ChainLevel const &lv : chain_->levels)
    b.push_back(lv.base_point);
  return b;
}

bool GroupHandle::contains(Permutation const &p) const
{
  Permutation g = p;
  if (g.degree() > degree()) {
    for (std::size_t i = degree(); i < g.degree(); ++i) {
      if (g[i] != i)
        return false;
    }
    std::vector<Point> images(g.images().begin(), g.images().begin() + degree());
    g = Permutation(std::move(images));
  } else if (g.degree() < degree()) {
    g = g.extended(degree());
  }

  Sifted r = sift(chain_->levels, std::move(g), 0);
  return r.level == chain_->levels.size() && r.residue.is_identity();
}

Permutation GroupHandle::uniform_element(RandomSource &rng) const
{
  Permutation g(degree());
  for (auto it = chain_->levels.rbegin(); it != chain_->levels.rend(); ++it)
    g = g * it->transversal[rng.below(it->transversal.size())];
  return g;
}

void GroupHandle::for_each_element(std::function<bool(Permutation const &)> const &visit) const
{
  // g = u_{k-1} ... u_1 u_0 enumerates every element exactly once.
  auto const &levels = chain_->levels;
  std::function<bool(std::size_t, Permutation const &)> rec =
    [&](std::size_t depth, Permutation const &prefix) -> bool {
    if (depth == 0)
      return visit(prefix);
    for (Permutation const &u : levels[depth - 1].transversal) {
      if (!rec(depth - 1, prefix * u))
        return false;
    }
    return true;
  };
  rec(levels.size(), Permutation(degree()));
}

GroupHandle GroupHandle::renamed(std::string name) const
{
  auto chain = std::make_shared<Chain>(*chain_);
  chain->name = std::move(name);
  GroupHandle h;
  h.chain_ = std::move(chain);
  return h;
}

GroupHandle build_group(std::vector<Permutation> const &gens, std::size_t degree,
                        std::string name)
{
  for (Permutation const &g : gens) {
    if (g.degree() != degree)
      throw Error("generator degree " + std::to_string(g.degree()) +
                  " does not match group degree " + std::to_string(degree));
  }

  ChainBuilder builder(gens, degree);
  builder.random_phase(RandomSource(0x5EED, degree), 24);
  builder.deterministic_phase();

  auto chain = std::make_shared<GroupHandle::Chain>();
  chain->degree = degree;
  chain->name = std::move(name);
  chain->generators = gens;
  chain->levels = builder.take();
  for (ChainLevel const &lv : chain->levels)
    chain->order *= lv.orbit.size();

  GroupHandle h;
  h.chain_ = std::move(chain);
  return h;
}

GroupHandle build_group(std::vector<Permutation> const &gens)
{
  if (gens.empty())
    throw Error("cannot infer the degree of a group without generators");
  return build_group(gens, gens.front().degree());
}

bool generates_whole(GroupHandle const &grp, std::vector<Permutation> const &elems)
{
  std::vector<Permutation> gens;
  for (Permutation const &e : elems) {
    if (!grp.contains(e))
      throw Error("generates_whole: element " + print_cycles(e) + " is not in the group");
    gens.push_back(e.extended(grp.degree()));
  }
  return build_group(gens, grp.degree()).order() == grp.order();
}

ProductReplacement::ProductReplacement(GroupHandle const &grp, RandomSource rng)
: rng_(std::move(rng))
{
  std::vector<Permutation> gens;
  for (Permutation const &g : grp.generators()) {
    if (!g.is_identity())
      gens.push_back(g);
  }

  state_.push_back(Permutation(grp.degree()));
  if (gens.empty()) {
    trivial_ = true;
    return;
  }

  while (state_.size() < slots)
    state_.push_back(gens[(state_.size() - 1) % gens.size()]);

  for (std::size_t i = 0; i < burn_in; ++i)
    next();
}

Permutation ProductReplacement::next()
{
  if (trivial_)
    return state_[0];

  std::size_t const n = slots - 1;
  std::size_t s = 1 + rng_.below(n);
  std::size_t t = 1 + rng_.below(n - 1);
  if (t >= s)
    ++t;

  Permutation other = rng_.coin() ? state_[t] : ~state_[t];
  if (rng_.coin()) {
    state_[s] = state_[s] * other;
    state_[0] = state_[0] * state_[s];
  } else {
    state_[s] = other * state_[s];
    state_[0] = state_[s] * state_[0];
  }
  return state_[0];
}

Permutation random_element(GroupHandle const &grp, RandomSource &rng)
{
  ProductReplacement pr(grp, rng.split(rng.next()));
  return pr.next();
}

} // namespace surfgen

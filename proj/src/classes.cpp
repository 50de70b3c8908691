#include <cstring>
#include <deque>
#include <unordered_set>

#include "surfgen/classes.hpp"
#include "surfgen/kernels.hpp"

namespace surfgen
{

namespace
{

struct Fingerprint
{
  std::uint64_t lo, hi;
  bool operator==(Fingerprint const &) const = default;
};

struct FingerprintHash
{
  std::size_t operator()(Fingerprint const &f) const { return static_cast<std::size_t>(f.lo); }
};

// A second hash, independent of hash_images, for the 128-bit fingerprints.
std::uint64_t secondary_hash(Point const *images, std::size_t n)
{
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= images[i];
    h *= 0x100000001B3ull;
  }
  h ^= h >> 33;
  h *= 0xFF51AFD7ED558CCDull;
  h ^= h >> 33;
  return h;
}

Fingerprint fingerprint(Point const *images, std::size_t n)
{
  return {hash_images(images, n), secondary_hash(images, n)};
}

std::vector<Permutation> nontrivial(std::vector<Permutation> const &gens)
{
  std::vector<Permutation> out;
  for (Permutation const &g : gens) {
    if (!g.is_identity())
      out.push_back(g);
  }
  return out;
}

Permutation fit_degree(GroupHandle const &grp, Permutation const &x)
{
  if (!grp.contains(x))
    throw Error("element " + print_cycles(x) + " is not in the group");
  if (x.degree() == grp.degree())
    return x;
  if (x.degree() < grp.degree())
    return x.extended(grp.degree());
  return Permutation::unchecked(x.images().first(grp.degree()));
}

std::string cap_message(std::size_t cap)
{
  return "conjugacy class exceeds the cap of " + std::to_string(cap) +
         " elements; raise the cap or use the non-materialized mode";
}

} // namespace

ClassIndex::ClassIndex(std::size_t degree)
: degree_(degree), elements_(1, 0), witnesses_(1, 0), slots_(16, 0)
{}

std::optional<std::size_t> ClassIndex::find(Point const *images) const
{
  std::uint64_t h = hash_images(images, degree_);
  std::size_t mask = slots_.size() - 1;
  for (std::size_t s = h & mask;; s = (s + 1) & mask) {
    std::uint32_t r = slots_[s];
    if (r == 0)
      return std::nullopt;
    std::size_t row = r - 1;
    if (hashes_[row] == h &&
        std::memcmp(element_data(row), images, degree_ * sizeof(Point)) == 0)
      return row;
  }
}

std::optional<std::size_t> ClassIndex::find(Permutation const &p) const
{
  if (p.degree() == degree_)
    return find(p.data());
  if (p.degree() < degree_)
    return find(p.extended(degree_).data());
  for (std::size_t i = degree_; i < p.degree(); ++i) {
    if (p[i] != i)
      return std::nullopt;
  }
  return find(p.data());
}

std::pair<std::size_t, bool> ClassIndex::insert(Point const *images, Point const *witness)
{
  if (auto row = find(images))
    return {*row, false};

  if ((hashes_.size() + 1) * 2 > slots_.size())
    grow();

  std::size_t row = hashes_.size();
  std::uint64_t h = hash_images(images, degree_);
  hashes_.push_back(h);

  // Keep the single padding point at the end of each arena.
  elements_.pop_back();
  elements_.insert(elements_.end(), images, images + degree_);
  elements_.push_back(0);
  witnesses_.pop_back();
  witnesses_.insert(witnesses_.end(), witness, witness + degree_);
  witnesses_.push_back(0);

  std::size_t mask = slots_.size() - 1;
  std::size_t s = h & mask;
  while (slots_[s] != 0)
    s = (s + 1) & mask;
  slots_[s] = static_cast<std::uint32_t>(row + 1);
  return {row, true};
}

void ClassIndex::grow()
{
  std::vector<std::uint32_t> slots(slots_.size() * 2, 0);
  std::size_t mask = slots.size() - 1;
  for (std::size_t row = 0; row < hashes_.size(); ++row) {
    std::size_t s = hashes_[row] & mask;
    while (slots[s] != 0)
      s = (s + 1) & mask;
    slots[s] = static_cast<std::uint32_t>(row + 1);
  }
  slots_ = std::move(slots);
}

void ClassIndex::shrink()
{
  elements_.shrink_to_fit();
  witnesses_.shrink_to_fit();
  hashes_.shrink_to_fit();
}

bool ConjugacyClass::contains(Permutation const &p) const
{
  if (!index)
    throw Error("class membership needs a materialized class");
  return index->find(p).has_value();
}

std::optional<Permutation> ConjugacyClass::witness_for(Permutation const &p) const
{
  if (!index)
    throw Error("conjugacy witnesses need a materialized class");
  auto row = index->find(p);
  if (!row)
    return std::nullopt;
  return Permutation::unchecked(index->witness(*row));
}

ConjugacyClass class_of(GroupHandle const &grp, Permutation const &x, bool materialize,
                        std::size_t cap)
{
  Permutation rep = fit_degree(grp, x);
  std::size_t const n = grp.degree();
  auto const &K = kernels::active();

  std::vector<Permutation> gens = nontrivial(grp.generators());
  std::vector<Permutation> inverses;
  for (Permutation const &s : gens)
    inverses.push_back(~s);

  ConjugacyClass cls;
  cls.owner = grp;
  cls.representative = rep;
  cls.element_order = rep.order();

  // m^s = s^-1 m s, and the witness of m^s is witness(m) * s.
  std::vector<Point> left(n + 1, 0), conj(n + 1, 0), wit(n + 1, 0);
  std::size_t members = 0;

  if (materialize) {
    auto index = std::make_shared<ClassIndex>(n);
    Permutation id(n);
    index->insert(rep.data(), id.data());

    std::vector<Point> m(n + 1, 0), w(n + 1, 0);
    for (std::size_t head = 0; head < index->size(); ++head) {
      std::memcpy(m.data(), index->element(head).data(), n * sizeof(Point));
      std::memcpy(w.data(), index->witness(head).data(), n * sizeof(Point));
      for (std::size_t k = 0; k < gens.size(); ++k) {
        K.compose(inverses[k].data(), m.data(), left.data(), n);
        K.compose(left.data(), gens[k].data(), conj.data(), n);
        if (index->find(conj.data()))
          continue;
        K.compose(w.data(), gens[k].data(), wit.data(), n);
        index->insert(conj.data(), wit.data());
        if (index->size() > cap)
          throw Error(cap_message(cap));
      }
    }
    index->shrink();
    members = index->size();
    cls.index = std::move(index);
  } else {
    std::unordered_set<Fingerprint, FingerprintHash> seen;
    std::deque<Permutation> frontier;
    seen.insert(fingerprint(rep.data(), n));
    frontier.push_back(rep);
    while (!frontier.empty()) {
      Permutation m = std::move(frontier.front());
      frontier.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        K.compose(inverses[k].data(), m.data(), left.data(), n);
        K.compose(left.data(), gens[k].data(), conj.data(), n);
        if (!seen.insert(fingerprint(conj.data(), n)).second)
          continue;
        if (seen.size() > cap)
          throw Error("conjugacy class exceeds the cap of " + std::to_string(cap) + " elements");
        frontier.push_back(Permutation::unchecked({conj.data(), n}));
      }
    }
    members = seen.size();
  }

  cls.size = members;
  cls.centralizer_order = grp.order() / cls.size;
  if (cls.centralizer_order * cls.size != grp.order())
    throw Error("class size does not divide the group order");
  return cls;
}

std::optional<Permutation> representative_action(GroupHandle const &grp, Permutation const &a,
                                                 Permutation const &b, std::size_t cap)
{
  if (a.cycle_type() != b.cycle_type() || !grp.contains(b))
    return std::nullopt;
  ConjugacyClass cls = class_of(grp, a, true, cap);
  std::optional<Permutation> g = cls.witness_for(b);
  if (g && !(conjugate(a, *g) == b))
    throw Error("representative_action produced a wrong witness");
  return g;
}

Permutation element_of_order(GroupHandle const &grp, std::uint64_t m, RandomSource &rng,
                             std::size_t budget)
{
  if (m == 1)
    return Permutation(grp.degree());
  for (std::size_t draw = 0; draw < budget; ++draw) {
    Permutation y = grp.uniform_element(rng);
    std::uint64_t o = y.order();
    if (o % m == 0)
      return y.pow(static_cast<long long>(o / m));
  }
  throw Error("no element of order " + std::to_string(m) + " found in " +
              std::to_string(budget) + " draws");
}

ClassCache::ClassCache(GroupHandle grp, std::size_t cap) : group_(std::move(grp)), cap_(cap) {}

std::optional<std::size_t> ClassCache::find(Permutation const &x) const
{
  std::uint64_t o = x.order();
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].element_order == o && classes_[i].index->find(x))
      return i;
  }
  return std::nullopt;
}

std::size_t ClassCache::locate_index(Permutation const &x)
{
  if (auto i = find(x))
    return *i;
  classes_.push_back(class_of(group_, x, true, cap_));
  return classes_.size() - 1;
}

ConjugacyClass const &ClassCache::locate(Permutation const &x)
{
  return classes_[locate_index(x)];
}

std::optional<Permutation> ClassCache::representative_action(Permutation const &a,
                                                             Permutation const &b)
{
  if (a.order() != b.order() || !group_.contains(b))
    return std::nullopt;
  ConjugacyClass const &cls = locate(a);
  auto wb = cls.witness_for(b);
  if (!wb)
    return std::nullopt;
  // rep^wa = a and rep^wb = b, so a^(wa^-1 wb) = b.
  Permutation g = ~*cls.witness_for(a) * *wb;
  if (!(surfgen::conjugate(a, g) == b))
    throw Error("representative_action produced a wrong witness");
  return g;
}

bool ClassCache::conjugate(Permutation const &a, Permutation const &b)
{
  if (a.order() != b.order())
    return false;
  return locate(a).contains(b);
}

std::vector<ConjugacyClass> classes_of_order(GroupHandle const &grp, std::uint64_t m,
                                             RandomSource &rng, std::size_t cap,
                                             std::size_t patience)
{
  ClassCache cache(grp, cap);

  if (grp.order() <= enumeration_limit) {
    grp.for_each_element([&](Permutation const &p) {
      if (p.order() == m)
        cache.locate_index(p);
      return true;
    });
    return cache.classes();
  }

  std::size_t quiet = 0;
  while (quiet < patience) {
    Permutation y = grp.uniform_element(rng);
    std::uint64_t o = y.order();
    ++quiet;
    if (o % m != 0)
      continue;
    std::size_t before = cache.classes().size();
    cache.locate_index(y.pow(static_cast<long long>(o / m)));
    if (cache.classes().size() != before)
      quiet = 0;
  }
  return cache.classes();
}

std::vector<ConjugacyClass> all_classes(GroupHandle const &grp, std::size_t cap)
{
  if (grp.order() > enumeration_limit)
    throw Error("all_classes only enumerates groups of order at most " +
                std::to_string(enumeration_limit));
  ClassCache cache(grp, cap);
  grp.for_each_element([&](Permutation const &p) {
    cache.locate_index(p);
    return true;
  });
  return cache.classes();
}

} // namespace surfgen

#include <cstdlib>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "surfgen/catalog.hpp"
#include "surfgen/groupfile.hpp"
#include "surfgen/structconst.hpp"

namespace surfgen
{

namespace
{

using FieldPtr = std::shared_ptr<GaloisField const>;

FieldPtr field_of_order(std::uint64_t field_size)
{
  if (!is_prime_power(field_size) || field_size > GaloisField::max_size)
    throw Error("no field of order " + std::to_string(field_size));
  std::uint32_t p = 2;
  while (field_size % p != 0)
    ++p;
  std::uint32_t f = 0;
  for (std::uint64_t r = field_size; r > 1; r /= p)
    ++f;
  return std::make_shared<GaloisField const>(p, f);
}

Matrix make_matrix(FieldPtr const &F, std::size_t dim, std::vector<FieldElement> entries)
{
  return Matrix(F, dim, std::move(entries));
}

GroupHandle from_matrices(std::vector<Matrix> const &gens, FieldVector seed, std::string name)
{
  ProjectiveAction act = matrix_to_permutation_group(gens, {std::move(seed)});
  return build_group(act.generators, act.points.size(), std::move(name));
}

void check_order(GroupHandle const &grp, BigInt const &expected)
{
  if (grp.order() != expected) {
    std::ostringstream msg;
    msg << "constructed " << grp.name() << " has order " << grp.order() << ", expected " << expected;
    throw Error(msg.str());
  }
}

GroupHandle construct_alt7()
{
  GroupHandle grp = build_group({parse_cycles("(1,2,3)", 7), parse_cycles("(1,2,3,4,5,6,7)", 7)},
                              7, "Alt7");
  check_order(grp, 2520);
  return grp;
}

GroupHandle construct_psl3_2()
{
  auto F = field_of_order(2);
  FieldElement o = F->zero(), l = F->one();
  Matrix elementary = make_matrix(F, 3, {l, l, o, o, l, o, o, o, l});
  Matrix cycle = make_matrix(F, 3, {o, l, o, o, o, l, l, o, o});
  GroupHandle grp = from_matrices({elementary, cycle}, {l, o, o}, "PSL3(2)");
  check_order(grp, 168);
  return grp;
}

GroupHandle load_data_group(std::string const &relative, BigInt const &expected)
{
  GroupHandle grp = load_group(data_dir() / relative);
  check_order(grp, expected);
  return grp;
}

} // namespace

std::filesystem::path data_dir()
{
  if (char const *env = std::getenv("SURFGEN_DATA"); env && *env)
    return env;
  return SURFGEN_DATA_DIR;
}

GroupHandle construct_psl2(std::uint64_t field_size)
{
  if (field_size < 4 || field_size > 25)
    throw Error("PSL2(q) is supported for 4 <= q <= 25, not q = " + std::to_string(field_size));
  auto F = field_of_order(field_size);
  FieldElement o = F->zero(), l = F->one(), w = F->primitive();
  std::vector<Matrix> gens = {make_matrix(F, 2, {l, l, o, l}),
                              make_matrix(F, 2, {o, l, F->neg(l), o})};
  if (F->degree() > 1)
    gens.push_back(make_matrix(F, 2, {w, o, o, F->inv(w)}));
  GroupHandle grp = from_matrices(gens, {l, o}, "PSL2(" + std::to_string(field_size) + ")");
  check_order(grp, expected_order("PSL2", field_size));
  return grp;
}

GroupHandle construct_psp4(std::uint64_t field_size)
{
  if (field_size < 2 || field_size > 5)
    throw Error("Sp4(q) is supported for q <= 5, not q = " + std::to_string(field_size));
  auto F = field_of_order(field_size);
  FieldElement o = F->zero(), l = F->one();
  std::size_t const dim = 4;

  // Form B(x, v) = x J v^T with J = [[0, I], [-I, 0]]; the transvection along
  // v with parameter c maps x to x + c B(x, v) v.
  auto form_column = [&](FieldVector const &v) {
    // J v^T as a column: (v3, v4, -v1, -v2).
    return FieldVector{v[2], v[3], F->neg(v[0]), F->neg(v[1])};
  };
  auto transvection = [&](FieldVector const &v, FieldElement c) {
    FieldVector col = form_column(v);
    std::vector<FieldElement> m(dim * dim, o);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t s = 0; s < dim; ++s) {
        FieldElement entry = F->mul(c, F->mul(col[r], v[s]));
        m[r * dim + s] = F->add(r == s ? l : o, entry);
      }
    }
    return make_matrix(F, dim, std::move(m));
  };

  std::vector<FieldVector> directions = {{l, o, o, o}, {o, l, o, o}, {o, o, l, o},
                                         {o, o, o, l}, {l, l, o, o}, {o, o, l, l}};
  std::vector<FieldElement> scalars = {l};
  if (F->degree() > 1)
    scalars.push_back(F->primitive());

  std::vector<Matrix> gens;
  for (FieldVector const &v : directions) {
    for (FieldElement c : scalars)
      gens.push_back(transvection(v, c));
  }
  std::string name = (field_size % 2 == 0 ? "Sp4(" : "PSp4(") + std::to_string(field_size) + ")";
  GroupHandle grp = from_matrices(gens, {l, o, o, o}, name);
  check_order(grp, expected_order("PSp4", field_size));
  return grp;
}

GroupHandle construct_suzuki(std::uint64_t field_size)
{
  if (field_size != 8)
    throw Error("Sz(q) is realized for q = 8 only");
  auto F = field_of_order(8);
  FieldElement o = F->zero(), l = F->one();
  // theta squares to the Frobenius: x -> x^4 in GF(8).
  auto th = [&](FieldElement x) { return F->pow(x, 4); };
  auto add = [&](std::initializer_list<FieldElement> xs) {
    FieldElement s = o;
    for (FieldElement x : xs)
      s = F->add(s, x);
    return s;
  };
  auto T = [&](FieldElement a, FieldElement b) {
    FieldElement r30 = add({F->mul(F->mul(a, a), th(a)), F->mul(a, b), th(b)});
    FieldElement r31 = add({F->mul(a, th(a)), b});
    return make_matrix(F, 4, {l, o, o, o, a, l, o, o, b, th(a), l, o, r30, r31, a, l});
  };
  auto D = [&](FieldElement k) {
    FieldElement k2 = F->mul(k, k), k3 = F->mul(k2, k);
    return make_matrix(F, 4, {k3, o, o, o, o, k2, o, o, o, o, F->inv(k2), o, o, o, o, F->inv(k3)});
  };
  Matrix W = make_matrix(F, 4, {o, o, o, l, o, o, l, o, o, l, o, o, l, o, o, o});
  FieldElement x = F->element(2);
  GroupHandle grp = from_matrices({T(l, o), T(o, l), T(x, o), D(x), W}, {l, o, o, o}, "Sz(8)");
  check_order(grp, expected_order("Sz", 8));
  return grp;
}

BigInt expected_order(std::string const &group, std::uint64_t field_size)
{
  if (group == "Sp4")
    return BigInt(field_size) * field_size * field_size * field_size * (BigInt(field_size) * field_size - 1) * (BigInt(field_size) * field_size * field_size * field_size - 1);
  if (group == "PSL3")
    return 168;
  for (FamilyEntry const &e : family_table()) {
    if (e.group == group)
      return e.order(field_size);
  }
  throw Error("unknown group " + group);
}

GroupHandle construct_group(std::string const &group, std::uint64_t field_size)
{
  static std::mutex lock;
  static std::map<std::pair<std::string, std::uint64_t>, GroupHandle> cache;

  bool parametrized = group == "PSL2" || group == "PSp4" || group == "Sp4" || group == "Sz";
  auto key = std::make_pair(group, parametrized ? field_size : 0);
  {
    std::lock_guard<std::mutex> g(lock);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }

  GroupHandle grp;
  if (group == "Alt7") {
    grp = construct_alt7();
  } else if (group == "PSL2" && field_size == 7) {
    grp = load_data_group("groups/psl2_7_fixture.grp", 168);
  } else if (group == "PSL2" && field_size == 8) {
    grp = load_data_group("groups/psl2_8_fixture.grp", 504);
  } else if (group == "PSL2") {
    grp = construct_psl2(field_size);
  } else if (group == "PSL3" && (field_size == 2 || field_size == 0)) {
    grp = construct_psl3_2();
  } else if (group == "PSU4" && (field_size == 3 || field_size == 0)) {
    grp = load_data_group("groups/psu4_3.grp", 3265920);
  } else if (group == "PSp4" || (group == "Sp4" && field_size % 2 == 0)) {
    grp = construct_psp4(field_size);
  } else if (group == "Sz") {
    grp = construct_suzuki(field_size);
  } else if (group == "M11") {
    grp = load_data_group("groups/m11.grp", 7920);
  } else if (group == "M22") {
    grp = load_data_group("groups/m22.grp", 443520);
  } else if (group == "J1") {
    grp = load_data_group("groups/j1.grp", 175560);
  } else {
    throw Error("no realization of " + group + (field_size ? "(" + std::to_string(field_size) + ")" : ""));
  }

  std::lock_guard<std::mutex> g(lock);
  return cache.emplace(key, grp).first->second;
}

GroupHandle resolve_group(std::string const &name_or_path)
{
  static std::regex const pattern(R"(^\s*([A-Za-z0-9]+)\s*(?:\(\s*(\d+)\s*\))?\s*$)");
  std::smatch m;
  if (!std::filesystem::exists(name_or_path) && std::regex_match(name_or_path, m, pattern)) {
    std::string name = m[1];
    std::uint64_t field_size = m[2].matched ? std::stoull(m[2]) : 0;
    if (name == "A7")
      name = "Alt7";
    return construct_group(name, field_size);
  }
  return load_group(name_or_path);
}

bool desk_scale(TableLine const &line)
{
  FamilyEntry const &e = *line.entry;
  if (e.realization == "none")
    return false;
  if (e.group == "Sz")
    return line.field_size == 8;
  if (e.group == "PSp4")
    return line.field_size <= 4;
  if (e.group == "PSL2")
    return line.field_size <= 25;
  return true;
}

} // namespace surfgen

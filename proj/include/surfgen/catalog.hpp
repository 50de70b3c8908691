#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "surfgen/genvec.hpp"
#include "surfgen/hurwitz.hpp"

namespace surfgen
{

/// An order formula in q, kept with its text form.
struct OrderFormula
{
  std::string text;
  std::function<BigInt(std::uint64_t field_size)> eval;
};

/// One row of the table of groups acting with fixity 4: the stabilizer
/// orders of the fixity-4 action and the optional fixity-3 and fixity-2
/// stabilizer orders of further orbits.
struct FamilyEntry
{
  std::string group;       // token used in line files: Alt7, PSL2, Sz, ...
  std::string constraint;  // q condition as text, "-" when q is fixed
  std::vector<OrderFormula> fix4;
  std::optional<OrderFormula> fix3;
  std::vector<OrderFormula> fix2;
  std::vector<std::string> labels;       // line ids in enumeration order
  std::vector<std::uint64_t> catalog_q;  // instantiated values; 0 means none
  std::function<BigInt(std::uint64_t field_size)> order;
  std::string realization;               // constructor, data file, or none
  int rank = 0;                          // position of the first line in the table
  bool series = false;                   // line ids carry q, as in 5a@13
};

/// The family table in its canonical order.
std::vector<FamilyEntry> const &family_table();

/// One instantiated line of the branching-data table.
struct TableLine
{
  std::string id;
  FamilyEntry const *entry = nullptr;
  std::uint64_t field_size = 0;            // 0 for groups without a parameter
  std::vector<Branch> branches;   // sorted by (m, n)
  std::uint64_t cogenus_floor = 0;

  BigInt group_order() const { return entry->order(field_size); }

  /// "3f" for fixed groups, "5a@13" for instances of a series.
  std::string display_id() const;

  /// `line 3f PSL2 8 | 2:1 7:1 9:1 | g0min 0`
  std::string render() const;
};

/// All branch multisets for one family at q. Each fixity-4 order appears at
/// most once and at least one does, the fixity-3 order at most once, and
/// each fixity-2 order at most twice. Line ids are assigned in the order of
/// (fixity-3 multiplicity, set of fixity-2 orders used, set of fixity-4
/// orders used, fixity-2 multiplicities read from the last order back).
std::vector<TableLine> enumerate_lines(FamilyEntry const &entry, std::uint64_t field_size);

/// Every family at each of its catalog q values, in table order.
std::vector<TableLine> catalog_lines();

std::string render_line_table(std::vector<TableLine> const &lines);
std::string render_family_table();

HurwitzDatum minimal_cogenus_datum(TableLine const &line);

std::filesystem::path data_dir();

/// Group realizations: Alt7, PSL2 (q <= 25 on q+1 points; q = 7, 8 use the
/// labelling of the bundled tuple fixtures), PSL3 2, PSU4 3, PSp4 (3, 4, 5), Sp4 4,
/// Sz 8, M11, M22, J1. q is ignored for groups without a parameter.
GroupHandle construct_group(std::string const &group, std::uint64_t field_size);

/// PSL2(q) from SL2(q) acting on the q+1 points of the projective line.
GroupHandle construct_psl2(std::uint64_t field_size);

/// Sp4(q) acting on the projective points of its natural module.
GroupHandle construct_psp4(std::uint64_t field_size);

/// Sz(q) for q = 8 on the 65-point ovoid.
GroupHandle construct_suzuki(std::uint64_t field_size);

/// "PSL2(13)", "Sz(8)", "M11", or a path to a group file.
GroupHandle resolve_group(std::string const &name_or_path);

/// Certified group order expected for a realization.
BigInt expected_order(std::string const &group, std::uint64_t field_size);

/// True when the line's group is realized and small enough to work in.
bool desk_scale(TableLine const &line);

struct ReproduceOptions
{
  std::uint64_t seed = 0;
  double budget_seconds = 60.0;
  std::size_t max_attempts = 100000;
  unsigned jobs = 1;
  std::size_t class_cap = default_class_cap;
};

struct MethodReport
{
  std::string method; // fixture, recipe, search
  bool accepted = false;
  std::string note;
  std::optional<GeneratingTuple> tuple;
};

struct LineReport
{
  TableLine line;
  HurwitzDatum datum;
  std::string status; // ACCEPTED, REJECTED, OUT_OF_DESK_SCALE
  std::vector<MethodReport> methods;
  double seconds = 0;

  bool green() const { return status != "REJECTED"; }
};

/// Reproduces one line: fixtures run through test_tuple, recipes use explicit
/// constructions, other desk-scale lines use find_tuple.
LineReport reproduce_line(TableLine const &line, ReproduceOptions const &opts);

/// "all", a line id such as "5a" (every instance), or "5a@13".
std::vector<LineReport> reproduce(std::string const &which, ReproduceOptions const &opts);

struct InvolutionClassInfo
{
  BigInt size;
  BigInt centralizer_order;
};

struct CentralizerReport
{
  std::uint64_t field_size = 4;
  BigInt group_order;
  std::vector<InvolutionClassInfo> classes;
  bool found = false; // some involution has centralizer order q^4
};

CentralizerReport sp4_centralizer_check(std::uint64_t field_size = 4);

} // namespace surfgen

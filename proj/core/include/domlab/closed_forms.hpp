#ifndef DOMLAB_CLOSED_FORMS_HPP
#define DOMLAB_CLOSED_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "domlab/families.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Closed-form value plus a constructive witness. The witness carries its
/// host graph, validated against is_tmds (or is_tds for line-graph results)
/// at construction.
struct FormulaResult {
  int value;
  MixedSet witness;
  std::string construction_tag;
  std::optional<FamilySpec> family;
};

/// Closed-form total mixed domination number of a resolved family.
int gamma_tm_formula(const FamilySpec& spec);
/// Human-readable residue case behind gamma_tm_formula.
std::string gamma_tm_case(const FamilySpec& spec);

/// Constructive minimum TMDS for a resolved family (0-indexed).
FormulaResult gamma_tm_witness(const FamilySpec& spec);

/// gamma_t of L(K_n) (n >= 4) or L(W_n) (n >= 3), with a TDS witness on the
/// constructed line graph.
FormulaResult gamma_t_line_formula(Family family, int n);

/// Edge-chain TMDS along a Hamiltonian path; size hits the 2n/3-type bound.
FormulaResult hamiltonian_tmds(const Graph& g, const std::vector<int>& path);

/// Distance-mod-3 TMDS construction for trees of order >= 3; validated, a
/// failing construction surfaces as ConstructionFailed.
FormulaResult tree_tmds(const Graph& t);

/// Checks the printed relation between the cycle and path closed forms at n.
bool path_cycle_relation(int n);

}  // namespace domlab

#endif

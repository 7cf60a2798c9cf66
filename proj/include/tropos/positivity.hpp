#pragma once

#include <optional>
#include <vector>

#include "tropos/matrix.hpp"
#include "tropos/trop_core.hpp"

namespace tropos {

struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  MinorClass cls;
};

// Class memberships of one tropical matrix. dd and ndd refer to the leading
// min(n,m) square block (ndd is the strict variant).
struct PositivityReport {
  bool tp_trop = false;
  bool tn_trop = false;
  bool tp2 = false;
  bool tn2 = false;
  bool dd = false;
  bool ndd = false;
  // Lexicographically first failing minor for the requested class, ordered
  // by size, then rows, then columns. Empty iff that class holds.
  std::optional<MinorWitness> witness;
};

// Requested class is TP^trop. Finite matrices are decided by the strict
// Monge inequality on consecutive 2x2 blocks.
PositivityReport is_tp_trop(const TropMatrix& a, std::size_t cap = kDefaultEnumerationCap);

// Requested class is TN^trop. Finite matrices: consecutive 2x2 blocks.
// With −∞ entries every 2x2 minor is checked, since consecutive blocks no
// longer suffice.
PositivityReport is_tn_trop(const TropMatrix& a, std::size_t cap = kDefaultEnumerationCap);

// Classifies only the n·m initial minors (the largest solid minor with
// bottom-right corner (i,j), for every i,j). Throws InfiniteEntry on −∞.
bool is_tp_trop_via_initial(const TropMatrix& a, std::size_t cap = kDefaultEnumerationCap);

// M_{ij} = per(A_{{i,i+1},{j,j+1}}), an (n-1)x(m-1) grid.
TropMatrix solid_minor_permanents(const TropMatrix& a);

// The unique TN^trop(R) matrix with the given first row, first column, and
// consecutive 2x2 permanents. Throws InfiniteEntry on −∞ input and
// InconsistentData if the data admit no such matrix.
TropMatrix reconstruct_from_solid_minors(const std::vector<TropScalar>& first_row,
                                         const std::vector<TropScalar>& first_col, const TropMatrix& minors);

// Every minor of every size classified from the definitions. The witness
// refers to TP^trop when strict is set, TN^trop otherwise. Throws CapExceeded
// if min(n,m) > cap.
PositivityReport bruteforce_class_oracle(const TropMatrix& a, bool strict = false,
                                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace tropos

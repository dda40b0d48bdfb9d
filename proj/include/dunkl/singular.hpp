#pragma once

#include "dunkl/dunkl.hpp"
#include "dunkl/multipoly.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace dunkl {

struct VerificationRecord {
  std::string identity;
  nlohmann::json params;
  bool passed = false;
  /// First failing coefficient (or other evidence); empty on success.
  std::string witness;

  nlohmann::json to_json() const;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;

  void add(std::string identity, nlohmann::json params, bool passed, std::string witness = {});
  void append(const VerificationReport& other);
  bool all_passed() const;
  /// nullptr when every record passed.
  const VerificationRecord* first_failure() const;
  nlohmann::json to_json() const;
};

/// Values in Q(k0, eps) obtained by k1 := -m + eps - k0. Stored as a ParamRat
/// whose second variable is eps.
using EpsilonRat = ParamRat;

EpsilonRat epsilon_substitute(const ParamRat& x, int m);
MultiPoly epsilon_substitute(const MultiPoly& f, int m);
/// Multiplicity of eps in the reduced denominator.
int eps_order(const EpsilonRat& x);
int eps_order(const MultiPoly& f);
/// Value at eps = 0, a function of k0 alone. Throws PoleError if eps_order > 0.
ParamRat eps_at_zero(const EpsilonRat& x);
MultiPoly eps_at_zero(const MultiPoly& f);

/// Direct substitution k1 := -m - k0. Throws PoleError where a denominator
/// vanishes identically.
ParamRat substitute_singular(const ParamRat& x, int m);
MultiPoly substitute_singular(const MultiPoly& f, int m);

/// Collapse of f_n, f_n^0, f_n^1 onto lower-degree members at k0 + k1 = -m,
/// for every identity whose index range contains n.
VerificationReport check_basis_collapse(int m, int n);
/// Ratios and vanishing of the norm constants at k0 + k1 = -m.
VerificationReport check_lambda_ratios(int m, int n);
/// P_N = 0 for N > 2sm, and P_N + (z zbar w wbar)^{N-sm} P_{2sm-N} = 0 otherwise.
VerificationReport check_pzero(const GroupParam& g, int m, int N);

/// Index pairs (j0, j1), j1 <= j0, of the kernel series whose sum is regular at
/// k0 + k1 = -m; j0 == j1 marks the self-paired term P_{sm}.
std::vector<std::pair<int, int>> k_pairing(const GroupParam& g, int n, int m);
/// Groups the kernel series as above and checks every group is eps-finite,
/// that the assembled K_n at eps = 0 matches direct substitution, and that the
/// members of proper pairs are individually singular. Throws UnpairedPoleError
/// if a group keeps a pole.
VerificationReport check_k_removable(const GroupParam& g, int m, int n);

struct VPairing {
  bool shifted = false;
  /// (k, k'): both from the single sum when !shifted; k from the first sum and
  /// k' from the second otherwise.
  std::vector<std::pair<int, int>> pairs;
};

/// Requires a >= b >= 0.
VPairing v_pairing(const GroupParam& g, int a, int b, int m);
/// Same checks as check_k_removable for the expansion of V(z^a zbar^b).
VerificationReport check_v_removable(const GroupParam& g, int a, int b, int m);

}  // namespace dunkl

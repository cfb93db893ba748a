#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusrips/complex.hpp"
#include "torusrips/homology.hpp"
#include "torusrips/metric.hpp"

namespace torusrips {

/// Result of testing whether every vertex misses exactly one other vertex.
struct AntipodeReport {
  bool is_antipode = false;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  // Number of antipodal pairs; the clique complex is then the boundary of
  // the cross-polytope of this dimension.
  std::optional<int> cross_polytope_dim;
};

AntipodeReport antipode_check(const Graph& graph);

enum class ConnectivityMethod { counting, exhaustive };

const char* to_string(ConnectivityMethod method);

/// Largest k for which any 2k+2 closed balls of radius r share a point.
struct ConnectivityCertificate {
  int scale = 0;
  ConnectivityMethod method = ConnectivityMethod::counting;
  // -1 when not even k = 0 is established.
  int certified_k = -1;
  std::size_t point_count = 0;
  std::size_t min_ball_size = 0;
};

/// counting: a common point exists when |X| - (2k+2)(|X| - min ball) >= 1.
/// exhaustive: every set of 2k+2 distinct centers is intersected directly;
/// needs 2k+2 <= 4 and at most limits.exhaustive_vertex_budget points.
ConnectivityCertificate connectivity_bound(const FiniteMetricSpace& space, int r,
                                           int max_k, ConnectivityMethod method,
                                           const Limits& limits = {});

enum class ClaimKind { torus, wedge_S2, wedge_S2_S3, sphere, wedge_Sd, contractible, unknown };

struct Claim {
  ClaimKind kind = ClaimKind::unknown;
  // sphere: dimension; wedge_Sd: sphere dimension.
  int dim = 0;
  // Wedge summand counts: wedge_S2/wedge_Sd use counts[0]; wedge_S2_S3 uses
  // both entries.
  std::vector<std::uint64_t> counts;

  std::string label() const;
  // Betti numbers of the claimed homotopy type, dimension 0 upward.
  std::vector<std::uint64_t> betti() const;
};

enum class Verdict { certified, consistent, inconsistent };

const char* to_string(Verdict verdict);

struct Fingerprint {
  Claim claim;
  Verdict verdict = Verdict::consistent;
  // How the claim was chosen: "regime", "cross-polytope", "profile".
  std::string basis;
  // Which argument licensed a certified verdict, empty otherwise.
  std::string certificate;
  std::vector<std::string> notes;
  std::optional<BettiProfile> evidence;

  bool consistent() const { return verdict != Verdict::inconsistent; }
};

/// Claim predicted for VR(T_{n,n}, k) without looking at homology, if any.
std::optional<Claim> torus_regime_claim(int n, int k);

/// Reads a claim off a profile whose reduced homology sits in one or two
/// dimensions; unknown otherwise.
Claim claim_from_profile(const BettiProfile& profile);

/// Compares a profile with the expected homotopy type of VR(T_{n,n}, k).
///
/// The verdict is certified only through a cross-polytope antipode
/// structure, or through free integral homology concentrated in a single
/// dimension >= 2 together with simple connectivity (Hurewicz + Whitehead).
/// Otherwise matching Betti numbers give "consistent". A profile is required
/// unless the antipode report settles the type; truncated profiles are
/// refused.
Fingerprint fingerprint(const std::optional<BettiProfile>& profile,
                        const std::optional<AntipodeReport>& antipode,
                        const std::optional<ConnectivityCertificate>& connectivity,
                        int n, int k);

/// Same verdict rules against an arbitrary expected claim; without one the
/// claim is read off the profile.
Fingerprint fingerprint_against(const std::optional<BettiProfile>& profile,
                                const std::optional<AntipodeReport>& antipode,
                                const std::optional<ConnectivityCertificate>& connectivity,
                                const std::optional<Claim>& expected);

}  // namespace torusrips

#include "torusrips/topology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace torusrips {

AntipodeReport antipode_check(const Graph& graph) {
  AntipodeReport report;
  const std::size_t n = graph.vertex_count();
  if (n < 2 || n % 2 != 0) return report;
  std::vector<Vertex> partner(n);
  for (Vertex v = 0; v < n; ++v) {
    if (graph.degree(v) != n - 2) return report;
    Vertex missing = v;
    for (Vertex u = 0; u < n; ++u)
      if (u != v && !graph.adjacent(u, v)) {
        missing = u;
        break;
      }
    partner[v] = missing;
  }
  for (Vertex v = 0; v < n; ++v)
    if (partner[partner[v]] != v) return report;
  for (Vertex v = 0; v < n; ++v)
    if (v < partner[v]) report.pairs.emplace_back(v, partner[v]);
  report.is_antipode = true;
  report.cross_polytope_dim = static_cast<int>(n / 2);
  return report;
}

const char* to_string(ConnectivityMethod method) {
  return method == ConnectivityMethod::counting ? "counting" : "exhaustive";
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool meets(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}

Bits meet(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

bool any_set(const Bits& a) {
  return std::any_of(a.begin(), a.end(), [](std::uint64_t w) { return w != 0; });
}

// Do all `count` distinct balls, or every ball if fewer exist, share a point?
bool all_subsets_meet(const std::vector<Bits>& balls, int count, const Limits& limits) {
  const std::size_t n = balls.size();
  if (n <= static_cast<std::size_t>(count)) {
    Bits common = balls.front();
    for (const auto& b : balls) common = meet(common, b);
    return any_set(common);
  }
  if (count == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!meets(balls[i], balls[j])) return false;
    return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    limits.check_deadline();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Bits ij = meet(balls[i], balls[j]);
      for (std::size_t l = j + 1; l < n; ++l) {
        const Bits ijl = meet(ij, balls[l]);
        for (std::size_t m = l + 1; m < n; ++m)
          if (!meets(ijl, balls[m])) return false;
      }
    }
  }
  return true;
}

}  // namespace

ConnectivityCertificate connectivity_bound(const FiniteMetricSpace& space, int r,
                                           int max_k, ConnectivityMethod method,
                                           const Limits& limits) {
  require(r >= 0, "radius must be nonnegative");
  require(max_k >= 0, "max_k must be nonnegative");
  ConnectivityCertificate cert;
  cert.scale = r;
  cert.method = method;
  cert.point_count = space.size();

  std::vector<Bits> balls;
  const std::size_t words = (space.size() + 63) / 64;
  cert.min_ball_size = space.size();
  for (Vertex c = 0; c < space.size(); ++c) {
    const auto ball = closed_ball(space, c, r);
    cert.min_ball_size = std::min(cert.min_ball_size, ball.size());
    if (method == ConnectivityMethod::exhaustive) {
      Bits bits(words, 0);
      for (Vertex v : ball) bits[v / 64] |= std::uint64_t{1} << (v % 64);
      balls.push_back(std::move(bits));
    }
  }

  if (method == ConnectivityMethod::counting) {
    const auto total = static_cast<std::int64_t>(cert.point_count);
    const auto outside = total - static_cast<std::int64_t>(cert.min_ball_size);
    for (int k = 0; k <= max_k; ++k) {
      if (total - (2 * k + 2) * outside < 1) break;
      cert.certified_k = k;
    }
    return cert;
  }

  if (2 * max_k + 2 > 4)
    fail(ErrorKind::budget, "exhaustive ball intersection handles at most 4 balls (max_k <= 1)");
  if (space.size() > limits.exhaustive_vertex_budget)
    fail(ErrorKind::budget, "exhaustive ball intersection on " +
                                std::to_string(space.size()) + " points exceeds the budget of " +
                                std::to_string(limits.exhaustive_vertex_budget));
  for (int k = 0; k <= max_k; ++k) {
    if (!all_subsets_meet(balls, 2 * k + 2, limits)) break;
    cert.certified_k = k;
  }
  return cert;
}

std::string Claim::label() const {
  std::ostringstream out;
  switch (kind) {
    case ClaimKind::torus: out << "torus"; break;
    case ClaimKind::wedge_S2: out << "wedge_S2(" << counts.at(0) << ")"; break;
    case ClaimKind::wedge_S2_S3:
      out << "wedge_S2_S3(" << counts.at(0) << "," << counts.at(1) << ")";
      break;
    case ClaimKind::sphere: out << "sphere(" << dim << ")"; break;
    case ClaimKind::wedge_Sd: out << "wedge_S" << dim << "(" << counts.at(0) << ")"; break;
    case ClaimKind::contractible: out << "contractible"; break;
    case ClaimKind::unknown: out << "unknown"; break;
  }
  return out.str();
}

std::vector<std::uint64_t> Claim::betti() const {
  std::vector<std::uint64_t> b{1};
  auto add = [&b](int d, std::uint64_t c) {
    if (b.size() <= static_cast<std::size_t>(d)) b.resize(static_cast<std::size_t>(d) + 1, 0);
    b[static_cast<std::size_t>(d)] += c;
  };
  switch (kind) {
    case ClaimKind::torus: b = {1, 2, 1}; break;
    case ClaimKind::wedge_S2: add(2, counts.at(0)); break;
    case ClaimKind::wedge_S2_S3:
      add(2, counts.at(0));
      add(3, counts.at(1));
      break;
    case ClaimKind::sphere: add(dim, 1); break;
    case ClaimKind::wedge_Sd: add(dim, counts.at(0)); break;
    case ClaimKind::contractible:
    case ClaimKind::unknown: break;
  }
  return b;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::certified: return "certified";
    case Verdict::consistent: return "consistent";
    case Verdict::inconsistent: return "inconsistent";
  }
  return "?";
}

std::optional<Claim> torus_regime_claim(int n, int k) {
  require(n >= 3 && k >= 0, "torus regime needs n >= 3 and k >= 0");
  const auto nn = static_cast<std::uint64_t>(n);
  const auto kk = static_cast<std::uint64_t>(k);
  if (k >= 2 * (n / 2)) return Claim{ClaimKind::contractible, 0, {}};
  if (k == 0) return Claim{ClaimKind::wedge_Sd, 0, {nn * nn - 1}};
  // For n >= 4 the scale-1 complex is the triangle-free grid graph itself.
  if (k == 1 && n >= 4) return Claim{ClaimKind::wedge_Sd, 1, {nn * nn + 1}};
  if (k >= 2 && n > 3 * k) return Claim{ClaimKind::torus, 0, {}};
  if (k >= 2 && n == 3 * k) return Claim{ClaimKind::wedge_S2, 2, {6 * kk * kk - 1}};
  if (k >= 3 && n == 3 * k - 1)
    return Claim{ClaimKind::wedge_S2_S3, 0, {6 * kk - 3, 6 * kk - 2}};
  return std::nullopt;
}

Claim claim_from_profile(const BettiProfile& profile) {
  if (profile.betti.empty() || profile.betti[0] == 0) return {};
  std::vector<std::pair<int, std::uint64_t>> reduced;
  for (std::size_t d = 0; d < profile.betti.size(); ++d) {
    const auto b = profile.betti[d] - (d == 0 ? 1 : 0);
    if (b != 0) reduced.emplace_back(static_cast<int>(d), b);
  }
  if (reduced.empty()) return {ClaimKind::contractible, 0, {}};
  if (reduced.size() == 1) {
    const auto [d, c] = reduced.front();
    if (c == 1 && d >= 1) return {ClaimKind::sphere, d, {}};
    if (d == 2) return {ClaimKind::wedge_S2, 2, {c}};
    return {ClaimKind::wedge_Sd, d, {c}};
  }
  if (reduced.size() == 2 && reduced[0].first == 2 && reduced[1].first == 3)
    return {ClaimKind::wedge_S2_S3, 0, {reduced[0].second, reduced[1].second}};
  return {};
}

namespace {

// Concentrated in one dimension >= 2: the shape the homology argument needs.
bool single_sphere_dimension(const Claim& claim) {
  switch (claim.kind) {
    case ClaimKind::sphere: return claim.dim >= 2;
    case ClaimKind::wedge_S2: return true;
    case ClaimKind::wedge_Sd: return claim.dim >= 2;
    default: return false;
  }
}

std::string describe(const std::vector<std::uint64_t>& betti) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < betti.size(); ++i) out << (i ? "," : "") << betti[i];
  out << ")";
  return out.str();
}

bool matches(const BettiProfile& profile, const std::vector<std::uint64_t>& expected) {
  const std::size_t len = std::max(profile.betti.size(), expected.size());
  for (std::size_t d = 0; d < len; ++d) {
    const auto got = d < profile.betti.size() ? profile.betti[d] : 0;
    const auto want = d < expected.size() ? expected[d] : 0;
    if (got != want) return false;
  }
  return true;
}

}  // namespace

Fingerprint fingerprint(const std::optional<BettiProfile>& profile,
                        const std::optional<AntipodeReport>& antipode,
                        const std::optional<ConnectivityCertificate>& connectivity,
                        int n, int k) {
  return fingerprint_against(profile, antipode, connectivity, torus_regime_claim(n, k));
}

Fingerprint fingerprint_against(const std::optional<BettiProfile>& profile,
                                const std::optional<AntipodeReport>& antipode,
                                const std::optional<ConnectivityCertificate>& connectivity,
                                const std::optional<Claim>& expected) {
  if (profile && profile->truncated())
    fail(ErrorKind::validation, "fingerprint needs an untruncated profile, got one cut at dimension " +
                                    std::to_string(*profile->truncated_at));
  Fingerprint f;
  f.evidence = profile;

  if (antipode && antipode->is_antipode) {
    f.claim = {ClaimKind::sphere, *antipode->cross_polytope_dim - 1, {}};
    f.basis = "cross-polytope";
    f.verdict = Verdict::certified;
    f.certificate = "antipode graph: clique complex is the boundary of the " +
                    std::to_string(*antipode->cross_polytope_dim) + "-dimensional cross-polytope";
    if (!profile) {
      f.notes.push_back("homology not computed; the homeomorphism alone settles the type");
    } else if (!matches(*profile, f.claim.betti()) || !profile->torsion_free()) {
      f.verdict = Verdict::inconsistent;
      f.certificate.clear();
      f.notes.push_back("profile " + describe(profile->betti) + " contradicts " + f.claim.label());
    }
    return f;
  }

  if (!profile) fail(ErrorKind::validation, "fingerprint needs a profile without an antipode certificate");

  if (expected) {
    f.claim = *expected;
    f.basis = "regime";
  } else {
    f.claim = claim_from_profile(*profile);
    f.basis = "profile";
  }

  if (f.claim.kind == ClaimKind::unknown) {
    f.verdict = Verdict::consistent;
    f.notes.push_back("no closed-form type; profile " + describe(profile->betti) + " reported as is");
    return f;
  }
  if (!matches(*profile, f.claim.betti())) {
    f.verdict = Verdict::inconsistent;
    f.notes.push_back("expected " + describe(f.claim.betti()) + " for " + f.claim.label() +
                      ", computed " + describe(profile->betti));
    return f;
  }
  if (!profile->torsion_free()) {
    f.verdict = Verdict::inconsistent;
    f.notes.push_back("integral torsion present");
    return f;
  }

  f.verdict = Verdict::consistent;
  const bool integral = profile->coefficients == Coefficients::integer;
  const bool connected = connectivity && connectivity->certified_k >= 1;
  if (integral && connected && single_sphere_dimension(f.claim)) {
    f.verdict = Verdict::certified;
    f.certificate = "simply connected by " + std::string(to_string(connectivity->method)) +
                    " ball intersection; free integral homology in one dimension";
  } else {
    if (!integral) f.notes.push_back("homology over GF(2) only");
    if (!connected) f.notes.push_back("simple connectivity not established");
    if (!single_sphere_dimension(f.claim))
      f.notes.push_back("homology not concentrated in a single dimension >= 2");
  }
  return f;
}

}  // namespace torusrips

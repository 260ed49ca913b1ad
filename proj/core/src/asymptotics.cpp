#include "cohomlen/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "cohomlen/errors.hpp"
#include "cohomlen/homology.hpp"
#include "cohomlen/polyhedra.hpp"

namespace cohomlen {

bool LengthSequence::all_finite() const {
  return std::none_of(values.begin(), values.end(), [](const LengthEntry& e) { return e.result.infinite; });
}

std::vector<Integer> LengthSequence::from_zero() const {
  std::vector<Integer> out{0};
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].n != k + 1) throw DomainError("sequence entries must run over n = 1, 2, ...");
    if (values[k].result.infinite)
      throw DomainError("length at n=" + std::to_string(values[k].n) + " is infinite; fitting is frozen");
    out.emplace_back(static_cast<unsigned long>(values[k].result.value));
  }
  return out;
}

LengthSequence length_sequence(const IdealFamily& family, std::size_t i, std::size_t first, std::size_t last,
                               const ScanOptions& opts) {
  if (first > last) throw DomainError("empty n range");
  LengthSequence seq{family, i, {}};
  for (std::size_t n = first; n <= last; ++n) seq.values.push_back({n, total_length(family_member(family, n), i, opts)});
  return seq;
}

QuasiPolynomial fit_quasipolynomial(const LengthSequence& seq, const FitOptions& opts) {
  const auto values = seq.from_zero();
  return fit_quasipolynomial(values, opts);
}

namespace {

// Calls visit(antichain) for every nonempty antichain of `faces` under inclusion.
template <typename Visit>
void for_each_antichain(const std::vector<VarMask>& faces, std::size_t cap, Visit&& visit) {
  std::vector<VarMask> chosen;
  std::size_t seen = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == faces.size()) {
      if (chosen.empty()) return;
      if (++seen > cap) throw ResourceError("more than " + std::to_string(cap) + " candidate subcomplexes");
      visit(chosen);
      return;
    }
    self(self, k + 1);
    const VarMask f = faces[k];
    for (auto c : chosen)
      if (c.subset_of(f) || f.subset_of(c)) return;
    chosen.push_back(f);
    self(self, k + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
}

}  // namespace

Rational limit_via_volume(const MonomialIdeal& ideal, std::size_t i, const VolumeLimitOptions& opts) {
  const std::size_t d = ideal.dim();
  if (ideal.is_zero()) throw DomainError("the zero ideal has no Newton polyhedron");
  if (i > d || ideal.is_unit()) return 0;
  if (d > SimplicialComplex::max_vertices) throw ResourceError("too many variables for candidate enumeration");

  const std::size_t check_n = opts.check_n == 0 ? d : opts.check_n;
  const LocalizationTable check(FamilyMember::integral_closure(ideal, check_n));
  if (!finiteness_oracle(check, i, {opts.field, opts.threads, false}))
    throw DomainError("integral-closure family has infinite length at n=" + std::to_string(check_n));

  const auto locals = all_localizations(ideal);
  std::vector<VarMask> faces;
  for (std::uint32_t f = 0; f < locals.size(); ++f)
    if (!locals[f].is_unit()) faces.emplace_back(f);

  std::vector<std::optional<NewtonPolyhedron>> polys(locals.size());
  auto poly = [&](VarMask f) -> const NewtonPolyhedron& {
    auto& slot = polys[f.bits()];
    if (!slot) slot = newton_polyhedron(locals[f.bits()]);
    return *slot;
  };
  Integer initial = 1;
  for (const auto& g : ideal.generators()) initial += static_cast<unsigned long>(g.total_degree());

  const auto orthant = newton_polyhedron(MonomialIdeal::unit(d));
  HomologyCache cache(opts.field);
  VolumeCache volumes;
  const std::size_t words = d >= 6 ? (std::size_t{1} << (d - 6)) : 1;
  Rational total = 0;
  for_each_antichain(faces, opts.max_candidates, [&](const std::vector<VarMask>& facets) {
    std::vector<std::uint64_t> bits(words, 0);
    for (auto f : facets) {
      const auto fb = f.bits();
      for (std::uint32_t s = fb;; s = (s - 1) & fb) {
        bits[s >> 6] |= std::uint64_t{1} << (s & 63);
        if (s == 0) break;
      }
    }
    const auto& dims = cache.dims(d, bits);
    const std::size_t h = dims[i];
    if (h == 0) return;
    const auto complex = SimplicialComplex::from_face_bits(d, bits);
    CoConvexRegion region;
    region.outer.dim = d;
    region.outer.add(orthant);
    for (auto g : complex.minimal_nonfaces())
      if (!locals[g.bits()].is_unit()) region.outer.add(poly(g));
    for (auto f : facets) {
      ConvexRegion inner{d, {}};
      inner.add(poly(f));
      region.inner.push_back(std::move(inner));
    }
    Rational volume;
    certify_box(std::move(region), initial, 10, &volume, &volumes);
    total += static_cast<unsigned long>(h) * volume;
  });
  return total;
}

GrowthEstimate growth_estimate(const LengthSequence& seq, const FitOptions& opts) {
  const std::size_t d = seq.family.dim();
  std::vector<const LengthEntry*> finite;
  for (const auto& e : seq.values)
    if (!e.result.infinite && e.n > 0) finite.push_back(&e);
  if (finite.size() < 4) throw DomainError("growth estimate needs at least 4 finite entries");
  auto ratio = [&](const LengthEntry& e) {
    return static_cast<double>(e.result.value) / std::pow(static_cast<double>(e.n), static_cast<double>(d));
  };
  GrowthEstimate g;
  const std::size_t start = finite.size() / 2;
  g.limsup_est = ratio(*finite[start]);
  g.liminf_est = g.limsup_est;
  for (std::size_t k = start; k < finite.size(); ++k) {
    g.limsup_est = std::max(g.limsup_est, ratio(*finite[k]));
    g.liminf_est = std::min(g.liminf_est, ratio(*finite[k]));
  }
  g.trend = ratio(*finite.back());
  if (seq.all_finite() && seq.values.front().n == 1) {
    try {
      const auto qp = fit_quasipolynomial(seq, opts);
      g.fitted_degree = qp.degree();
      if (qp.degree() == static_cast<int>(d)) {
        Rational lead = 0;
        for (const auto& p : qp.polys) lead += p[d];
        lead /= static_cast<unsigned long>(qp.period);
        g.leading_coefficient = lead;
        g.trend = lead.get_d();
      }
    } catch (const InsufficientData&) {
    } catch (const NoFitFound&) {
    }
  }
  return g;
}

}  // namespace cohomlen

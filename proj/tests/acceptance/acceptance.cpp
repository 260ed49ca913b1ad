// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cohomlen/asymptotics.hpp"
#include "cohomlen/dsl.hpp"
#include "cohomlen/graph.hpp"
#include "cohomlen/polyhedra.hpp"
#include "cohomlen/takayama.hpp"
#include "corpus.hpp"

using namespace cohomlen;
namespace corpus = cohomlen::testing;

namespace {

// Pinned tolerances.
const Rational lattice_tolerance(1, 50);  // criterion 6, relative 2%
constexpr std::size_t random_ideal_count = 120;  // criterion 4, at least 100
const std::vector<unsigned> thread_counts{1, 4, 8};

struct Outcome {
  bool pass = false;
  std::string detail;
  // Everything the criterion computed, compared across thread counts.
  std::string transcript;
};

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string describe(const LengthSequence& seq) {
  std::ostringstream os;
  for (const auto& e : seq.values) {
    os << e.n << ":" << (e.result.infinite ? std::string("inf") : std::to_string(e.result.value)) << "[";
    for (const auto& [a, dim] : e.result.support) os << a.to_string() << "=" << dim << ";";
    os << "]";
  }
  return os.str();
}

std::string describe(const QuasiPolynomial& qp) {
  std::string s = "period " + std::to_string(qp.period) + " from " + std::to_string(qp.valid_from);
  for (const auto& p : qp.polys) {
    s += " |";
    for (const auto& c : p) s += " " + to_string(c);
  }
  return s;
}

std::vector<long> lengths(const LengthSequence& seq) {
  std::vector<long> out;
  for (const auto& e : seq.values) out.push_back(e.result.infinite ? -1 : static_cast<long>(e.result.value));
  return out;
}

Outcome example_sequence(unsigned threads) {
  const auto seq = length_sequence(IdealFamily::powers(corpus::path5_ideal()), 1, 8, {{}, threads, true});
  const auto got = lengths(seq);
  const std::vector<long> want{0, 0, 1, 5, 16, 40, 86, 166};
  return {got == want, join(got), describe(seq)};
}

Outcome example_quasipolynomial(unsigned threads) {
  const auto seq = length_sequence(IdealFamily::powers(corpus::path5_ideal()), 1, 16, {{}, threads, true});
  const auto qp = fit_quasipolynomial(seq, {5, 2});
  const std::vector<Rational> even{0, Rational(1, 60), Rational(-1, 24), Rational(-1, 48), Rational(1, 96),
                                   Rational(1, 240)};
  auto odd = even;
  odd[0] = Rational(1, 32);
  const auto values = seq.from_zero();
  const auto gf = to_generating_function(qp, std::span(values).first(qp.valid_from));
  const bool reproduces = gf.series(values.size()) == values;
  const bool pass = qp.period == 2 && qp.polys.size() == 2 && qp.polys[0] == even && qp.polys[1] == odd &&
                    gf.to_string() == "x^3/((1-x)^5(1-x^2))" && reproduces;
  return {pass, describe(qp) + "; " + gf.to_string(), describe(seq) + describe(qp) + gf.to_string()};
}

Outcome volume_limit(unsigned threads) {
  VolumeLimitOptions opts;
  opts.threads = threads;
  const auto v = limit_via_volume(corpus::path5_ideal(), 1, opts);
  return {v == Rational(1, 240), to_string(v), to_string(v)};
}

template <typename F>
void for_each_degree(const ExponentVector& top, F&& f) {
  ExponentVector a(top.size());
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = -1;
  while (true) {
    f(a);
    std::size_t k = 0;
    while (k < a.size() && ++a[k] > top[k]) a[k++] = -1;
    if (k == a.size()) return;
  }
}

Outcome cech_equivalence(unsigned threads) {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<std::size_t> dims(1, 4);
  std::size_t degrees = 0, discrepancies = 0, length_mismatches = 0;
  std::ostringstream transcript;
  for (std::size_t t = 0; t < random_ideal_count; ++t) {
    const auto d = dims(rng);
    const auto ideal = corpus::random_ideal(rng, d, 5, 3);
    const auto top = support_bound(ideal);
    for (std::size_t i = 0; i <= d; ++i) {
      std::uint64_t sum = 0;
      for_each_degree(top, [&](const ExponentVector& a) {
        const auto h = graded_dim({ideal, i, a});
        ++degrees;
        sum += h;
        if (h != cech_oracle(ideal, i, a)) ++discrepancies;
      });
      // A finite length is the sum over the box; the scan must agree.
      const auto total = total_length(ideal, i, {}, threads);
      if (!total.infinite && total.value != sum) ++length_mismatches;
      transcript << (total.infinite ? std::string("inf") : std::to_string(total.value)) << ",";
    }
  }
  std::ostringstream detail;
  detail << random_ideal_count << " ideals, " << degrees << " degrees, " << discrepancies << " discrepancies, "
         << length_mismatches << " length mismatches";
  return {discrepancies == 0 && length_mismatches == 0 && random_ideal_count >= 100, detail.str(), transcript.str()};
}

Outcome newton_facts(unsigned) {
  const auto p = newton_polyhedron(parse_ideal("ring 2; ideal x1*x2^5, x1^4*x2^4, x1^5*x2;"));
  auto facets = p.halfspaces();
  std::sort(facets.begin(), facets.end());
  std::vector<HalfSpace> want{HalfSpace::make({1, 0}, 1), HalfSpace::make({0, 1}, 1), HalfSpace::make({1, 1}, 6)};
  std::sort(want.begin(), want.end());
  bool strict = true;
  for (const auto& h : facets) strict = strict && (h.normal[0] * 4 + h.normal[1] * 4 > h.offset);

  bool simplices = true;
  std::string vols;
  Rational fact = 1;
  for (std::size_t d = 2; d <= 6; ++d) {
    fact *= static_cast<unsigned long>(d);
    std::vector<RationalPoint> pts{RationalPoint(d, Rational(0))};
    for (std::size_t i = 0; i < d; ++i) {
      RationalPoint e(d, Rational(0));
      e[i] = 1;
      pts.push_back(e);
    }
    const auto v = polytope_volume(pts);
    simplices = simplices && v == 1 / fact;
    vols += " " + to_string(v);
  }
  std::string detail = facets == want ? "facets x>=1, y>=1, x+y>=6" : "unexpected facets";
  detail += strict ? "; (4,4) interior" : "; (4,4) not interior";
  detail += "; simplex volumes" + vols;
  return {facets == want && strict && simplices, detail, detail};
}

Outcome lattice_convergence(unsigned) {
  CoConvexRegion region;
  region.outer.dim = 2;
  region.outer.add(newton_polyhedron(parse_ideal("ring 2; ideal x1*x2^5, x1^4*x2^4, x1^5*x2;")));
  for (const char* src : {"ring 2; ideal x1*x2^8, x1^3*x2^6;", "ring 2; ideal x1^6*x2^4, x1^7*x2^3;",
                          "ring 2; ideal x1^9*x2, x1^10;"}) {
    ConvexRegion r{2, {}};
    r.add(newton_polyhedron(parse_ideal(src)));
    region.inner.push_back(r);
  }
  Rational vol;
  region = certify_box(region, 60, 10, &vol);
  const auto count = lattice_count(region, 200);
  Rational ratio(count, Integer(200 * 200));
  ratio.canonicalize();
  const Rational err = abs(ratio - vol) / vol;
  std::ostringstream detail;
  detail << "volume " << to_string(vol) << ", count(200)/200^2 = " << to_string(ratio) << ", relative error "
         << err.get_d();
  return {err < lattice_tolerance, detail.str(), detail.str()};
}

Outcome edge_criteria(unsigned threads) {
  const bool p5 = star_deletion_criterion(corpus::path5()).finite;
  const bool c5 = star_deletion_criterion(corpus::cycle5()).finite;
  const bool tt = star_deletion_criterion(corpus::two_triangles()).finite;
  const auto tt_member = FamilyMember::from_ideal(power(edge_ideal(corpus::two_triangles()), 3));
  const bool tt_oracle = finiteness_oracle(LocalizationTable(tt_member), 1, {{}, threads, false});

  const auto seq = length_sequence(IdealFamily::powers(edge_ideal(corpus::cycle4())), 1, 4, 12, {{}, threads, true});
  bool positive = seq.all_finite();
  std::vector<double> ratios;
  for (const auto& e : seq.values) {
    const double n = static_cast<double>(e.n);
    ratios.push_back(static_cast<double>(e.result.value) / (n * n * n * n));
    positive = positive && ratios.back() > 0;
  }
  // Non-vanishing: the last ratio keeps at least half of the first.
  const bool steady = !ratios.empty() && ratios.back() >= ratios.front() / 2;

  std::ostringstream detail;
  detail << "path5 " << p5 << ", cycle5 " << c5 << ", two triangles " << tt << " (oracle at n=3: "
         << (tt_oracle ? "finite" : "infinite") << "); cycle4 ratios";
  for (auto r : ratios) detail << " " << r;
  const bool pass = p5 && c5 && !tt && !tt_oracle && positive && steady;
  return {pass, detail.str(), detail.str() + describe(seq)};
}

using Criterion = std::function<Outcome(unsigned)>;

void report(int id, const std::string& name, bool pass, const std::string& detail, double seconds, bool& all) {
  std::printf("%s %d %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  all = all && pass;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"power sequence", example_sequence},         {"quasi-polynomial and generating function", example_quasipolynomial},
      {"volume limit", volume_limit},               {"graded dimensions vs Cech strand", cech_equivalence},
      {"Newton polyhedron facts", newton_facts},    {"lattice count convergence", lattice_convergence},
      {"edge-ideal criteria", edge_criteria},
  };

  bool all = true;
  std::vector<std::vector<std::string>> transcripts(criteria.size());
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second(thread_counts.front());
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    transcripts[k].push_back(o.transcript);
    report(static_cast<int>(k + 1), criteria[k].first, o.pass, o.detail, took.count(), all);
  }

  const auto start = std::chrono::steady_clock::now();
  std::string mismatch;
  for (std::size_t t = 1; t < thread_counts.size(); ++t)
    for (std::size_t k = 0; k < criteria.size(); ++k) {
      std::string text;
      try {
        text = criteria[k].second(thread_counts[t]).transcript;
      } catch (const std::exception& e) {
        text = std::string("exception: ") + e.what();
      }
      if (text != transcripts[k].front() && mismatch.empty())
        mismatch = "criterion " + std::to_string(k + 1) + " differs at " + std::to_string(thread_counts[t]) + " threads";
    }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  report(8, "determinism", mismatch.empty(), mismatch.empty() ? "identical at 1, 4 and 8 threads" : mismatch,
         took.count(), all);
  return all ? 0 : 1;
}

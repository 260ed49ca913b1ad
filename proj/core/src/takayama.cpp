#include "cohomlen/takayama.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "cohomlen/errors.hpp"

namespace cohomlen {

namespace {

constexpr std::size_t max_table_words = std::size_t{1} << 26;

std::size_t face_words(std::size_t d) { return d >= 6 ? (std::size_t{1} << (d - 6)) : 1; }

bool test_bit(std::span<const std::uint64_t> w, std::uint32_t f) { return (w[f >> 6] >> (f & 63)) & 1u; }

void set_bit(std::uint64_t* w, std::uint32_t f) { w[f >> 6] |= std::uint64_t{1} << (f & 63); }

// Faces of Delta for sign pattern s, given the localization bits of a^+.
void pattern_faces(std::span<const std::uint64_t> member, std::size_t d, VarMask s, std::vector<std::uint64_t>& out) {
  const std::size_t words = face_words(d);
  out.assign(words, 0);
  const std::uint32_t full = VarMask::full(d).bits();
  if (s.empty()) {
    for (std::size_t k = 0; k < words; ++k) out[k] = ~member[k];
    if (d < 6) out[0] &= (std::uint64_t{1} << (std::size_t{1} << d)) - 1;
    return;
  }
  const std::uint32_t rest = full & ~s.bits();
  for (std::uint32_t f = rest;; f = (f - 1) & rest) {
    if (!test_bit(member, f | s.bits())) set_bit(out.data(), f);
    if (f == 0) break;
  }
}

void check_dim(std::size_t d) {
  if (d > SimplicialComplex::max_vertices)
    throw ResourceError("Takayama scan supports at most " + std::to_string(SimplicialComplex::max_vertices) +
                        " variables, got " + std::to_string(d));
}

}  // namespace

LocalizationTable::LocalizationTable(const FamilyMember& member) : dim_(member.dim()) {
  check_dim(dim_);
  bound_ = member.max_exponents();
  for (std::size_t j = 0; j < dim_; ++j) bound_[j] += 1;
  words_per_point_ = face_words(dim_);
  stride_.resize(dim_);
  points_ = 1;
  for (std::size_t j = 0; j < dim_; ++j) {
    stride_[j] = points_;
    const auto side = static_cast<std::size_t>(bound_[j]) + 1;
    if (points_ > max_table_words / words_per_point_ / side)
      throw ResourceError("localization table over box " + bound_.to_string() + " is too large");
    points_ *= side;
  }
  bits_.assign(points_ * words_per_point_, 0);
  const std::uint32_t masks = std::uint32_t{1} << dim_;

  if (member.has_generators()) {
    for (const auto& g : member.ideal().generators())
      for (std::uint32_t f = 0; f < masks; ++f)
        set_bit(bits_.data() + linear_index(g.zeroed(VarMask(f))) * words_per_point_, f);
    // Prefix-OR along each axis turns generator marks into membership.
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto side = static_cast<std::size_t>(bound_[j]) + 1;
      for (std::size_t p = 0; p < points_; ++p) {
        if ((p / stride_[j]) % side == 0) continue;
        auto* dst = bits_.data() + p * words_per_point_;
        const auto* src = bits_.data() + (p - stride_[j]) * words_per_point_;
        for (std::size_t k = 0; k < words_per_point_; ++k) dst[k] |= src[k];
      }
    }
    return;
  }

  ExponentVector a(dim_);
  for (std::size_t p = 0; p < points_; ++p) {
    auto* w = bits_.data() + p * words_per_point_;
    VarMask zeros;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (a[j] > 0) {
        const auto* src = bits_.data() + (p - stride_[j]) * words_per_point_;
        for (std::size_t k = 0; k < words_per_point_; ++k) w[k] |= src[k];
      } else {
        zeros = zeros.with(j);
      }
    }
    for (std::uint32_t f = 1; f < masks; ++f) {
      if (test_bit({w, words_per_point_}, f)) continue;
      // I_F grows with F.
      for (std::uint32_t rest = f; rest; rest &= rest - 1) {
        if (test_bit({w, words_per_point_}, f & ~(rest & -rest))) {
          set_bit(w, f);
          break;
        }
      }
    }
    for (std::uint32_t f = 0; f < masks; ++f) {
      // With a_j > 0 for some j in F, the answer equals the predecessor's.
      if (!VarMask(f).subset_of(zeros) || test_bit({w, words_per_point_}, f)) continue;
      if (member.contains_localized(a, VarMask(f))) set_bit(w, f);
    }
    std::size_t k = 0;
    while (k < dim_ && ++a[k] > bound_[k]) a[k++] = 0;
  }
}

std::size_t LocalizationTable::linear_index(const ExponentVector& a) const {
  if (a.size() != dim_) throw DimensionMismatch("degree " + a.to_string() + " has the wrong length");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (a[j] < 0) throw DomainError("table lookup needs a nonnegative degree, got " + a.to_string());
    idx += static_cast<std::size_t>(std::min(a[j], bound_[j])) * stride_[j];
  }
  return idx;
}

ExponentVector LocalizationTable::point_at(std::size_t linear) const {
  ExponentVector a(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto side = static_cast<std::size_t>(bound_[j]) + 1;
    a[j] = static_cast<Exponent>((linear / stride_[j]) % side);
  }
  return a;
}

bool LocalizationTable::member(const ExponentVector& a, VarMask f) const {
  return test_bit(words_at(linear_index(a)), f.bits());
}

SimplicialComplex LocalizationTable::delta(const ExponentVector& a) const {
  if (a.size() != dim_) throw DimensionMismatch("degree " + a.to_string() + " has the wrong length");
  std::vector<std::uint64_t> faces;
  pattern_faces(words_at(linear_index(a.positive_part())), dim_, a.negative_support(), faces);
  return SimplicialComplex::from_face_bits(dim_, std::move(faces));
}

SimplicialComplex delta_complex(const MonomialIdeal& ideal, const ExponentVector& a) {
  const std::size_t d = ideal.dim();
  if (a.size() != d) throw DimensionMismatch("degree " + a.to_string() + " has the wrong length");
  check_dim(d);
  const VarMask g = a.negative_support();
  const auto ap = a.positive_part();
  const std::uint32_t rest = VarMask::full(d).bits() & ~g.bits();
  std::vector<std::uint64_t> words(face_words(d), 0);
  for (std::uint32_t f = rest;; f = (f - 1) & rest) {
    if (!localize(ideal, VarMask(f) | g).contains(ap)) set_bit(words.data(), f);
    if (f == 0) break;
  }
  return SimplicialComplex::from_face_bits(d, std::move(words));
}

std::size_t graded_dim(const GradedPieceQuery& q, FieldSpec field) {
  const auto g = static_cast<long>(q.degree.negative_support().size());
  const long j = static_cast<long>(q.index) - g - 1;
  if (j < -1 || q.index > q.ideal.dim()) return 0;
  return reduced_homology_dim(delta_complex(q.ideal, q.degree), static_cast<int>(j), field);
}

ExponentVector support_bound(const MonomialIdeal& ideal) {
  auto m = ideal.max_exponents();
  for (std::size_t j = 0; j < m.size(); ++j) m[j] += 1;
  return m;
}

namespace {

struct SlabResult {
  bool infinite = false;
  std::uint64_t value = 0;
  std::vector<std::pair<ExponentVector, std::size_t>> support;
};

// One pass over the table. Each point p with zero set Z and boundary set B
// stands for the patterns S (subsets of Z, |S| <= i). S = {} inside the box
// contributes to the length; every other pattern must vanish.
SlabResult scan_slab(const LocalizationTable& table, std::size_t i, std::size_t begin, std::size_t end,
                     const ScanOptions& opts, bool count, std::atomic<bool>& stop) {
  SlabResult out;
  const std::size_t d = table.dim();
  HomologyCache cache(opts.field);
  std::vector<std::uint64_t> faces;
  const auto& bound = table.bound();
  for (std::size_t p = begin; p < end; ++p) {
    if ((p & 1023) == 0 && stop.load(std::memory_order_relaxed)) return out;
    const auto a = table.point_at(p);
    VarMask zeros;
    bool on_boundary = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (a[j] == 0) zeros = zeros.with(j);
      if (a[j] == bound[j]) on_boundary = true;
    }
    const auto member = table.words_at(p);
    const std::uint32_t z = zeros.bits();
    for (std::uint32_t s = z;; s = (s - 1) & z) {
      const VarMask sm(s);
      if (sm.size() <= i) {
        pattern_faces(member, d, sm, faces);
        const auto& dims = cache.dims(d, faces);
        const std::size_t idx = i - sm.size();  // homology index + 1
        const std::size_t dim = idx < dims.size() ? dims[idx] : 0;
        if (dim != 0) {
          if (!sm.empty() || on_boundary) {
            out.infinite = true;
            stop.store(true, std::memory_order_relaxed);
            return out;
          }
          if (count) {
            out.value += dim;
            if (opts.collect_support) out.support.emplace_back(a, dim);
          }
        }
      }
      if (s == 0) break;
    }
  }
  return out;
}

SlabResult run_scan(const LocalizationTable& table, std::size_t i, const ScanOptions& opts, bool count) {
  const std::size_t points = table.point_count();
  const std::size_t threads = std::clamp<std::size_t>(opts.threads, 1, std::max<std::size_t>(1, points));
  std::atomic<bool> stop{false};
  std::vector<SlabResult> parts(threads);
  if (threads == 1) {
    parts[0] = scan_slab(table, i, 0, points, opts, count, stop);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          parts[t] = scan_slab(table, i, points * t / threads, points * (t + 1) / threads, opts, count, stop);
        } catch (...) {
          errors[t] = std::current_exception();
          stop.store(true);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  SlabResult total;
  for (auto& part : parts) {
    if (part.infinite) return SlabResult{true, 0, {}};
    total.value += part.value;
    for (auto& s : part.support) total.support.push_back(std::move(s));
  }
  std::sort(total.support.begin(), total.support.end());
  return total;
}

}  // namespace

bool finiteness_oracle(const LocalizationTable& table, std::size_t i, const ScanOptions& opts) {
  if (i > table.dim()) return true;
  return !run_scan(table, i, opts, false).infinite;
}

bool finiteness_oracle(const MonomialIdeal& ideal, std::size_t i, FieldSpec field, unsigned threads) {
  return finiteness_oracle(LocalizationTable(FamilyMember::from_ideal(ideal)), i, {field, threads, false});
}

LengthResult total_length(const LocalizationTable& table, std::size_t i, const ScanOptions& opts) {
  if (i > table.dim()) return {};
  auto r = run_scan(table, i, opts, true);
  if (r.infinite) return LengthResult::infinity();
  return {false, r.value, std::move(r.support)};
}

LengthResult total_length(const FamilyMember& member, std::size_t i, const ScanOptions& opts) {
  if (i > member.dim()) return {};
  if (member.is_unit()) return {};
  return total_length(LocalizationTable(member), i, opts);
}

LengthResult total_length(const MonomialIdeal& ideal, std::size_t i, FieldSpec field, unsigned threads) {
  return total_length(FamilyMember::from_ideal(ideal), i, {field, threads, true});
}

std::size_t cech_oracle(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a) {
  const std::size_t d = ideal.dim();
  if (a.size() != d) throw DimensionMismatch("degree " + a.to_string() + " has the wrong length");
  if (i > d) return 0;
  check_dim(d);
  const VarMask g = a.negative_support();
  const auto ap = a.positive_part();
  auto nonzero = [&](std::uint32_t f) {
    return g.subset_of(VarMask(f)) && !localize(ideal, VarMask(f)).contains(ap.zeroed(VarMask(f)));
  };
  std::vector<std::vector<std::uint32_t>> basis(d + 2);
  for (std::uint32_t f = 0; f < (std::uint32_t{1} << d); ++f)
    if (nonzero(f)) basis[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // Rank of the differential from cochain degree p to p + 1.
  auto diff_rank = [&](std::size_t p) -> std::size_t {
    if (p + 1 > d || basis[p].empty() || basis[p + 1].empty()) return 0;
    std::vector<std::vector<int>> rows;
    for (auto t : basis[p + 1]) {
      std::vector<int> row;
      for (auto s : basis[p]) {
        int entry = 0;
        if ((s & t) == s) {
          const auto k = static_cast<std::uint32_t>(std::countr_zero(t & ~s));
          entry = std::popcount(s & ((std::uint32_t{1} << k) - 1)) % 2 ? -1 : 1;
        }
        row.push_back(entry);
      }
      rows.push_back(std::move(row));
    }
    return matrix_rank(rows);
  };
  const std::size_t out_rank = diff_rank(i);
  const std::size_t in_rank = i == 0 ? 0 : diff_rank(i - 1);
  return basis[i].size() - out_rank - in_rank;
}

}  // namespace cohomlen

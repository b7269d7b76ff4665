#include "fpr/reduction.hpp"

#include <limits>
#include <stdexcept>

#include "fpr/error.hpp"

namespace fpr {

namespace {

using Row = std::vector<int>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw SizeLimit("reduction size arithmetic overflows 64 bits");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw SizeLimit("reduction size arithmetic overflows 64 bits");
  }
  return r;
}

// Rotation p of seq: seq[p..] followed by seq[p-1], ..., seq[0].
void append_rotation(Row& out, const Row& seq, std::size_t p) {
  out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(p), seq.end());
  for (std::size_t i = p; i > 0; --i) out.push_back(seq[i - 1]);
}

void append(Row& out, const Row& part) {
  out.insert(out.end(), part.begin(), part.end());
}

void append_reversed(Row& out, const Row& part) {
  out.insert(out.end(), part.rbegin(), part.rend());
}

// Adjustment rows in local ids: A = 0..mn-1, B = mn..2mn-1, target = 2mn.
std::vector<Row> adjustment_rows(const Election& source, CandidateId target) {
  const int mn = source.m() * source.n();
  int x = mn;
  int y = source.position(0, target) - 1;
  std::vector<Row> rows;
  for (int j = 0; j < source.n(); ++j) {
    if (j > 0) {
      const int d = source.position(j, target) - source.position(j - 1, target);
      if (d >= 0) {
        y += d;
      } else {
        x += d;
      }
    }
    if (x < 0 || y > mn) throw std::logic_error("adjustment shift out of range");
    Row row;
    row.reserve(2 * mn + 1);
    for (int i = 0; i < x; ++i) row.push_back(i);
    for (int i = 0; i < y; ++i) row.push_back(mn + i);
    row.push_back(2 * mn);
    for (int i = y; i < mn; ++i) row.push_back(mn + i);
    for (int i = x; i < mn; ++i) row.push_back(i);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Election build_rotation_profile(std::span<const CandidateId> order, int copies) {
  if (order.empty()) throw InvalidInput("rotation profile needs candidates");
  if (copies < 1) throw InvalidInput("rotation profile needs copies >= 1");
  Row seq;
  for (CandidateId c : order) seq.push_back(c.index());
  std::vector<PreferenceOrder> voters;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    Row row;
    append_rotation(row, seq, p);
    voters.insert(voters.end(), copies, PreferenceOrder::from_indices(row));
  }
  return Election(std::move(voters));
}

std::vector<CandidateId> rotation_inverse(std::span<const CandidateId> order) {
  return {order.rbegin(), order.rend()};
}

Election build_adjustment_profile(const Election& source, CandidateId target,
                                  std::span<const std::string> a_names,
                                  std::span<const std::string> b_names) {
  const std::size_t mn = static_cast<std::size_t>(source.m()) * source.n();
  if (a_names.size() != mn || b_names.size() != mn) {
    throw InvalidInput("adjustment profile needs |A| = |B| = m n = " +
                       std::to_string(mn));
  }
  if (target.index() < 0 || target.index() >= source.m()) {
    throw InvalidInput("adjustment target is not a source candidate");
  }
  std::vector<std::string> names(a_names.begin(), a_names.end());
  names.insert(names.end(), b_names.begin(), b_names.end());
  names.push_back(source.name(target));
  std::vector<PreferenceOrder> voters;
  for (const Row& row : adjustment_rows(source, target)) {
    voters.push_back(PreferenceOrder::from_indices(row));
  }
  return Election(std::move(names), std::move(voters));
}

std::string_view to_string(ReductionGroup group) {
  switch (group) {
    case ReductionGroup::kH: return "H";
    case ReductionGroup::kF: return "F";
    case ReductionGroup::kEi: return "E_i";
    case ReductionGroup::kE: return "E";
    case ReductionGroup::kD: return "D";
    case ReductionGroup::kGi: return "G_i";
    case ReductionGroup::kG: return "G";
    case ReductionGroup::kCPrime: return "C'";
  }
  return "?";
}

std::int64_t ReductionSizes::candidates() const {
  std::int64_t total = checked_add(h, checked_mul(2 * static_cast<std::int64_t>(e_sets.size()), f));
  for (std::int64_t s : e_sets) total = checked_add(total, checked_mul(2, s));
  return checked_add(checked_add(checked_add(total, e), g), c_prime);
}

ReductionSizes reduction_sizes(int m, int n, int k) {
  if (m < 1 || k < 1 || k > m) {
    throw InvalidInput("reduction needs 1 <= k <= m");
  }
  if (n <= k || n % k != 0) {
    throw InvalidInput("reduction needs k | n and n > k (got n = " +
                       std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  const std::int64_t M = m;
  const std::int64_t N = n;
  const std::int64_t per = N / k;  // n / k
  const std::int64_t mmn = checked_mul(checked_mul(M, M), N);
  ReductionSizes s;
  s.h = M - k;
  s.f = checked_mul(M, N);
  for (std::int64_t i = 1; i <= M; ++i) {
    // |E_i| = 2 m^2 n + m + (m - i)(2 m n + 1) n / k
    const std::int64_t tail = checked_mul(
        checked_mul(M - i, checked_add(checked_mul(2, s.f), 1)), per);
    s.e_sets.push_back(checked_add(checked_add(checked_mul(2, mmn), M), tail));
  }
  s.e = checked_add(mmn, M);
  s.g_sets = s.f;
  s.g = checked_add(checked_mul(M, s.f), s.e);
  s.c_prime = M;

  std::int64_t sum_e = 0;
  for (std::int64_t e : s.e_sets) sum_e = checked_add(sum_e, e);
  const std::int64_t sum_f = checked_mul(M, s.f);
  s.v1 = checked_mul(s.h, per);
  s.v2 = checked_mul(checked_add(checked_add(sum_f, sum_e), s.e), per + 1);
  s.v3 = M;
  s.v4 = N;
  s.v5 = checked_mul(checked_add(checked_add(sum_e, checked_mul(M, s.g_sets)), s.g),
                     per + 1);
  return s;
}

ReductionOutput build_monroe_reduction(const Election& election, int k) {
  const int m = election.m();
  const int n = election.n();
  const ReductionSizes sizes = reduction_sizes(m, n, k);
  const std::int64_t total_c = sizes.candidates();
  const std::int64_t total_v = sizes.voters();
  // Two int tables per vote: keep the materialised profile below ~1.6 GB.
  constexpr std::int64_t kMaxCells = 200'000'000;
  if (total_c > std::numeric_limits<int>::max() / 2 ||
      checked_mul(total_c, total_v) > kMaxCells) {
    throw SizeLimit("reduced instance has " + std::to_string(total_c) +
                    " candidates and " + std::to_string(total_v) +
                    " voters, too large to build");
  }

  std::vector<std::string> names;
  std::vector<CandidateTag> tags;
  auto make_set = [&](ReductionGroup group, int set, std::int64_t size,
                      const std::string& prefix) {
    Row ids;
    for (std::int64_t t = 1; t <= size; ++t) {
      ids.push_back(static_cast<int>(names.size()));
      names.push_back(prefix + std::to_string(t));
      tags.push_back({group, set, static_cast<int>(t)});
    }
    return ids;
  };
  const Row h = make_set(ReductionGroup::kH, 0, sizes.h, "h");
  std::vector<Row> f(m), ei(m), d(m), gi(m);
  for (int i = 0; i < m; ++i) {
    f[i] = make_set(ReductionGroup::kF, i + 1, sizes.f, "F" + std::to_string(i + 1) + "_");
  }
  for (int i = 0; i < m; ++i) {
    ei[i] = make_set(ReductionGroup::kEi, i + 1, sizes.e_sets[i],
                     "E" + std::to_string(i + 1) + "_");
  }
  const Row e = make_set(ReductionGroup::kE, 0, sizes.e, "E_");
  for (int i = 0; i < m; ++i) {
    d[i] = make_set(ReductionGroup::kD, i + 1, sizes.e_sets[i],
                    "D" + std::to_string(i + 1) + "_");
  }
  for (int i = 0; i < m; ++i) {
    gi[i] = make_set(ReductionGroup::kGi, i + 1, sizes.g_sets,
                     "G" + std::to_string(i + 1) + "_");
  }
  const Row g = make_set(ReductionGroup::kG, 0, sizes.g, "G_");
  Row cp;
  std::vector<CandidateId> c_prime;
  for (int c = 0; c < m; ++c) {
    cp.push_back(static_cast<int>(names.size()));
    c_prime.emplace_back(cp.back());
    names.push_back("C'" + election.name(CandidateId(c)));
    tags.push_back({ReductionGroup::kCPrime, 0, c + 1});
  }

  Row all_f, all_d, all_gi, e_desc;  // e_desc = E_m, ..., E_1
  for (int i = 0; i < m; ++i) {
    append(all_f, f[i]);
    append(all_d, d[i]);
    append(all_gi, gi[i]);
    append(e_desc, ei[m - 1 - i]);
  }
  Row x = all_f;  // F_1..F_m E E_m..E_1
  append(x, e);
  append(x, e_desc);
  Row y(x.rbegin(), x.rend());  // rotation inverse of x

  const int per = n / k;
  std::vector<PreferenceOrder> voters;
  std::vector<int> lists;
  voters.reserve(static_cast<std::size_t>(total_v));
  auto emit = [&](const Row& row, int list, std::int64_t copies) {
    PreferenceOrder vote = PreferenceOrder::from_indices(row);
    for (std::int64_t c = 0; c < copies; ++c) {
      voters.push_back(vote);
      lists.push_back(list);
    }
  };
  auto tail_after_c = [&](Row& row) {
    append(row, all_d);
    append(row, all_gi);
    append(row, g);
  };

  {  // V_1
    Row row = h;
    append(row, y);
    append(row, cp);
    tail_after_c(row);
    emit(row, 1, sizes.v1);
  }
  for (std::size_t p = 0; p < y.size(); ++p) {  // V_2
    Row row = h;
    append_rotation(row, y, p);
    append(row, cp);
    tail_after_c(row);
    emit(row, 2, per + 1);
  }
  for (int j = 1; j <= m; ++j) {  // V_3
    Row row = h;
    append(row, all_f);
    append(row, e);
    for (int i = 1; i < j; ++i) append(row, d[i - 1]);
    for (int i = m; i > j; --i) append(row, ei[i - 1]);
    row.push_back(cp[j - 1]);
    append(row, ei[j - 1]);
    for (int i = j + 1; i <= m; ++i) row.push_back(cp[i - 1]);
    for (int i = j - 1; i >= 1; --i) row.push_back(cp[i - 1]);
    for (int i = j - 1; i >= 1; --i) append(row, ei[i - 1]);
    for (int i = j; i <= m; ++i) append(row, d[i - 1]);
    append(row, all_gi);
    append(row, g);
    emit(row, 3, 1);
  }
  {  // V_4
    const int mn = m * n;
    std::vector<std::vector<Row>> adj(m);
    for (int i = 1; i <= m; ++i) {
      adj[i - 1] = adjustment_rows(election, CandidateId(m - i));
    }
    for (int l = 0; l < n; ++l) {
      Row row = h;
      append(row, all_d);
      for (int i = 1; i <= m; ++i) {
        for (int local : adj[i - 1][l]) {
          if (local < mn) {
            row.push_back(f[i - 1][local]);
          } else if (local < 2 * mn) {
            row.push_back(gi[i - 1][local - mn]);
          } else {
            row.push_back(cp[m - i]);
          }
        }
      }
      append(row, e);
      append(row, e_desc);
      append(row, g);
      emit(row, 4, 1);
    }
  }
  {  // V_5
    Row z = all_d;
    append(z, all_gi);
    append(z, g);
    for (std::size_t p = 0; p < z.size(); ++p) {
      Row row = h;
      append_rotation(row, z, p);
      append_reversed(row, cp);
      append(row, all_f);
      append(row, e);
      append(row, e_desc);
      emit(row, 5, per + 1);
    }
  }

  ReductionOutput out{Election(std::move(names), std::move(voters)),
                      static_cast<int>(total_c - sizes.h),
                      std::move(tags),
                      std::move(lists),
                      election,
                      k,
                      std::move(c_prime),
                      sizes};
  if (out.sc_election.n() != total_v) {
    throw std::logic_error("reduction voter count disagrees with the formulas");
  }
  return out;
}

ExtractionReport extract_original_committee(const ReductionOutput& output,
                                            const Assignment& sc_solution) {
  ExtractionReport report;
  for (CandidateId c : sc_solution.committee()) {
    const CandidateTag& tag = output.candidate_groups.at(c.index());
    if (tag.group == ReductionGroup::kCPrime) {
      report.committee.emplace_back(tag.member - 1);
    }
  }
  const auto found = static_cast<int>(report.committee.size());
  report.ok = found == output.k;
  report.message = report.ok ? "extracted " + std::to_string(found) + " winners"
                             : "solution has " + std::to_string(found) +
                                   " C' winners, expected " +
                                   std::to_string(output.k);
  return report;
}

Objective calibrate_offset(int m, int n, int k, const OracleConfig& config) {
  reduction_sizes(m, n, k);  // parameter checks
  std::vector<int> ranking(m);
  for (int c = 0; c < m; ++c) ranking[c] = c;
  const Election source(
      std::vector<PreferenceOrder>(n, PreferenceOrder::from_indices(ranking)));
  const auto borda = DissatisfactionFunction::borda();
  const Objective original =
      solve_monroe_bruteforce(source, k, borda, Aggregator::kSum, config).objective;
  const ReductionOutput red = build_monroe_reduction(source, k);
  const Objective reduced =
      solve_monroe_bruteforce(red.sc_election, red.k_sc, borda, Aggregator::kSum,
                              config)
          .objective;
  return reduced - original;
}

}  // namespace fpr

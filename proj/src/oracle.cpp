#include "rankone/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace rankone {

namespace {

// p^e, or nullopt past `cap`.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t e, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > cap / p) return std::nullopt;
    out *= p;
  }
  return out;
}

// Base-p digits of `index` as a length-n vector (least significant first).
void decode(const PrimeField& k, std::uint64_t index, Vec<PrimeField>& out) {
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out(i) = k.element(index % k.p);
    index /= k.p;
  }
}

// Partitions of s into parts of size <= max_part, descending.
void partitions(std::size_t s, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (s == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(s, max_part); part > 0; --part) {
    cur.push_back(part);
    partitions(s - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ZpPolySet enumerate_achievable(const PrimeField& k, const Mat<PrimeField>& a, std::uint64_t budget) {
  const auto n = static_cast<std::size_t>(a.rows());
  if (!bounded_power(k.p, 2 * n, budget)) {
    throw BudgetExceeded("enumeration of F_" + std::to_string(k.p) + "^" + std::to_string(n) +
                         " pairs exceeds the budget of " + std::to_string(budget));
  }
  const std::uint64_t side = *bounded_power(k.p, n, budget);

  auto sweep = [&](std::uint64_t v_begin, std::uint64_t v_end) {
    ZpPolySet found;
    Vec<PrimeField> v = zero_vector(k, a.rows());
    Vec<PrimeField> w = zero_vector(k, a.rows());
    for (std::uint64_t vi = v_begin; vi < v_end; ++vi) {
      decode(k, vi, v);
      for (std::uint64_t wi = 0; wi < side; ++wi) {
        decode(k, wi, w);
        found.insert(charpoly(k, Mat<PrimeField>(a + v * w.transpose())));
      }
    }
    return found;
  };

  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = side * side < (1u << 14) ? 1 : std::min<std::uint64_t>(hw, side);
  if (workers == 1) return sweep(0, side);

  std::vector<ZpPolySet> partial(workers);
  std::vector<std::thread> threads;
  for (std::uint64_t t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] { partial[t] = sweep(side * t / workers, side * (t + 1) / workers); });
  }
  for (auto& th : threads) th.join();
  ZpPolySet out;
  for (auto& s : partial) out.merge(s);
  return out;
}

std::vector<Poly<PrimeField>> monic_polynomials(const PrimeField& k, std::size_t n) {
  const auto count = bounded_power(k.p, n, ~std::uint64_t{0});
  if (!count) throw BudgetExceeded("too many monic polynomials to list");
  std::vector<Poly<PrimeField>> out;
  out.reserve(*count);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    std::vector<Zp> coeffs(n + 1, k.zero());
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs[i] = k.element(rest % k.p);
      rest /= k.p;
    }
    coeffs[n] = k.one();
    out.emplace_back(k, std::move(coeffs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<JordanRepresentative> jordan_representatives(const PrimeField& k, std::size_t n) {
  std::vector<JordanRepresentative> out;
  std::vector<std::pair<Zp, std::size_t>> cur;

  std::function<void(std::uint64_t, std::size_t)> assign = [&](std::uint64_t eig, std::size_t remaining) {
    if (remaining == 0) {
      std::vector<Mat<PrimeField>> blocks;
      for (const auto& [value, size] : cur) {
        blocks.push_back(jordan_block(k, value, static_cast<Eigen::Index>(size)));
      }
      out.push_back({cur, block_diagonal(k, blocks)});
      return;
    }
    if (eig == k.p) return;
    const Zp value = k.element(eig);
    // Use `s` of the remaining dimension on this eigenvalue, largest first.
    for (std::size_t s = remaining + 1; s-- > 0;) {
      std::vector<std::vector<std::size_t>> parts;
      std::vector<std::size_t> scratch;
      partitions(s, s, scratch, parts);
      for (const auto& part : parts) {
        for (auto size : part) cur.emplace_back(value, size);
        assign(eig + 1, remaining - s);
        cur.resize(cur.size() - part.size());
      }
    }
  };
  assign(0, n);
  return out;
}

OracleReport certify_representative(const PrimeField& k, const JordanRepresentative& rep, std::uint64_t budget) {
  OracleReport report{k.spec(), rep, {}, {}, false};
  report.achievable = enumerate_achievable(k, rep.matrix, budget);
  const auto structure = structure_from_blocks<PrimeField>(rep.blocks);
  for (auto& q : monic_polynomials(k, static_cast<std::size_t>(rep.matrix.rows()))) {
    if (feasibility(structure, q).verdict) report.predicted.insert(std::move(q));
  }
  report.agree = report.achievable == report.predicted;
  return report;
}

std::vector<OracleReport> certify_theorem(std::size_t n, const PrimeField& k, std::uint64_t budget) {
  if (!bounded_power(k.p, 2 * n, budget)) {
    throw BudgetExceeded("certify: p^(2n) exceeds the budget of " + std::to_string(budget));
  }
  std::vector<OracleReport> out;
  for (const auto& rep : jordan_representatives(k, n)) out.push_back(certify_representative(k, rep, budget));
  return out;
}

}  // namespace rankone

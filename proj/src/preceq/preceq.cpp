#include "eigcontain/preceq/preceq.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "eigcontain/errors.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc {
namespace {

std::vector<std::int32_t> narrow(const EigenMultiset& e) {
  std::vector<std::int32_t> v(e.mults.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (e.mults[i] > INT32_MAX) throw ResourceLimit("eigenvalue multiplicity exceeds int32");
    v[i] = static_cast<std::int32_t>(e.mults[i]);
  }
  return v;
}

/// Runs body(i) for i in [0, n) on up to `threads` workers; rethrows the first error.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::optional<std::uint32_t> first_excess(const EigenMultiset& small, const EigenMultiset& big) {
  if (small.order != big.order) throw DomainError("eigen multisets of different classes");
  const auto a = narrow(small), b = narrow(big);
  const std::size_t i = simd::first_exceeding(a, b);
  if (i == simd::npos) return std::nullopt;
  return static_cast<std::uint32_t>(i);
}

PreceqReport preceq_check(const ClassFunction& chi1, const ClassFunction& chi2) {
  require_same_group(chi1, chi2);
  PreceqReport r;
  for (std::size_t c = 0; c < chi1.size(); ++c) {
    const EigenMultiset a = eigen_multiset(chi1, c);
    const EigenMultiset b = eigen_multiset(chi2, c);
    if (auto j = first_excess(a, b)) {
      r.holds = false;
      r.witness_class = c;
      r.order = a.order;
      r.exponent = *j;
      r.small_multiplicity = a.mults[*j];
      r.big_multiplicity = b.mults[*j];
      return r;
    }
  }
  return r;
}

EigenTable::EigenTable(const std::vector<ClassFunction>& rows, unsigned threads) {
  data_.resize(rows.size());
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    std::vector<EigenMultiset> v;
    for (std::size_t c = 0; c < rows[i].size(); ++c) v.push_back(eigen_multiset(rows[i], c));
    data_[i] = std::move(v);
  });
}

namespace {

bool contained(const EigenTable& small, std::size_t i, const EigenTable& big, std::size_t j,
               std::size_t classes) {
  for (std::size_t c = 0; c < classes; ++c) {
    if (first_excess(small.at(i, c), big.at(j, c))) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> search(const std::vector<ClassFunction>& sources,
                                                        const EigenTable& src_eig,
                                                        const CharacterTable& table,
                                                        const EigenTable& eig, bool skip_diagonal,
                                                        const SearchOptions& opts) {
  const std::size_t classes = table.group->class_count();
  std::vector<std::vector<std::size_t>> hits(sources.size());
  parallel_for(sources.size(), opts.threads, [&](std::size_t i) {
    const std::int64_t di = *sources[i].degree();
    for (std::size_t j = 0; j < table.size(); ++j) {
      if (skip_diagonal && i == j) continue;
      const std::int64_t gap = table.dim(j) - di;
      if (opts.gap ? gap != *opts.gap : gap < 0) continue;
      if (contained(src_eig, i, eig, j, classes)) hits[i].push_back(j);
    }
  });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (auto j : hits[i]) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> preceq_search(const CharacterTable& table,
                                                              const SearchOptions& opts) {
  const EigenTable eig(table.irreducibles, opts.threads);
  return search(table.irreducibles, eig, table, eig, true, opts);
}

std::vector<std::pair<std::size_t, std::size_t>> preceq_search_sources(
    const CharacterTable& table, const std::vector<ClassFunction>& sources,
    const SearchOptions& opts) {
  for (const auto& s : sources) {
    if (s.group_ptr() != table.group) throw GroupMismatch();
    if (!s.degree()) throw NotGenuine("source character has no integer degree");
  }
  const EigenTable eig(table.irreducibles, opts.threads);
  const EigenTable src(sources, opts.threads);
  return search(sources, src, table, eig, false, opts);
}

}  // namespace eigc

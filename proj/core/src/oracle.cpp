#include "f1/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

#include "f1/errors.hpp"

namespace f1 {

namespace {

// D_k elements: 0..k-2 are C_{k-1} (0 the identity), k-1 is the zero.
struct DkArith {
  long long k;
  long long zero() const { return k - 1; }
  long long mul(long long a, long long b) const {
    if (a == zero() || b == zero()) return zero();
    return (a + b) % (k - 1);
  }
  long long pow(long long a, unsigned e) const {
    if (e == 0) return 0;
    if (a == zero()) return zero();
    return (a * e) % (k - 1);
  }
};

struct SparseWord {
  std::vector<std::pair<int, unsigned>> factors;  // (generator, exponent)
};

SparseWord sparsify(const ExponentVector& w) {
  SparseWord s;
  for (size_t g = 0; g < w.size(); ++g) {
    if (w[g] > 0) s.factors.emplace_back(static_cast<int>(g), w[g]);
  }
  return s;
}

long long eval_word(const DkArith& dk, const SparseWord& w, const std::vector<long long>& img) {
  long long acc = 0;  // identity
  for (auto [g, e] : w.factors) acc = dk.mul(acc, dk.pow(img[g], e));
  return acc;
}

int resolve_threads(const OracleLimits& lim) {
  if (lim.threads > 0) return lim.threads;
  if (const char* env = std::getenv("F1_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

long long checked_space(const Presentation& p, long long k, const OracleLimits& lim) {
  const int gens = p.arity();
  if (gens > lim.max_gens) {
    throw SearchSpaceExceeded("oracle: " + std::to_string(gens) + " generators exceed the limit of " +
                              std::to_string(lim.max_gens));
  }
  if (k < 2 || k > lim.max_k) {
    throw SearchSpaceExceeded("oracle: k=" + std::to_string(k) + " outside 2.." +
                              std::to_string(lim.max_k));
  }
  long long space = 1;
  for (int g = 0; g < gens; ++g) {
    if (space > lim.space_cap / k) {
      throw SearchSpaceExceeded("oracle: assignment space k^gens exceeds the cap");
    }
    space *= k;
  }
  return space;
}

// Enumerates assignments of generator images, partitioned by the image of the
// first generator; `visit` is called once per satisfying assignment.
template <typename Visit>
void enumerate_assignments(const Presentation& p, long long k, const OracleLimits& lim,
                           const Visit& visit_factory) {
  const int gens = p.arity();
  checked_space(p, k, lim);
  DkArith dk{k};
  std::vector<std::pair<SparseWord, SparseWord>> rels;
  for (const Relation& r : p.relations) rels.emplace_back(sparsify(r.lhs), sparsify(r.rhs));

  auto run_slice = [&](long long first_img, auto& sink) {
    std::vector<long long> img(gens, 0);
    if (gens == 0) {
      bool ok = true;
      for (const auto& [l, r] : rels) {
        if (eval_word(dk, l, img) != eval_word(dk, r, img)) ok = false;
      }
      if (ok && first_img == 0) sink(img);
      return;
    }
    img[0] = first_img;
    long long rest = 1;
    for (int g = 1; g < gens; ++g) rest *= k;
    for (long long it = 0; it < rest; ++it) {
      long long rem = it;
      for (int g = 1; g < gens; ++g) {
        img[g] = rem % k;
        rem /= k;
      }
      bool ok = true;
      for (const auto& [l, r] : rels) {
        if (eval_word(dk, l, img) != eval_word(dk, r, img)) {
          ok = false;
          break;
        }
      }
      if (ok) sink(img);
    }
  };

  const int threads = static_cast<int>(
      std::min<long long>(resolve_threads(lim), std::max<long long>(gens == 0 ? 1 : k, 1)));
  if (threads <= 1) {
    auto sink = visit_factory();
    const long long slices = gens == 0 ? 1 : k;
    for (long long s = 0; s < slices; ++s) run_slice(s, sink);
    sink.finish();
    return;
  }
  std::vector<std::future<decltype(visit_factory())>> futs;
  for (int t = 0; t < threads; ++t) {
    futs.push_back(std::async(std::launch::async, [&, t] {
      auto sink = visit_factory();
      for (long long s = t; s < k; s += threads) run_slice(s, sink);
      return sink;
    }));
  }
  auto merged = visit_factory();
  for (auto& f : futs) merged.merge(f.get());
  merged.finish();
}

}  // namespace

bool oracle_feasible(const Presentation& p, long long k, const OracleLimits& lim) {
  try {
    checked_space(p, k, lim);
    return true;
  } catch (const SearchSpaceExceeded&) {
    return false;
  }
}

Int hom_count_oracle(const Presentation& p, long long k, const OracleLimits& lim) {
  p.check();
  Presentation ep = with_explicit_zero(p);
  long long total = 0;
  enumerate_assignments(ep, k, lim, [&]() {
    struct Sink {
      long long count = 0;
      long long* total = nullptr;
      void operator()(const std::vector<long long>&) { ++count; }
      void merge(const Sink& o) { count += o.count; }
      void finish() { *total += count; }
    };
    Sink s;
    s.total = &total;
    return s;
  });
  return Int(total);
}

namespace {

struct PrimeSink {
  const MonoidChart* chart;
  const std::vector<SparseWord>* element_words;
  long long k;
  std::map<PrimeIdeal, long long> counts;

  void operator()(const std::vector<long long>& img) {
    const long long zero = k - 1;
    PrimeIdeal p;
    if (chart->is_finite()) {
      DkArith dk{k};
      uint32_t mask = 0;
      for (size_t e = 0; e < element_words->size(); ++e) {
        if (eval_word(dk, (*element_words)[e], img) == zero) mask |= 1u << e;
      }
      p = PrimeIdeal{mask, false};
    } else {
      const ChartOracleData& od = *chart->oracle;
      uint32_t mask = 0;
      for (size_t i = 0; i < od.cone_gens.size(); ++i) {
        if (img[od.cone_gens[i]] == zero) mask |= 1u << i;
      }
      bool zp = od.zero_gen >= 0 && img[od.zero_gen] == zero;
      p = PrimeIdeal{mask, zp};
    }
    counts[p] += 1;
  }
  void merge(const PrimeSink& o) {
    for (const auto& [p, c] : o.counts) counts[p] += c;
  }
  void finish() {}
};

}  // namespace

std::map<PrimeIdeal, Int> oracle_counts_by_prime(const MonoidChart& c, long long k,
                                                 const OracleLimits& lim) {
  if (!c.oracle) {
    throw SearchSpaceExceeded("oracle: chart " + c.name + " carries no presentation");
  }
  if (c.is_finite() && c.finite().size > 31) {
    throw SearchSpaceExceeded("oracle: finite chart too large for prime decomposition");
  }
  const ChartOracleData& od = *c.oracle;
  std::vector<SparseWord> words;
  if (c.is_finite()) {
    for (const ExponentVector& w : od.element_words) words.push_back(sparsify(w));
  }
  std::map<PrimeIdeal, long long> merged;
  enumerate_assignments(od.pres, k, lim, [&]() {
    struct Sink : PrimeSink {
      std::map<PrimeIdeal, long long>* out;
      void finish() {
        for (const auto& [p, c2] : counts) (*out)[p] += c2;
      }
    };
    Sink s;
    s.chart = &c;
    s.element_words = &words;
    s.k = k;
    s.out = &merged;
    return s;
  });
  std::map<PrimeIdeal, Int> out;
  for (const auto& [p, cnt] : merged) out[p] = cnt;
  return out;
}

bool scheme_oracle_feasible(const F1Scheme& x, long long k, const OracleLimits& lim) {
  for (const MonoidChart& c : x.charts) {
    if (!c.oracle || !oracle_feasible(c.oracle->pres, k, lim)) return false;
  }
  return true;
}

Int scheme_oracle_count(const F1Scheme& x, long long k, const OracleLimits& lim) {
  auto points = glue(x);
  std::vector<std::map<PrimeIdeal, Int>> per_chart(x.charts.size());
  std::vector<char> have(x.charts.size(), 0);
  Int total = 0;
  for (const GlobalPoint& gp : points) {
    const ChartPointRef& rep = gp.members.front();
    if (!have[rep.chart]) {
      per_chart[rep.chart] = oracle_counts_by_prime(x.charts[rep.chart], k, lim);
      have[rep.chart] = 1;
    }
    auto it = per_chart[rep.chart].find(rep.prime);
    if (it != per_chart[rep.chart].end()) total += it->second;
  }
  return total;
}

}  // namespace f1

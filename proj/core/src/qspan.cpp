#include "f1/qspan.hpp"

#include <algorithm>
#include <numeric>

#include "f1/errors.hpp"

namespace f1 {

QSpan make_qspan(PointedModule source, PointedModule target, PointedModule middle,
                 std::vector<int> cokernel_leg, std::vector<int> kernel_leg) {
  QSpan s{std::move(source), std::move(target), std::move(middle), std::move(kernel_leg),
          std::move(cokernel_leg)};
  if (!is_exact_kernel(s.kernel_map())) {
    throw InvalidSpan("make_qspan: kernel leg is not injective");
  }
  if (!is_exact_cokernel(s.cokernel_map())) {
    throw InvalidSpan("make_qspan: cokernel leg is not a collapsing surjection");
  }
  return s;
}

QSpan identity_span(const PointedModule& m) {
  std::vector<int> id(m.size);
  std::iota(id.begin(), id.end(), 0);
  return QSpan{m, m, m, id, id};
}

namespace {

// Encoding of a span under a relabeling of the middle carrier (basepoint
// fixed): action table rows then both legs.
std::vector<int> encode(const QSpan& s, const std::vector<int>& perm) {
  const FiniteMonoid& a = *s.middle.over;
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(a.size + 2) * s.middle.size);
  for (int g = 0; g < a.size; ++g) {
    for (int x = 0; x < s.middle.size; ++x) {
      out.push_back(perm[s.middle.apply(g, inv[x])]);
    }
  }
  for (int x = 0; x < s.middle.size; ++x) out.push_back(s.kernel_leg[inv[x]]);
  for (int x = 0; x < s.middle.size; ++x) out.push_back(s.cokernel_leg[inv[x]]);
  return out;
}

QSpan apply_relabel(const QSpan& s, const std::vector<int>& perm) {
  const FiniteMonoid& a = *s.middle.over;
  QSpan r = s;
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  for (int g = 0; g < a.size; ++g) {
    for (int x = 0; x < s.middle.size; ++x) {
      r.middle.act[static_cast<size_t>(g) * s.middle.size + x] = perm[s.middle.apply(g, inv[x])];
    }
  }
  for (int x = 0; x < s.middle.size; ++x) {
    r.kernel_leg[x] = s.kernel_leg[inv[x]];
    r.cokernel_leg[x] = s.cokernel_leg[inv[x]];
    if (x < static_cast<int>(s.middle.labels.size())) {
      r.middle.labels[x] = s.middle.labels[inv[x]];
    }
  }
  return r;
}

}  // namespace

QSpan canonicalize(const QSpan& s) {
  const int n = s.middle.size;
  if (n > 9) throw SizeExceeded("canonicalize: middle carrier too large for exhaustive relabeling");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_perm = perm;
  std::vector<int> best = encode(s, perm);
  // All relabelings of the nonzero elements.
  std::vector<int> tail(perm.begin() + (n > 0 ? 1 : 0), perm.end());
  std::sort(tail.begin(), tail.end());
  do {
    std::vector<int> p(1, 0);
    p.insert(p.end(), tail.begin(), tail.end());
    std::vector<int> code = encode(s, p);
    if (code < best) {
      best = std::move(code);
      best_perm = std::move(p);
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return apply_relabel(s, best_perm);
}

bool span_isomorphic(const QSpan& a, const QSpan& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  if (a.middle.size != b.middle.size) return false;
  QSpan ca = canonicalize(a);
  QSpan cb = canonicalize(b);
  return ca.middle.act == cb.middle.act && ca.kernel_leg == cb.kernel_leg &&
         ca.cokernel_leg == cb.cokernel_leg;
}

QSpan q_compose(const QSpan& s1, const QSpan& s2) {
  if (!(s1.target == s2.source)) {
    throw NotComposable("q_compose: s1's target is not s2's source");
  }
  // Middle = S x_Y T over s1's kernel leg and s2's cokernel leg.
  Pullback pb = pullback(s1.kernel_map(), s2.cokernel_map());
  ModuleMap new_kernel = compose(pb.to_right, s2.kernel_map());
  ModuleMap new_cokernel = compose(pb.to_left, s1.cokernel_map());
  QSpan out = make_qspan(s1.source, s2.target, pb.object, new_cokernel.map, new_kernel.map);
  return canonicalize(out);
}

}  // namespace f1

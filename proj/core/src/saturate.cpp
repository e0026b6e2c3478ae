#include "f1/saturate.hpp"

#include <deque>
#include <numeric>

#include "f1/errors.hpp"

namespace f1 {

namespace {

// Congruence-closure enumeration of the presented monoid. States are
// discovered words; a transition per generator realizes the product closure;
// relations and commutativity are enforced at every state, with coincidences
// merged through a union-find.
class Enumerator {
 public:
  Enumerator(const Presentation& p, int cap) : pres_(p), ngens_(p.arity()), cap_(cap) {
    new_state();  // the identity
  }

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      // One pass works on the states known at its start; growth is re-examined
      // in the next pass, after coincidences had a chance to merge it away.
      const int snapshot = static_cast<int>(parent_.size());
      // Product closure: every live state needs a transition per generator.
      for (int s = 0; s < snapshot; ++s) {
        if (find(s) != s) continue;
        for (int g = 0; g < ngens_; ++g) {
          if (trans_[s][g] == -1) trans_[s][g] = new_state();
        }
      }
      // Relations, including commutation of every generator pair, hold at
      // every element.
      for (int s = 0; s < snapshot; ++s) {
        if (find(s) != s) continue;
        for (const Relation& r : pres_.relations) {
          int a = trace(s, r.lhs);
          int b = trace(s, r.rhs);
          if (a != b) enqueue(a, b);
        }
        for (int g = 0; g < ngens_; ++g) {
          for (int h = g + 1; h < ngens_; ++h) {
            int a = step(step(s, g), h);
            int b = step(step(s, h), g);
            if (a != b) enqueue(a, b);
          }
        }
      }
      const int live_before = live_;
      process_coincidences();
      if (live_ > cap_) {
        throw CapExceeded("saturation exceeded " + std::to_string(cap_) +
                          " elements; the presented monoid may be infinite");
      }
      changed = static_cast<int>(parent_.size()) != snapshot || live_ != live_before;
    }
  }

  // Canonical BFS renumbering from the identity; fills the result.
  SaturationResult finish() {
    SaturationResult res;
    res.realized = pres_;
    std::vector<int> number(parent_.size(), -1);
    std::vector<int> order;
    int root0 = find(0);
    number[root0] = 0;
    order.push_back(root0);
    res.element_words.push_back(ExponentVector(ngens_, 0));
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int s = order[qi];
      for (int g = 0; g < ngens_; ++g) {
        int t = find(trans_[s][g]);
        if (number[t] == -1) {
          number[t] = static_cast<int>(order.size());
          order.push_back(t);
          ExponentVector w = res.element_words[number[s]];
          w[g] += 1;
          res.element_words.push_back(std::move(w));
        }
      }
    }
    const int n = static_cast<int>(order.size());
    FiniteMonoid& m = res.monoid;
    m.size = n;
    m.identity = 0;
    m.table.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int t = trace_const(order[i], res.element_words[j]);
        m.table[static_cast<size_t>(i) * n + j] = number[t];
      }
    }
    for (int i = 0; i < n; ++i) m.names.push_back(word_to_string(pres_, res.element_words[i]));
    for (int g = 0; g < ngens_; ++g) {
      res.generator_images.push_back(number[find(trans_[root0][g])]);
    }
    return res;
  }

 private:
  int new_state() {
    if (static_cast<int>(parent_.size()) >= budget_limit()) {
      throw CapExceeded("saturation work budget exhausted; the presented monoid may be infinite");
    }
    parent_.push_back(static_cast<int>(parent_.size()));
    trans_.emplace_back(ngens_, -1);
    ++live_;
    return static_cast<int>(parent_.size()) - 1;
  }

  int budget_limit() const { return cap_ > (1 << 20) ? 8 * cap_ : 16 * cap_ + 1024; }

  int find(int s) {
    while (parent_[s] != s) {
      parent_[s] = parent_[parent_[s]];
      s = parent_[s];
    }
    return s;
  }

  // One multiplication step, defining the transition if missing.
  int step(int s, int g) {
    s = find(s);
    if (trans_[s][g] == -1) trans_[s][g] = new_state();
    return find(trans_[s][g]);
  }

  int trace(int s, const ExponentVector& w) {
    for (int g = 0; g < ngens_; ++g) {
      for (unsigned i = 0; i < w[g]; ++i) s = step(s, g);
    }
    return find(s);
  }

  // Trace on the closed table (all transitions defined).
  int trace_const(int s, const ExponentVector& w) {
    for (int g = 0; g < ngens_; ++g) {
      for (unsigned i = 0; i < w[g]; ++i) s = find(trans_[find(s)][g]);
    }
    return find(s);
  }

  void enqueue(int a, int b) { pending_.emplace_back(a, b); }

  void process_coincidences() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);  // the lower index survives; keeps 0 as the identity root
      parent_[b] = a;
      --live_;
      for (int g = 0; g < ngens_; ++g) {
        if (trans_[b][g] == -1) continue;
        if (trans_[a][g] == -1) {
          trans_[a][g] = trans_[b][g];
        } else {
          pending_.emplace_back(trans_[a][g], trans_[b][g]);
        }
      }
    }
  }

  const Presentation& pres_;
  int ngens_;
  int cap_;
  int live_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> trans_;
  std::deque<std::pair<int, int>> pending_;
};

}  // namespace

SaturationResult saturate(const Presentation& p, int cap) {
  if (cap < 1) throw Error("saturate: cap must be >= 1");
  p.check();
  Presentation explicit_p = with_explicit_zero(p);
  if (explicit_p.arity() == 0) {
    SaturationResult res;
    res.monoid = FiniteMonoid::trivial();
    res.element_words.push_back({});
    res.realized = explicit_p;
    return res;
  }
  for (const Relation& r : explicit_p.relations) {
    if (r.lhs.size() != explicit_p.generators.size() || r.rhs.size() != explicit_p.generators.size()) {
      throw SemanticError("saturate: relation arity mismatch");
    }
  }
  Enumerator en(explicit_p, cap);
  en.run();
  SaturationResult res = en.finish();
  if (p.has_zero) {
    // The explicit zero generator names the absorbing element.
    for (int i = 0; i < res.monoid.size; ++i) {
      if (res.monoid.is_absorbing(i)) {
        res.monoid.zero = i;
        res.monoid.names[i] = "0";
        break;
      }
    }
  }
  return res;
}

}  // namespace f1

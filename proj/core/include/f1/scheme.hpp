#pragma once

#include <string>
#include <vector>

#include "f1/chart.hpp"

namespace f1 {

struct ChartPointRef {
  int chart = 0;
  PrimeIdeal prime;

  bool operator==(const ChartPointRef&) const = default;
  bool operator<(const ChartPointRef& o) const {
    if (chart != o.chart) return chart < o.chart;
    return prime < o.prime;
  }
};

// Charts plus point identifications. The underlying space is finite; gluing
// is specified by listing pairs of chart points to identify.
struct F1Scheme {
  std::string name;
  std::vector<MonoidChart> charts;
  std::vector<std::pair<ChartPointRef, ChartPointRef>> identifications;
  SpectrumLimits limits;
};

struct GlobalPoint {
  std::vector<ChartPointRef> members;  // sorted; members.front() is canonical
  FgAbelianGroup stalk_units;

  int rank() const { return stalk_units.rank; }
};

// Union-find closure of the identifications. Throws IncompatibleGluing when
// two identified points disagree on stalk invariants, and Error when an
// identification references a non-existent chart point.
std::vector<GlobalPoint> glue(const F1Scheme& x);

// Max stalk rank over global points.
int scheme_rank(const F1Scheme& x);
// lcm of stalk exponents over global points.
Int scheme_exponent(const F1Scheme& x);

// Builders.
F1Scheme spec_f1();
F1Scheme affine_space(int n);
F1Scheme torus(int k);
F1Scheme mu_scheme(int n);
F1Scheme d_scheme(long long k);       // spec D_k, k >= 2
F1Scheme proj_space(int n);           // 0 <= n <= 6
F1Scheme spec_chart(MonoidChart c, std::string name = "");

}  // namespace f1

// Copyright 2026 The mcxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcxsynth/cost_model.hpp"

#include <cmath>
#include <sstream>

#include "mcxsynth/stesso.hpp"

namespace mcx {

int wave_parity(int n, int n_s) {
  const int p = n - n_s - 1;
  return (p + 1) / 2 - p / 2;
}

namespace {

CostRecord seq1_cost(int n) {
  CostRecord r;
  r.ccx_count = 4L * n - 8;
  r.support_count = n - 2;
  r.total_qubits = 2 * n - 1;
  r.distinct_qubits = 2 * n - 1;
  return r;
}

}  // namespace

CostRecord predict(Variant variant, int n, int n_s) {
  if (n < 3) throw Error(Errc::TooFewControls, std::to_string(n) + " < 3");
  CostRecord r;
  switch (variant) {
    case Variant::Seq1:
      if (n_s != n - 2) throw Error(Errc::BadSupportCount, "seq1 uses n-2 supports");
      r = seq1_cost(n);
      break;
    case Variant::Seq2: {
      if (n_s < 1 || n_s > n - 2) {
        throw Error(Errc::BadSupportCount, "seq2 needs 1 <= n_s <= n-2");
      }
      if (n_s == n - 2) {
        r = seq1_cost(n);
        break;
      }
      const int j = wave_parity(n, n_s);
      r.x_count = 2L * n - 2L * n_s - 2 - 2L * j;
      r.ccx_count = 6L * n - 2L * n_s - 16 + 2L * j;
      r.support_count = n_s;
      r.total_qubits = n + n_s + 1;
      r.distinct_qubits = n + n_s + 1;
      break;
    }
    case Variant::Seq3: {
      if (n_s != 1) throw Error(Errc::BadSupportCount, "seq3 uses one support");
      const auto [k, m] = ladder_split(n);
      const long kk = static_cast<long>(k) * k;
      r.x_count = 2 * kk - 2L * k + 4L * m - 4;
      r.ccx_count = k == 2 ? 2 * kk + 4L * m - 4 : 2 * kk + 6L * k + 4L * m - 18;
      r.support_count = 1;
      r.total_qubits = n + 2;
      r.distinct_qubits = n + 2;
      break;
    }
    case Variant::Custom:
      throw Error(Errc::BadVariant, "no closed form for custom sequences");
  }
  r.total_size = r.x_count + r.ccx_count;
  return r;
}

CostRecord measure(const Circuit& c) {
  CostRecord r;
  r.x_count = static_cast<long>(c.count(GateKind::X));
  r.cx_count = static_cast<long>(c.count(GateKind::CX));
  r.ccx_count = static_cast<long>(c.count(GateKind::CCX));
  r.swap_count = static_cast<long>(c.count(GateKind::SWAP));
  r.total_size = static_cast<long>(c.size());
  r.depth = static_cast<long>(c.depth());
  r.support_count = static_cast<int>(c.qubits_with_role(Role::Support).size());
  r.total_qubits = c.num_qubits();
  r.distinct_qubits = c.num_qubits();
  return r;
}

std::optional<long> stair_segment_depth(const CompositionSequence& seq) {
  for (const Segment& seg : seq.segments) {
    for (const SequenceElement& e : seg.elements) {
      if (e.shape != ShapeKind::Downstairs) continue;
      Circuit c{seq.qubits};
      for (const ShapeTetrad& t : e.tetrads) c.add_all(build_shape(c, e.shape, t));
      return static_cast<long>(c.depth());
    }
  }
  return std::nullopt;
}

std::optional<double> predicted_stair_depth(Variant variant, int n, int n_s) {
  if (variant == Variant::Seq2 && n_s < n - 2) {
    return 2.0 * std::log2(static_cast<double>((n - n_s - 1) / 2 + 1));
  }
  if (variant == Variant::Seq3) return 2.0 * std::sqrt(2.0 * (n + 1));
  return std::nullopt;
}

CostRow cost_row(Variant variant, int n, int n_s) {
  CostRow row{variant, n, n_s, predict(variant, n, n_s), {}};
  row.measured = measure(synth_pp(n, variant, n_s));
  return row;
}

std::string format_cost_table(const std::vector<CostRow>& rows) {
  std::ostringstream os;
  os << "variant\tn\tn_s\tpred_x\tpred_ccx\tpred_size\tmeas_x\tmeas_ccx\tmeas_size\tmeas_depth"
        "\tmatch\n";
  for (const CostRow& r : rows) {
    os << variant_name(r.variant) << '\t' << r.n << '\t' << r.n_s << '\t'
       << r.predicted.x_count << '\t' << r.predicted.ccx_count << '\t'
       << r.predicted.total_size << '\t' << r.measured.x_count << '\t'
       << r.measured.ccx_count << '\t' << r.measured.total_size << '\t'
       << r.measured.depth.value_or(0) << '\t' << (r.match() ? "yes" : "no") << '\n';
  }
  return os.str();
}

}  // namespace mcx

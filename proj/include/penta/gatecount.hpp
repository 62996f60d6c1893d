#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "penta/family.hpp"

namespace penta {

/// Node reference into a Circuit arena.
using NodeRef = std::uint32_t;

enum class GateKind : std::uint8_t { Const0, Const1, Input, Xor, And };

/// Aggregated circuit cost. Depths are the maximum number of XOR (resp.
/// AND) gates on any input-to-output path.
struct GateStats {
  std::uint64_t xor_count = 0;
  std::uint64_t and_count = 0;
  int depth_x = 0;
  int depth_a = 0;
};

/// Gate DAG arena with constant folding at construction:
/// XOR(x, 0) = x, XOR(x, x) = 0, AND(x, 1) = x, AND(x, 0) = 0.
/// Folded gates are never constructed and never counted.
///
/// Nodes carry a `counted` flag: xor2/and2 build counted arithmetic
/// gates, while join2 builds an uncounted XOR used for the multiplier's
/// recombination overlay (positional data placement). Joins compute XOR
/// for evaluation purposes but do not contribute to xor_count or depth,
/// matching the cost accounting this tracer reproduces.
class Circuit {
 public:
  Circuit();

  NodeRef const0() const { return 0; }
  NodeRef const1() const { return 1; }
  NodeRef input();  // next input index is assigned sequentially

  NodeRef xor2(NodeRef a, NodeRef b) { return make_xor(a, b, true); }
  NodeRef and2(NodeRef a, NodeRef b);
  NodeRef join2(NodeRef a, NodeRef b) { return make_xor(a, b, false); }

  std::uint64_t xor_count() const { return xor_count_; }
  std::uint64_t and_count() const { return and_count_; }
  std::size_t input_count() const { return input_count_; }
  std::size_t node_count() const { return nodes_.size(); }

  int depth_x(NodeRef n) const { return nodes_[n].depth_x; }
  int depth_a(NodeRef n) const { return nodes_[n].depth_a; }

  GateStats stats_for(const std::vector<NodeRef>& outputs) const;

  /// Evaluates the DAG over concrete input bits (indexed in input
  /// creation order).
  std::vector<std::uint8_t> evaluate(const std::vector<NodeRef>& outputs,
                                     const std::vector<std::uint8_t>& inputs) const;

 private:
  struct Node {
    GateKind kind;
    bool counted;
    NodeRef a = 0;
    NodeRef b = 0;
    std::uint32_t input_index = 0;
    int depth_x = 0;
    int depth_a = 0;
  };

  NodeRef make_xor(NodeRef a, NodeRef b, bool counted);
  NodeRef push(Node n);

  std::vector<Node> nodes_;
  std::uint64_t xor_count_ = 0;
  std::uint64_t and_count_ = 0;
  std::size_t input_count_ = 0;
};

/// Symbolic bit algebra over a Circuit; plugs into the shared reducer
/// and Karatsuba templates.
struct SymAlg {
  using Bit = NodeRef;
  Circuit* c;
  Bit zero() { return c->const0(); }
  Bit xor2(Bit a, Bit b) { return c->xor2(a, b); }
  Bit and2(Bit a, Bit b) { return c->and2(a, b); }
  Bit join(Bit a, Bit b) { return c->join2(a, b); }
};

/// Traces the dispatched fast reducer on 2m-1 symbolic inputs.
/// XOR count is 6b+1 (c = 1), 6b+3c-2 (general) or 12c-1 (b = 2c);
/// no AND gates; XOR depth 3.
GateStats trace_reduction(const PentaShape& s);

/// Full Karatsuba trace for tests: the circuit plus its output bits.
struct KaratsubaTrace {
  Circuit circuit;
  std::vector<NodeRef> outputs;
  std::size_t width = 0;  // traced operand width (m rounded up to even)
  GateStats stats;
};

KaratsubaTrace trace_karatsuba_full(std::uint32_t m);

/// Traces the multiplier for two m-bit operands. Odd widths above 1 are
/// traced at m+1 (the multiplier is built for an even operand width).
GateStats trace_karatsuba(std::uint32_t m);

/// Karatsuba constant per degree: xor_count normalized by the traced
/// width w(m), C(m) = xor / w(m)^(log2 3).
std::vector<std::pair<std::uint32_t, double>> karatsuba_constant_series(std::uint32_t max_m);

/// Combined multiplication + reduction cost for one shape.
struct CostReport {
  std::uint32_t m = 0;
  std::optional<PentaShape> shape;
  std::uint64_t mul_xor = 0;
  std::uint64_t mul_and = 0;
  std::uint64_t red_xor = 0;
  std::uint64_t total_xor = 0;  // mul_xor + red_xor
  double karatsuba_constant = 0.0;
  int mul_depth_x = 0;
  int red_depth_x = 0;  // always 3
  int depth_x = 0;      // mul_depth_x + red_depth_x
};

CostReport cost_report(const PentaShape& s);

/// Closed-form reduction XOR count for the shape's subfamily.
std::uint64_t reduction_xor_formula(const PentaShape& s);

/// CSV writers (headers "m,C" and
/// "m,b,c,mul_xor,mul_and,red_xor,total_xor,depth").
void write_constant_series_csv(std::ostream& os,
                               const std::vector<std::pair<std::uint32_t, double>>& series);
void write_cost_csv_header(std::ostream& os);
void write_cost_csv_row(std::ostream& os, const CostReport& r);

}  // namespace penta

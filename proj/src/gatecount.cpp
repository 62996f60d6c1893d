#include "penta/gatecount.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "penta/gf2x.hpp"
#include "penta/reduce.hpp"

namespace penta {

Circuit::Circuit() {
  nodes_.push_back({GateKind::Const0, false, 0, 0, 0, 0, 0});
  nodes_.push_back({GateKind::Const1, false, 0, 0, 0, 0, 0});
}

NodeRef Circuit::input() {
  Node n{GateKind::Input, false, 0, 0, static_cast<std::uint32_t>(input_count_), 0, 0};
  ++input_count_;
  return push(n);
}

NodeRef Circuit::push(Node n) {
  nodes_.push_back(n);
  return static_cast<NodeRef>(nodes_.size() - 1);
}

NodeRef Circuit::make_xor(NodeRef a, NodeRef b, bool counted) {
  if (a == const0()) return b;
  if (b == const0()) return a;
  if (a == b) return const0();
  Node n{GateKind::Xor, counted, a, b, 0, 0, 0};
  int dx = std::max(nodes_[a].depth_x, nodes_[b].depth_x);
  n.depth_x = counted ? dx + 1 : dx;
  n.depth_a = std::max(nodes_[a].depth_a, nodes_[b].depth_a);
  if (counted) ++xor_count_;
  return push(n);
}

NodeRef Circuit::and2(NodeRef a, NodeRef b) {
  if (a == const1()) return b;
  if (b == const1()) return a;
  if (a == const0() || b == const0()) return const0();
  Node n{GateKind::And, true, a, b, 0, 0, 0};
  n.depth_x = std::max(nodes_[a].depth_x, nodes_[b].depth_x);
  n.depth_a = std::max(nodes_[a].depth_a, nodes_[b].depth_a) + 1;
  ++and_count_;
  return push(n);
}

GateStats Circuit::stats_for(const std::vector<NodeRef>& outputs) const {
  GateStats st;
  st.xor_count = xor_count_;
  st.and_count = and_count_;
  for (NodeRef o : outputs) {
    st.depth_x = std::max(st.depth_x, nodes_[o].depth_x);
    st.depth_a = std::max(st.depth_a, nodes_[o].depth_a);
  }
  return st;
}

std::vector<std::uint8_t> Circuit::evaluate(const std::vector<NodeRef>& outputs,
                                            const std::vector<std::uint8_t>& inputs) const {
  std::vector<std::uint8_t> val(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case GateKind::Const0: val[i] = 0; break;
      case GateKind::Const1: val[i] = 1; break;
      case GateKind::Input:
        val[i] = n.input_index < inputs.size() ? inputs[n.input_index] : 0;
        break;
      case GateKind::Xor: val[i] = val[n.a] ^ val[n.b]; break;
      case GateKind::And: val[i] = val[n.a] & val[n.b]; break;
    }
  }
  std::vector<std::uint8_t> out(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) out[i] = val[outputs[i]];
  return out;
}

GateStats trace_reduction(const PentaShape& s) {
  Circuit c;
  SymAlg alg{&c};
  const std::size_t m = s.m;
  std::vector<NodeRef> d(2 * m - 1);
  for (auto& bit : d) bit = c.input();
  std::vector<NodeRef> out(m, c.const0());

  if (s.subfamily == Subfamily::C1) {
    std::vector<NodeRef> t1(s.b - 1), t4(s.b);
    detail::c1_core(alg, std::span<const NodeRef>(d), std::span<NodeRef>(out),
                    std::span<NodeRef>(t1), std::span<NodeRef>(t4), s.b);
  } else if (s.subfamily == Subfamily::B2C) {
    std::vector<NodeRef> t1(s.c), t2(s.c - 1);
    detail::b2c_core(alg, std::span<const NodeRef>(d), std::span<NodeRef>(out),
                     std::span<NodeRef>(t1), std::span<NodeRef>(t2), s.c);
  } else {
    std::vector<NodeRef> t1(s.b - 1);
    detail::general_core(alg, std::span<const NodeRef>(d), std::span<NodeRef>(out),
                         std::span<NodeRef>(t1), s.b, s.c);
  }
  return c.stats_for(out);
}

KaratsubaTrace trace_karatsuba_full(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("trace_karatsuba requires m >= 1");
  KaratsubaTrace tr;
  tr.width = (m <= 1 || m % 2 == 0) ? m : m + 1;
  SymAlg alg{&tr.circuit};
  std::vector<NodeRef> a(tr.width), b(tr.width);
  for (auto& bit : a) bit = tr.circuit.input();
  for (auto& bit : b) bit = tr.circuit.input();
  tr.outputs = gf2x::karatsuba<SymAlg>(alg, a, b);
  tr.stats = tr.circuit.stats_for(tr.outputs);
  return tr;
}

GateStats trace_karatsuba(std::uint32_t m) { return trace_karatsuba_full(m).stats; }

std::vector<std::pair<std::uint32_t, double>> karatsuba_constant_series(std::uint32_t max_m) {
  if (max_m < 2) throw std::invalid_argument("constant series requires max_m >= 2");
  std::vector<std::pair<std::uint32_t, double>> out;
  const double e = std::log2(3.0);
  std::uint32_t cached_w = 0;
  double cached_c = 0.0;
  for (std::uint32_t m = 2; m <= max_m; ++m) {
    std::uint32_t w = m % 2 == 0 ? m : m + 1;  // traced operand width
    if (w != cached_w) {
      GateStats st = trace_karatsuba(m);
      cached_w = w;
      cached_c = static_cast<double>(st.xor_count) / std::pow(static_cast<double>(w), e);
    }
    out.emplace_back(m, cached_c);
  }
  return out;
}

std::uint64_t reduction_xor_formula(const PentaShape& s) {
  switch (s.subfamily) {
    case Subfamily::C1: return 6ull * s.b + 1;
    case Subfamily::B2C: return 12ull * s.c - 1;
    case Subfamily::General: return 6ull * s.b + 3ull * s.c - 2;
  }
  throw std::logic_error("unreachable");
}

CostReport cost_report(const PentaShape& s) {
  CostReport r;
  r.m = s.m;
  r.shape = s;
  GateStats mul = trace_karatsuba(s.m);
  GateStats red = trace_reduction(s);
  r.mul_xor = mul.xor_count;
  r.mul_and = mul.and_count;
  r.red_xor = red.xor_count;
  r.total_xor = r.mul_xor + r.red_xor;
  std::uint32_t w = (s.m <= 1 || s.m % 2 == 0) ? s.m : s.m + 1;
  r.karatsuba_constant =
      static_cast<double>(r.mul_xor) / std::pow(static_cast<double>(w), std::log2(3.0));
  r.mul_depth_x = mul.depth_x;
  r.red_depth_x = red.depth_x;
  r.depth_x = mul.depth_x + red.depth_x;
  if (red.xor_count != reduction_xor_formula(s))
    throw std::logic_error("reduction trace disagrees with the closed-form count");
  double bound = 6.0 * std::pow(static_cast<double>(s.m), std::log2(3.0)) +
                 static_cast<double>(r.red_xor);
  if (static_cast<double>(r.total_xor) >= bound)
    throw std::logic_error("total XOR count exceeds the 6 m^(log2 3) + red bound");
  return r;
}

void write_constant_series_csv(std::ostream& os,
                               const std::vector<std::pair<std::uint32_t, double>>& series) {
  os << "m,C\n";
  char buf[64];
  for (const auto& [m, c] : series) {
    std::snprintf(buf, sizeof buf, "%u,%.6f\n", m, c);
    os << buf;
  }
}

void write_cost_csv_header(std::ostream& os) {
  os << "m,b,c,mul_xor,mul_and,red_xor,total_xor,depth\n";
}

void write_cost_csv_row(std::ostream& os, const CostReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%u,%u,%u,%llu,%llu,%llu,%llu,%d\n", r.m,
                r.shape ? r.shape->b : 0u, r.shape ? r.shape->c : 0u,
                static_cast<unsigned long long>(r.mul_xor),
                static_cast<unsigned long long>(r.mul_and),
                static_cast<unsigned long long>(r.red_xor),
                static_cast<unsigned long long>(r.total_xor), r.depth_x);
  os << buf;
}

}  // namespace penta

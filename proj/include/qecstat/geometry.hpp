#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qecstat/core.hpp"

namespace qecstat {

// Edge-qubit layout of a distance-L code.
//
// Planar: horizontal qubits h(r,c) for r,c in [0,L), vertical qubits v(r,c)
// for r,c in [0,L-1).  Checks sit at (r,c), r in [0,L), c in [0,L-1), touching
// h(r,c), h(r,c+1), v(r-1,c), v(r,c) where in range.  Qubits h(r,0) and
// h(r,L-1) touch a single check and exit through the left/right rough
// boundary.  The logical is the horizontal qubits of one row (weight L); the
// homology cut is the column of horizontal qubits at c = 0.
//
// Torus: same rule with every coordinate mod L, giving 2L^2 qubits and L^2
// checks.  Two cuts: horizontal qubits at c = 0 and vertical qubits at r = 0.
struct CodeGeometry {
  CodeKind kind = CodeKind::torus;
  int L = 0;
  int n_qubits = 0;
  int n_checks = 0;
  // Incident checks per qubit; -1 marks a rough-boundary end (planar only).
  std::vector<std::array<int, 2>> qubit_checks;
  // Which boundary a single-check qubit exits: 0 left, 1 right, -1 bulk.
  std::vector<int8_t> qubit_boundary;
  std::vector<std::vector<int>> check_qubits;
  // cut_member[c][q] != 0 iff qubit q belongs to cut c.
  std::vector<std::vector<uint8_t>> cut_member;
  // Canonical logical representative per cut (weight L each).
  std::vector<std::vector<int>> logicals;

  int n_cuts() const { return int(cut_member.size()); }
  int h_index(int r, int c) const;
  int v_index(int r, int c) const;
};

CodeGeometry build_geometry(CodeKind kind, int L);

// Bitset over qubits.
struct ErrorPattern {
  std::vector<uint64_t> words;
  int n_bits = 0;

  explicit ErrorPattern(int n = 0) : words((n + 63) / 64, 0), n_bits(n) {}
  bool get(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words[i >> 6] |= uint64_t(1) << (i & 63); }
  void flip(int i) { words[i >> 6] ^= uint64_t(1) << (i & 63); }
  int weight() const;
};

// Checks with an odd number of flipped incident qubits.
std::vector<int> syndrome(const CodeGeometry& g, const ErrorPattern& e);

// Crossing parity of the pattern with cut `cut_index`.
int cut_parity(const CodeGeometry& g, const ErrorPattern& e, int cut_index);

}  // namespace qecstat

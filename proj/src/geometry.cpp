#include "qecstat/geometry.hpp"

#include <bit>
#include <stdexcept>

namespace qecstat {

int CodeGeometry::h_index(int r, int c) const {
  if (kind == CodeKind::torus) return ((r % L + L) % L) * L + ((c % L + L) % L);
  return r * L + c;
}

int CodeGeometry::v_index(int r, int c) const {
  if (kind == CodeKind::torus) return L * L + ((r % L + L) % L) * L + ((c % L + L) % L);
  return L * L + r * (L - 1) + c;
}

int ErrorPattern::weight() const {
  int w = 0;
  for (uint64_t x : words) w += std::popcount(x);
  return w;
}

CodeGeometry build_geometry(CodeKind kind, int L) {
  if (L < 2) throw std::domain_error("build_geometry: L must be >= 2");
  CodeGeometry g;
  g.kind = kind;
  g.L = L;
  if (kind == CodeKind::torus) {
    g.n_qubits = 2 * L * L;
    g.n_checks = L * L;
  } else {
    g.n_qubits = L * L + (L - 1) * (L - 1);
    g.n_checks = L * (L - 1);
  }
  g.qubit_checks.assign(g.n_qubits, {-1, -1});
  g.qubit_boundary.assign(g.n_qubits, -1);
  g.check_qubits.assign(g.n_checks, {});

  auto attach = [&](int q, int ch) {
    auto& qc = g.qubit_checks[q];
    if (qc[0] == -1) qc[0] = ch;
    else qc[1] = ch;
    g.check_qubits[ch].push_back(q);
  };

  if (kind == CodeKind::torus) {
    auto cid = [&](int r, int c) { return ((r % L + L) % L) * L + ((c % L + L) % L); };
    for (int r = 0; r < L; ++r)
      for (int c = 0; c < L; ++c) {
        const int ch = cid(r, c);
        attach(g.h_index(r, c), ch);
        attach(g.h_index(r, c + 1), ch);
        attach(g.v_index(r - 1, c), ch);
        attach(g.v_index(r, c), ch);
      }
    g.cut_member.assign(2, std::vector<uint8_t>(g.n_qubits, 0));
    g.logicals.assign(2, {});
    for (int r = 0; r < L; ++r) g.cut_member[0][g.h_index(r, 0)] = 1;
    for (int c = 0; c < L; ++c) g.cut_member[1][g.v_index(0, c)] = 1;
    for (int c = 0; c < L; ++c) g.logicals[0].push_back(g.h_index(0, c));
    for (int r = 0; r < L; ++r) g.logicals[1].push_back(g.v_index(r, 0));
  } else {
    auto cid = [&](int r, int c) { return r * (L - 1) + c; };
    for (int r = 0; r < L; ++r)
      for (int c = 0; c < L - 1; ++c) {
        const int ch = cid(r, c);
        attach(g.h_index(r, c), ch);
        attach(g.h_index(r, c + 1), ch);
        if (r - 1 >= 0 && r - 1 <= L - 2) attach(g.v_index(r - 1, c), ch);
        if (r <= L - 2) attach(g.v_index(r, c), ch);
      }
    for (int r = 0; r < L; ++r) {
      g.qubit_boundary[g.h_index(r, 0)] = 0;
      g.qubit_boundary[g.h_index(r, L - 1)] = 1;
    }
    g.cut_member.assign(1, std::vector<uint8_t>(g.n_qubits, 0));
    g.logicals.assign(1, {});
    for (int r = 0; r < L; ++r) g.cut_member[0][g.h_index(r, 0)] = 1;
    for (int c = 0; c < L; ++c) g.logicals[0].push_back(g.h_index(0, c));
  }
  return g;
}

std::vector<int> syndrome(const CodeGeometry& g, const ErrorPattern& e) {
  std::vector<uint8_t> odd(g.n_checks, 0);
  for (int w = 0; w < int(e.words.size()); ++w) {
    uint64_t bits = e.words[w];
    while (bits) {
      const int q = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      for (int ch : g.qubit_checks[q])
        if (ch >= 0) odd[ch] ^= 1;
    }
  }
  std::vector<int> out;
  for (int ch = 0; ch < g.n_checks; ++ch)
    if (odd[ch]) out.push_back(ch);
  return out;
}

int cut_parity(const CodeGeometry& g, const ErrorPattern& e, int cut_index) {
  const auto& cm = g.cut_member.at(cut_index);
  int par = 0;
  for (int w = 0; w < int(e.words.size()); ++w) {
    uint64_t bits = e.words[w];
    while (bits) {
      const int q = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      par ^= cm[q];
    }
  }
  return par;
}

}  // namespace qecstat

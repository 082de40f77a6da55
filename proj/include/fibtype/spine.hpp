#pragma once

#include <stdexcept>
#include <string>

#include "fibtype/face_pairing.hpp"
#include "fibtype/presentation.hpp"

namespace fibtype {

/// Face-pairing ball for G_n(1,1) (relators x_i x_{i+1} x_{i+1}^{-1}), n >= 2.
/// Vertices N, S, v_0..v_{n-1}; per generator x_i three edges:
/// [N,S]_i (N->S), [S,S]_i (S->S) and [S,v_i] (S->v_i).
inline FacePairingComplex build_h_n1_polyhedron(int n) {
  if (n < 2) throw std::invalid_argument("build_h_n1_polyhedron needs n >= 2");
  FacePairingComplex c;
  c.n = n;
  c.vertex_names = {"N", "S"};
  for (int i = 0; i < n; ++i) c.vertex_names.push_back("v" + std::to_string(i));
  const int N = 0, S = 1;
  auto V = [&](int i) { return 2 + ((i % n + n) % n); };

  // edge ids: ns_i = 3i, loop_i = 3i+1, sv_i = 3i+2
  for (int i = 0; i < n; ++i) {
    c.edges.push_back({N, S, i, "[N,S]_" + std::to_string(i)});
    c.edges.push_back({S, S, i, "[S,S]_" + std::to_string(i)});
    c.edges.push_back({S, V(i), i, "[S,v" + std::to_string(i) + "]"});
  }
  auto ns = [&](int i) { return 3 * ((i % n + n) % n); };
  auto loop = [&](int i) { return 3 * ((i % n + n) % n) + 1; };
  auto sv = [&](int i) { return 3 * ((i % n + n) % n) + 2; };

  for (int i = 0; i < n; ++i) {
    FacePairingComplex::FacePair p;
    p.plus = {{ns(i), true}, {loop(i + 1), true}, {ns(i + 1), false}};
    p.minus = {{loop(i), true}, {sv(i + 1), true}, {sv(i + 1), false}};
    c.pairs.push_back(p);
    Word r;
    r.letters = {Letter{i, 1}, Letter{(i + 1) % n, 1}, Letter{(i + 1) % n, -1}};
    c.relators.push_back(r);
  }
  return c;
}

namespace detail {

struct AltComplexFrame {
  FacePairingComplex c;
  int N = 0, S = 1;
  int m = 0;
  int u(int i) const { return 2 + 3 * ((i % m + m) % m); }
  int v(int i) const { return 2 + 3 * ((i % m + m) % m) + 1; }
  int w(int i) const { return 2 + 3 * ((i % m + m) % m) + 2; }

  static AltComplexFrame make(int m) {
    AltComplexFrame f;
    f.m = m;
    f.c.n = m;
    f.c.vertex_names = {"N", "S"};
    for (int i = 0; i < m; ++i) {
      f.c.vertex_names.push_back("u" + std::to_string(i));
      f.c.vertex_names.push_back("v" + std::to_string(i));
      f.c.vertex_names.push_back("w" + std::to_string(i));
    }
    return f;
  }
};

}  // namespace detail

/// Face-pairing ball for G_m(x_0^{-1} x_1^2 x_2^{-1} x_1), the m-generator
/// form of the even-index Fibonacci groups, m >= 3. Per generator x_i the
/// five edges are a_i: N->v_{i-1}, b_i: u_i->S, c_i: w_i->v_i,
/// d_i: w_{i-1}->w_i, e_i: u_{i-1}->w_{i-1}, named by their endpoints.
inline FacePairingComplex build_alt_fibonacci_polyhedron(int m) {
  if (m < 3) throw std::invalid_argument("build_alt_fibonacci_polyhedron needs m >= 3");
  auto f = detail::AltComplexFrame::make(m);
  FacePairingComplex& c = f.c;
  auto nm = [&](int i) { return std::to_string((i % m + m) % m); };

  // edge ids per generator block: a=5i, b=5i+1, c=5i+2, d=5i+3, e=5i+4
  for (int i = 0; i < m; ++i) {
    c.edges.push_back({f.N, f.v(i - 1), i, "[N,v" + nm(i - 1) + "]"});
    c.edges.push_back({f.u(i), f.S, i, "[u" + nm(i) + ",S]"});
    c.edges.push_back({f.w(i), f.v(i), i, "[w" + nm(i) + ",v" + nm(i) + "]"});
    c.edges.push_back({f.w(i - 1), f.w(i), i, "[w" + nm(i - 1) + ",w" + nm(i) + "]"});
    c.edges.push_back({f.u(i - 1), f.w(i - 1), i, "[u" + nm(i - 1) + ",w" + nm(i - 1) + "]"});
  }
  auto a = [&](int i) { return 5 * ((i % m + m) % m); };
  auto b = [&](int i) { return 5 * ((i % m + m) % m) + 1; };
  auto cc = [&](int i) { return 5 * ((i % m + m) % m) + 2; };
  auto d = [&](int i) { return 5 * ((i % m + m) % m) + 3; };
  auto e = [&](int i) { return 5 * ((i % m + m) % m) + 4; };

  for (int i = 0; i < m; ++i) {
    FacePairingComplex::FacePair p;
    p.plus = {{b(i), false}, {e(i + 1), true}, {d(i + 1), true}, {e(i + 2), false}, {b(i + 1), true}};
    p.minus = {{cc(i), false}, {d(i + 1), true}, {cc(i + 1), true}, {a(i + 2), false}, {a(i + 1), true}};
    c.pairs.push_back(p);
    Word r;
    r.letters = {Letter{i, -1}, Letter{(i + 1) % m, 1}, Letter{(i + 1) % m, 1},
                 Letter{(i + 2) % m, -1}, Letter{(i + 1) % m, 1}};
    c.relators.push_back(r);
  }
  return c;
}

/// Face-pairing ball for G_m(x_0 x_1^2 x_2 x_1^{-1}), the m-generator form of
/// the even-index Sieradski groups, m >= 3. Per generator x_i the five edges
/// are A_i: N->u_{i+1}, B_i: v_{i-1}->S, C_i: w_{i-1}->u_i, D_i: u_i->v_i,
/// E_i: v_i->w_i, named by their endpoints.
inline FacePairingComplex build_alt_sieradski_polyhedron(int m) {
  if (m < 3) throw std::invalid_argument("build_alt_sieradski_polyhedron needs m >= 3");
  auto f = detail::AltComplexFrame::make(m);
  FacePairingComplex& c = f.c;
  auto nm = [&](int i) { return std::to_string((i % m + m) % m); };

  // edge ids per generator block: A=5i, B=5i+1, C=5i+2, D=5i+3, E=5i+4
  for (int i = 0; i < m; ++i) {
    c.edges.push_back({f.N, f.u(i + 1), i, "[N,u" + nm(i + 1) + "]"});
    c.edges.push_back({f.v(i - 1), f.S, i, "[v" + nm(i - 1) + ",S]"});
    c.edges.push_back({f.w(i - 1), f.u(i), i, "[w" + nm(i - 1) + ",u" + nm(i) + "]"});
    c.edges.push_back({f.u(i), f.v(i), i, "[u" + nm(i) + ",v" + nm(i) + "]"});
    c.edges.push_back({f.v(i), f.w(i), i, "[v" + nm(i) + ",w" + nm(i) + "]"});
  }
  auto A = [&](int i) { return 5 * ((i % m + m) % m); };
  auto B = [&](int i) { return 5 * ((i % m + m) % m) + 1; };
  auto C = [&](int i) { return 5 * ((i % m + m) % m) + 2; };
  auto D = [&](int i) { return 5 * ((i % m + m) % m) + 3; };
  auto E = [&](int i) { return 5 * ((i % m + m) % m) + 4; };

  for (int i = 0; i < m; ++i) {
    FacePairingComplex::FacePair p;
    p.plus = {{E(i), true}, {C(i + 1), true}, {D(i + 1), true}, {B(i + 2), true}, {B(i + 1), false}};
    p.minus = {{A(i), true}, {D(i + 1), true}, {E(i + 1), true}, {C(i + 2), true}, {A(i + 1), false}};
    c.pairs.push_back(p);
    Word r;
    r.letters = {Letter{i, 1}, Letter{(i + 1) % m, 1}, Letter{(i + 1) % m, 1},
                 Letter{(i + 2) % m, 1}, Letter{(i + 1) % m, -1}};
    c.relators.push_back(r);
  }
  return c;
}

}  // namespace fibtype

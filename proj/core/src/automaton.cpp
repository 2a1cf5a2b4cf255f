#include "penney/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "penney/winprob.hpp"

namespace penney {

namespace {

// Longest suffix of q that is a prefix of u (possibly empty). q is at
// most one digit longer than the current tracked prefix, |q| <= |u|.
Word longest_overlap(Word q, Word u) {
  for (int r = std::min(q.length(), u.length()); r >= 1; --r) {
    if (q.suffix(r) == u.prefix(r)) return u.prefix(r);
  }
  return Word{};
}

PrefixPairAutomaton build_impl(Word v, Word w, bool single) {
  PrefixPairAutomaton g;
  g.v = v;
  g.w = w;
  g.single_word = single;

  std::map<std::pair<Word, Word>, int> index;
  auto intern = [&](Word vp, Word wp, PrefixPairAutomaton::Kind kind) {
    auto [it, fresh] = index.try_emplace({vp, wp}, static_cast<int>(g.vertices.size()));
    if (fresh) g.vertices.push_back({vp, wp, kind, {-1, -1}});
    return it->second;
  };

  std::deque<int> queue;
  queue.push_back(intern(Word{}, Word{}, PrefixPairAutomaton::Kind::Transient));
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int a : {0, 1}) {
      Word vp = g.vertices[cur].v_part.append(a);
      Word wp = single ? Word{} : g.vertices[cur].w_part.append(a);
      int next;
      if (vp == v) {
        next = intern(vp, wp, PrefixPairAutomaton::Kind::AbsorbV);
      } else if (!single && wp == w) {
        next = intern(vp, wp, PrefixPairAutomaton::Kind::AbsorbW);
      } else {
        Word nv = longest_overlap(vp, v);
        Word nw = single ? Word{} : longest_overlap(wp, w);
        bool existed = index.count({nv, nw}) > 0;
        next = intern(nv, nw, PrefixPairAutomaton::Kind::Transient);
        if (!existed) queue.push_back(next);
      }
      g.vertices[cur].succ[a] = next;
    }
  }
  // Completeness on non-absorbing vertices is a build-time invariant.
  for (const auto& vx : g.vertices) {
    if (vx.kind == PrefixPairAutomaton::Kind::Transient) {
      if (vx.succ[0] < 0 || vx.succ[1] < 0 || vx.succ[0] == vx.succ[1])
        throw std::logic_error("automaton transient vertex not complete");
    } else {
      if (vx.succ[0] >= 0 || vx.succ[1] >= 0)
        throw std::logic_error("automaton absorbing vertex has out-edges");
    }
  }
  return g;
}

}  // namespace

PrefixPairAutomaton build(Word v, Word w) {
  require_race_pair(v, w);
  return build_impl(v, w, false);
}

PrefixPairAutomaton build_single(Word v) {
  if (v.empty()) throw domain_error("empty word");
  return build_impl(v, Word{}, true);
}

namespace {

// Solve the absorption system by fraction-free (Bareiss) elimination.
// Unknowns are the transient vertices; rhs_one adds the constant 1 per
// step (hitting time), rhs_absorb_v pays 1 on absorption into v.
std::vector<Rat> solve_transient(const PrefixPairAutomaton& g, const Rat& q,
                                 bool rhs_one, bool rhs_absorb_v) {
  const auto& vs = g.vertices;
  int n = static_cast<int>(vs.size());
  std::vector<int> id(n, -1);
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (vs[i].kind == PrefixPairAutomaton::Kind::Transient) id[i] = m++;

  Int alpha = numerator(q), beta = denominator(q);
  // Equations scaled by beta: beta*x_i - alpha*x_{s1} - (beta-alpha)*x_{s0} = r_i
  std::vector<std::vector<Int>> a(m, std::vector<Int>(m + 1, Int{0}));
  for (int i = 0; i < n; ++i) {
    if (id[i] < 0) continue;
    int row = id[i];
    a[row][row] += beta;
    const Int step[2] = {beta - alpha, alpha};
    for (int lbl : {0, 1}) {
      int t = vs[i].succ[lbl];
      if (id[t] >= 0) {
        a[row][id[t]] -= step[lbl];
      } else if (rhs_absorb_v && vs[t].kind == PrefixPairAutomaton::Kind::AbsorbV) {
        a[row][m] += step[lbl];
      }
    }
    if (rhs_one) a[row][m] += beta;
  }

  // Bareiss forward elimination with partial (first-nonzero) pivoting.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  Int prev = 1;
  for (int k = 0; k < m; ++k) {
    int piv = -1;
    for (int r = k; r < m; ++r)
      if (a[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular absorption system");
    std::swap(a[k], a[piv]);
    for (int r = k + 1; r < m; ++r) {
      for (int c = k + 1; c <= m; ++c)
        a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  // Back substitution in exact rationals.
  std::vector<Rat> x(m);
  for (int i = m - 1; i >= 0; --i) {
    Rat s = Rat(a[i][m]);
    for (int j = i + 1; j < m; ++j) s -= Rat(a[i][j]) * x[j];
    x[i] = s / Rat(a[i][i]);
  }
  // Map back to vertex order (start vertex is transient index of 0).
  std::vector<Rat> out(n);
  for (int i = 0; i < n; ++i)
    if (id[i] >= 0) out[i] = x[id[i]];
  return out;
}

}  // namespace

Rat absorption_win(const PrefixPairAutomaton& g, const Rat& q) {
  if (g.single_word) throw domain_error("win probability needs a two-word automaton");
  auto x = solve_transient(g, q, /*rhs_one=*/false, /*rhs_absorb_v=*/true);
  return x[0];
}

Rat expected_absorption_time(const PrefixPairAutomaton& g, const Rat& q) {
  auto x = solve_transient(g, q, /*rhs_one=*/true, /*rhs_absorb_v=*/false);
  return x[0];
}

std::vector<std::pair<Word, OmegaClass>> enumerate_omega(Word v, Word w,
                                                         int max_len) {
  if (max_len > 30) throw domain_error("enumerate_omega length bound exceeds 30");
  PrefixPairAutomaton g = build(v, w);
  std::vector<std::pair<Word, OmegaClass>> out;
  // Iterative DFS over (vertex, word read so far).
  struct Frame {
    int vertex;
    Word word;
  };
  std::vector<Frame> stack{{0, Word{}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const auto& vx = g.vertices[f.vertex];
    if (vx.kind != PrefixPairAutomaton::Kind::Transient) {
      out.emplace_back(f.word, vx.kind == PrefixPairAutomaton::Kind::AbsorbV
                                   ? OmegaClass::InOmegaV
                                   : OmegaClass::InOmegaW);
      continue;
    }
    if (f.word.length() >= max_len) continue;
    for (int a : {1, 0}) stack.push_back({vx.succ[a], f.word.append(a)});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.length() != y.first.length())
      return x.first.length() < y.first.length();
    return lex_less(x.first, y.first);
  });
  return out;
}

ProfileCounts profile_counts(Word v, Word w, int max_len) {
  if (max_len > 64) throw domain_error("profile_counts length bound exceeds 64");
  PrefixPairAutomaton g = build(v, w);
  int n = static_cast<int>(g.vertices.size());
  ProfileCounts pc;
  // layer[vertex][ones] = number of length-l paths from start, l implicit
  std::vector<std::vector<Int>> layer(n), next;
  for (auto& row : layer) row.assign(1, Int{0});
  layer[0][0] = 1;
  for (int l = 1; l <= max_len; ++l) {
    next.assign(n, {});
    for (auto& row : next) row.assign(l + 1, Int{0});
    for (int i = 0; i < n; ++i) {
      const auto& vx = g.vertices[i];
      if (vx.kind != PrefixPairAutomaton::Kind::Transient) continue;
      for (int k = 0; k < static_cast<int>(layer[i].size()); ++k) {
        if (layer[i][k] == 0) continue;
        next[vx.succ[0]][k] += layer[i][k];
        next[vx.succ[1]][k + 1] += layer[i][k];
      }
    }
    for (int i = 0; i < n; ++i) {
      const auto& vx = g.vertices[i];
      if (vx.kind == PrefixPairAutomaton::Kind::Transient) continue;
      auto& table = vx.kind == PrefixPairAutomaton::Kind::AbsorbV ? pc.for_v
                                                                  : pc.for_w;
      for (int k = 0; k <= l; ++k) {
        if (next[i][k] != 0) table[{l - k, k}] += next[i][k];
        next[i][k] = 0;  // absorbed mass does not propagate
      }
    }
    layer.swap(next);
  }
  return pc;
}

std::string to_dot(const PrefixPairAutomaton& g) {
  auto label = [&](const PrefixPairAutomaton::Vertex& vx) {
    if (g.single_word) return "(" + vx.v_part.str() + ")";
    return "(" + vx.v_part.str() + "," + vx.w_part.str() + ")";
  };
  std::ostringstream os;
  os << "digraph race {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& vx = g.vertices[i];
    bool absorbing = vx.kind != PrefixPairAutomaton::Kind::Transient;
    os << "  n" << i << " [label=\"" << label(vx) << "\" shape="
       << (absorbing ? "doublecircle" : "circle") << "];\n";
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& vx = g.vertices[i];
    if (vx.kind != PrefixPairAutomaton::Kind::Transient) continue;
    for (int a : {0, 1})
      os << "  n" << i << " -> n" << vx.succ[a] << " [label=\"" << a << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace penney

#include "polycf/witness/gc_pipeline.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace polycf {

QMatrix GcPipelineState::power_of(std::size_t j) const { return power(M, j); }

QVec GcPipelineState::last_column(std::size_t j) const { return power_of(j).column(s() - 1); }

std::string GcPipelineState::to_text() const {
  std::ostringstream out;
  out << "spec " << to_string(input);
  if (reversed) out << " (reversed to " << to_string(spec) << ")";
  out << "\np " << p.get_str() << " n " << n << " N " << N << "\n";
  out << "types";
  for (int t : types) out << " " << t;
  out << "\nk\tiota_k\tell_k\tlambda_k\tbound_ks\n";
  for (std::size_t k = 1; k <= depth; ++k) {
    out << k << "\t" << iota[k - 1] << "\t" << (ell.count(k) ? ell.at(k).get_str() : "-") << "\t"
        << lambda[k - 1].get_str() << "\t" << (iota[k - 1] <= k * s() ? "ok" : "violated") << "\n";
  }
  out << "n_seq";
  for (auto v : n_seq) out << " " << v;
  out << "\n";
  return out.str();
}

GcPipelineState gc_pipeline(const GcSpec& spec, std::size_t depth) {
  validate(spec);
  if (is_polycyclic_case(spec)) throw NotProper("|c0| = |cs| = 1: G(" + to_string(spec) + ") is polycyclic");
  if (depth == 0) throw PreconditionViolation("depth must be at least 1");
  GcPipelineState st;
  st.input = spec;
  st.spec = spec;
  if (abs(spec.c.back()) == 1) {
    st.spec = reverse_spec(spec);
    st.reversed = true;
  }
  st.depth = depth;
  st.M = gc_matrix(st.spec);
  const std::size_t s = st.s();

  // p divides the denominator of some a_j; take the smallest such prime.
  std::optional<Int> p;
  for (std::size_t i = 0; i < s; ++i) {
    const Int den = st.M(i, s - 1).get_den();
    if (den == 1) continue;
    Int q = smallest_prime_factor(den);
    if (!p || q < *p) p = q;
  }
  if (!p) throw PreconditionViolation("A(c) is integral");
  st.p = *p;
  PadicCtx ctx(st.p);
  for (std::size_t i = 0; i < s; ++i) {
    auto vb = ctx.vbar(st.M(i, s - 1));
    if (vb) st.n = std::max(st.n, *vb);
  }
  for (std::size_t i = 0; i < s; ++i)
    if (ctx.vbar(st.M(i, s - 1)) == std::optional<long>(st.n)) st.N = i + 1;

  // Powers up to depth * s cover every iota_k.
  const std::size_t top = depth * s;
  std::vector<QVec> cols{QVec()};
  QMatrix cur = QMatrix::identity(s);
  for (std::size_t j = 1; j <= top; ++j) {
    cur = cur * st.M;
    cols.push_back(cur.column(s - 1));
    Int l = 1;
    for (const auto& x : cols.back()) l = lcm_int(l, x.get_den());
    st.ell[j] = l;
  }
  for (std::size_t k = 1; k <= depth; ++k) {
    std::size_t found = 0;
    for (std::size_t j = 1; j <= top; ++j) {
      if (ctx.vbar_at_least(cols[j][st.N - 1], static_cast<long>(k))) {
        found = j;
        break;
      }
    }
    if (found == 0) throw Error("no power up to " + std::to_string(top) + " reaches valuation " + std::to_string(k));
    st.iota.push_back(found);
    st.lambda.push_back(st.ell.at(found));
  }

  // Bucket levels by the sign pattern of the last column of M^iota_k; keep
  // the largest bucket (earliest first level on ties).
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (std::size_t k = 1; k <= depth; ++k) {
    std::vector<int> pattern;
    for (const auto& x : cols[st.iota[k - 1]]) pattern.push_back(x >= 0 ? 1 : 2);
    buckets[pattern].push_back(k);
  }
  const std::vector<std::size_t>* best = nullptr;
  const std::vector<int>* best_pattern = nullptr;
  for (const auto& [pattern, levels] : buckets) {
    if (!best || levels.size() > best->size() || (levels.size() == best->size() && levels[0] < (*best)[0])) {
      best = &levels;
      best_pattern = &pattern;
    }
  }
  st.types = *best_pattern;
  st.n_seq = *best;
  return st;
}

Word gc_lprime_word(const GcPipelineState& state, const Vec0& t) {
  const std::size_t s = state.s();
  if (t.size() != s + 3) throw DimensionMismatch(s + 3, t.size());
  auto count = [](const Int& v) { return static_cast<std::size_t>(v.get_ui()); };
  const std::string xs = "x" + std::to_string(s);
  Word w;
  w.insert(w.end(), count(t[0]), "Y");
  w.insert(w.end(), count(t[1]), xs);
  w.insert(w.end(), count(t[2]), "y");
  for (std::size_t i = 0; i < s; ++i) {
    const std::string x = "x" + std::to_string(i + 1);
    w.insert(w.end(), count(t[3 + i]), state.types[i] == 1 ? invert_letter(x) : x);
  }
  return w;
}

GcWitnessLanguage gc_witness_language(const GcPipelineState& state, std::size_t level, const Int& cap) {
  if (level == 0 || level > state.depth) throw PreconditionViolation("level outside the computed depth");
  const std::size_t s = state.s();
  auto group = std::make_shared<GcGroup>(state.spec);
  auto shared = std::make_shared<GcPipelineState>(state);

  // Membership of the tau-ordered tuple (k1, k2; lambda, v).
  auto member = [group, shared](const Vec0& tv) {
    if (tv.size() != shared->s() + 3 || tv[2] == 0) return false;
    std::vector<Int> phi(tv.entries());
    std::swap(phi[1], phi[2]);
    return group->is_trivial(gc_lprime_word(*shared, Vec0(phi)));
  };

  // For fixed (k1, k2) and lambda the v-block is forced; confirm each
  // candidate with the oracle.
  auto enumerate = [group, shared, member, s](const Vec0& a, const Int& cap_b) {
    std::vector<Vec0> out;
    if (a.size() != 2 || a[0] != a[1]) return out;
    const auto k = static_cast<std::size_t>(a[0].get_ui());
    const Word xs{"x" + std::to_string(s)};
    const GcElt head = group->eval(Word(k, "Y"));
    const GcElt step = group->eval(xs);
    const GcElt tail = group->eval(Word(k, "y"));
    GcElt acc = head;
    for (Int lambda = 1; lambda <= cap_b; ++lambda) {
      acc = group->multiply(acc, step);
      const GcElt e = group->multiply(acc, tail);
      std::vector<Int> b{lambda};
      bool ok = true;
      for (std::size_t i = 0; i < s && ok; ++i) {
        const int eps = shared->types[i] == 1 ? -1 : 1;
        const Rat need = -e.vec[i] / eps;
        ok = is_integer(need) && need >= 0 && need.get_num() <= cap_b;
        if (ok) b.push_back(need.get_num());
      }
      if (!ok) continue;
      Vec0 bv(b);
      if (member(a.concat(bv))) out.push_back(bv);
    }
    return out;
  };

  GcWitnessLanguage out;
  out.level = level;
  out.power = state.iota[level - 1];
  const Vec0 a{static_cast<long>(out.power), static_cast<long>(out.power)};
  for (const auto& b : enumerate(a, cap)) {
    Vec0 tv = a.concat(b);
    out.tau_phi.push_back(tv);
    std::vector<Int> phi(tv.entries());
    std::swap(phi[1], phi[2]);
    out.phi.emplace_back(phi);
  }

  WitnessFamily& f = out.family;
  f.r = 2;
  f.s = s + 1;
  const Int p = state.p;
  f.f = [p](std::size_t t) { return pow_int(p, static_cast<unsigned long>(t)); };
  // a_t = (iota_{n_j}, iota_{n_j}) for the first n_j >= t in the sequence
  // with 2 t iota_{n_j} < lambda_{n_j}.
  f.a_of = [shared](std::size_t t) {
    for (auto nk : shared->n_seq) {
      const std::size_t io = shared->iota[nk - 1];
      if (nk >= t && Int(2 * t * io) < shared->lambda[nk - 1])
        return Vec0{static_cast<long>(io), static_cast<long>(io)};
    }
    throw SearchLimitExceeded("pipeline depth too small for level " + std::to_string(t));
  };
  f.member = member;
  f.enumerate_b = enumerate;
  f.description = "Gc witness family for c = " + to_string(state.input);
  return out;
}

}  // namespace polycf

#include "polycf/witness/witness.hpp"

#include <algorithm>
#include <sstream>

#include "polycf/error.hpp"

namespace polycf {

namespace {

bool simple(const Vec0& v, std::size_t r) {
  for (std::size_t i = 0; i < r; ++i)
    if (v[i] != 0) return false;
  return true;
}

Int max_b(const Vec0& v, std::size_t r) {
  Int m = 0;
  for (std::size_t j = r; j < v.size(); ++j) m = std::max(m, v[j]);
  return m;
}

}  // namespace

ComplexPeriodConstant complex_period_constant(const SemilinearSet& S, std::size_t r, std::size_t s) {
  if (r == 0 || s == 0) throw PreconditionViolation("split needs r, s >= 1");
  if (S.dim_ambient() != r + s) throw DimensionMismatch(r + s, S.dim_ambient());
  ComplexPeriodConstant out{1, 0, 0};
  for (const auto& l : S.components()) {
    for (const auto& p : l.periods()) {
      if (simple(p, r)) continue;
      const Int sig = p.slice(0, r).sigma();
      Int t = max_b(p, r) / sig + 1;
      out.t = std::max(out.t, t);
    }
    // The b-part of the constant: b(j) = c_b(j) + (periods) < c_b(j) + t sigma(a).
    out.q = std::max(out.q, max_b(l.constant(), r));
  }
  out.C = 2 * std::max(out.t, out.q);
  return out;
}

std::function<std::vector<Vec0>(const Vec0&, const Int&)> box_enumerator(std::function<bool(const Vec0&)> member,
                                                                         std::size_t s) {
  return [member = std::move(member), s](const Vec0& a, const Int& cap) {
    std::vector<Vec0> out;
    std::vector<Int> b(s, 0);
    while (true) {
      Vec0 point = a.concat(Vec0(b));
      if (member(point)) out.push_back(Vec0(b));
      std::size_t i = 0;
      while (i < s && b[i] == cap) b[i++] = 0;
      if (i == s) break;
      ++b[i];
    }
    return out;
  };
}

bool WitnessReport::passed() const {
  if (!f_grows_on_horizon) return false;
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelReport& l) { return l.exists == true && l.large && l.separated; });
}

std::string WitnessReport::to_text() const {
  std::ostringstream out;
  out << "cap " << cap.get_str() << "\n";
  out << "k\ta\tf(k)\tfound\t(i)\t(ii)\t(iii)\n";
  for (const auto& l : levels) {
    out << l.k << "\t" << to_string(l.a) << "\t" << l.f.get_str() << "\t" << l.found << "\t"
        << (l.exists ? (*l.exists ? "pass" : "fail") : "indeterminate") << "\t" << (l.large ? "pass" : "fail")
        << "\t" << (l.separated ? "pass" : "fail");
    if (!l.note.empty()) out << "\t" << l.note;
    out << "\n";
  }
  out << "f grows on sampled horizon: " << (f_grows_on_horizon ? "yes" : "no") << "\n";
  out << "result: " << (passed() ? "pass" : "fail") << " (bounded evidence)\n";
  return out.str();
}

WitnessReport check_witness_family(const WitnessFamily& w, const std::vector<std::size_t>& levels, const Int& cap) {
  WitnessReport rep;
  rep.cap = cap;
  Int best_before;
  bool have_before = false;
  for (std::size_t idx = 0; idx < levels.size(); ++idx) {
    LevelReport l;
    l.k = levels[idx];
    l.a = w.a_of(l.k);
    l.f = w.f(l.k);
    if (l.a.size() != w.r) throw DimensionMismatch(w.r, l.a.size());
    if (idx + 1 < levels.size()) {
      best_before = have_before ? std::max(best_before, l.f) : l.f;
      have_before = true;
    } else {
      rep.f_grows_on_horizon = have_before && l.f > best_before;
    }
    auto bs = w.enumerate_b(l.a, cap);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    l.found = bs.size();
    if (!bs.empty()) l.exists = true;
    if (l.a.is_zero()) {
      l.large = false;
      l.note = "a is zero";
    }
    const Int bound = Int(l.k) * l.a.sigma();
    for (const auto& b : bs) {
      bool any = false;
      for (std::size_t j = 0; j < b.size(); ++j) any = any || b[j] >= bound;
      if (!any) {
        l.large = false;
        l.note = "small b " + to_string(b);
        break;
      }
    }
    for (std::size_t i = 0; i < bs.size() && l.separated; ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        bool far = false;
        for (std::size_t c = 0; c < bs[i].size(); ++c) far = far || abs(bs[i][c] - bs[j][c]) >= l.f;
        if (!far) {
          l.separated = false;
          l.note = "close pair " + to_string(bs[i]) + " " + to_string(bs[j]);
          break;
        }
      }
    }
    rep.levels.push_back(std::move(l));
  }
  return rep;
}

std::string to_string(RefutationCertificate::Kind k) {
  switch (k) {
    case RefutationCertificate::Kind::InLNotInS:
      return "in-L-not-in-S";
    case RefutationCertificate::Kind::InSNotInL:
      return "in-S-not-in-L";
    case RefutationCertificate::Kind::Indeterminate:
      break;
  }
  return "indeterminate";
}

RefutationCertificate refute_presentation(const SemilinearSet& S, const WitnessFamily& w, const Int& cap,
                                          std::size_t max_level) {
  RefutationCertificate cert;
  cert.C = complex_period_constant(S, w.r, w.s).C;
  Int max_simple = 0;
  for (const auto& l : S.components())
    for (const auto& p : l.periods())
      if (simple(p, w.r)) max_simple = std::max(max_simple, p.max_entry());
  const auto first = static_cast<std::size_t>(cert.C.get_ui()) + 1;
  std::optional<std::size_t> level;
  for (std::size_t k = first; k < first + max_level; ++k) {
    if (w.f(k) > max_simple) {
      level = k;
      break;
    }
  }
  if (!level) {
    cert.note = "no level with f(k) above the simple periods";
    return cert;
  }
  cert.level = *level;
  const Vec0 a = w.a_of(*level);
  auto bs = w.enumerate_b(a, cap);
  std::sort(bs.begin(), bs.end());
  if (bs.empty()) {
    cert.note = "no b below the cap at level " + std::to_string(*level);
    return cert;
  }
  for (const auto& b : bs) {
    Vec0 point = a.concat(b);
    if (!member(point, S)) {
      cert.kind = RefutationCertificate::Kind::InLNotInS;
      cert.point = point;
      return cert;
    }
  }
  for (const auto& b : bs) {
    Vec0 point = a.concat(b);
    auto m = member_certificate(point, S);
    const auto& comp = S.components()[m->component];
    for (std::size_t i = 0; i < comp.periods().size(); ++i) {
      const auto& p = comp.periods()[i];
      if (m->alpha[i] == 0 || !simple(p, w.r) || p.is_zero()) continue;
      Vec0 moved = point + p;
      if (w.member(moved)) continue;
      cert.kind = RefutationCertificate::Kind::InSNotInL;
      cert.point = moved;
      cert.s_membership = member_certificate(moved, S);
      cert.note = "simple period " + to_string(p) + " shifts " + to_string(point);
      return cert;
    }
  }
  cert.note = "every witness is in S and no simple period leaves L";
  return cert;
}

bool verify_refutation(const SemilinearSet& S, const WitnessFamily& w, const RefutationCertificate& cert) {
  switch (cert.kind) {
    case RefutationCertificate::Kind::InLNotInS:
      return w.member(cert.point) && !member(cert.point, S);
    case RefutationCertificate::Kind::InSNotInL:
      return cert.s_membership && verify_certificate(cert.point, S, *cert.s_membership) && !w.member(cert.point);
    case RefutationCertificate::Kind::Indeterminate:
      break;
  }
  return false;
}

}  // namespace polycf

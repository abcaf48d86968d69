#include "polycf/automata/recognizer.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace polycf {

CompiledPda::CompiledPda(const Npda& a) : pda_(a), cnf_(to_cnf(pda_to_cfg(a))) {}

std::vector<std::size_t> CompiledPda::encode(const Word& w) const {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back(pda_.inputs().id(s));
  return out;
}

bool CompiledPda::accepts(const Word& w) const { return cnf_accepts(cnf_, encode(w)); }

bool pda_accepts(const Npda& a, const Word& w) { return CompiledPda(a).accepts(w); }

// --- recognizers ------------------------------------------------------------

namespace {

std::vector<Symbol> sorted_alphabet(const Npda& a) {
  auto v = a.inputs().names();
  std::sort(v.begin(), v.end());
  return v;
}

std::string unique_name(const SymbolTable& t, std::string base) {
  while (t.contains(base)) base += "'";
  return base;
}

}  // namespace

KcfRecognizer::KcfRecognizer(std::vector<Npda> pdas) : pdas_(std::move(pdas)) {
  if (pdas_.empty()) throw PreconditionViolation("a recognizer needs at least one PDA");
  alphabet_ = sorted_alphabet(pdas_.front());
  for (const auto& a : pdas_)
    if (sorted_alphabet(a) != alphabet_) throw PreconditionViolation("alphabet mismatch between components");
}

bool kcf_accepts(const KcfRecognizer& r, const Word& w) {
  for (const auto& a : r.pdas())
    if (!pda_accepts(a, w)) return false;
  return true;
}

KcfMatcher::KcfMatcher(const KcfRecognizer& r) : alphabet_(r.alphabet()) {
  for (const auto& a : r.pdas()) {
    parts_.push_back(std::make_unique<CompiledPda>(a));
    std::vector<std::size_t> map;
    for (const auto& s : alphabet_) map.push_back(a.inputs().id(s));
    local_.push_back(std::move(map));
  }
}

std::size_t KcfMatcher::symbol(const Symbol& s) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
  if (it == alphabet_.end() || *it != s) throw UnknownSymbol("symbol '" + s + "' not in alphabet");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

bool KcfMatcher::accepts(const Word& w) const {
  for (const auto& s : w) symbol(s);
  for (const auto& p : parts_)
    if (!p->accepts(w)) return false;
  return true;
}

KcfMatcher::Cursor KcfMatcher::cursor() const {
  Cursor c;
  c.m_ = this;
  for (const auto& p : parts_) c.charts_.emplace_back(p->grammar());
  return c;
}

void KcfMatcher::Cursor::push(std::size_t sym) {
  for (std::size_t i = 0; i < charts_.size(); ++i) charts_[i].push(m_->local_[i].at(sym));
  ++length_;
}

void KcfMatcher::Cursor::pop() {
  if (length_ == 0) return;
  for (auto& c : charts_) c.pop();
  --length_;
}

bool KcfMatcher::Cursor::accepts() const {
  return std::all_of(charts_.begin(), charts_.end(), [](const Chart& c) { return c.accepts(); });
}

bool KcfMatcher::Cursor::viable() const {
  return std::all_of(charts_.begin(), charts_.end(), [](const Chart& c) { return c.viable(); });
}

// --- constructions ----------------------------------------------------------

Npda guard_bottom(const Npda& a) {
  Npda g = a;
  const auto init = g.states().add(unique_name(a.states(), "^init"));
  const auto fin = g.states().add(unique_name(g.states(), "^final"));
  const auto bot = g.stack().add(unique_name(a.stack(), "^bot"));
  for (std::size_t q = 0; q < a.states().size(); ++q) {
    if (!a.accepting(q)) continue;
    g.set_accepting(q, false);
    g.add_transition({q, Npda::kEps, bot, fin, {}});
  }
  g.add_transition({init, Npda::kEps, bot, a.start_state(), {a.start_stack(), bot}});
  g.set_start(init, bot);
  g.set_accepting(fin);
  return g;
}

namespace {

Npda ignore_letters(const Npda& a, const std::vector<Symbol>& foreign) {
  Npda g = guard_bottom(a);
  std::vector<std::size_t> ids;
  for (const auto& x : foreign) ids.push_back(g.inputs().add(x));
  for (std::size_t q = 0; q < g.states().size(); ++q)
    for (std::size_t s = 0; s < g.stack().size(); ++s)
      for (auto x : ids) g.add_transition({q, x, s, q, {s}});
  return g;
}

}  // namespace

KcfRecognizer direct_product(const KcfRecognizer& r1, const KcfRecognizer& r2) {
  for (const auto& s : r1.alphabet())
    if (std::binary_search(r2.alphabet().begin(), r2.alphabet().end(), s))
      throw PreconditionViolation("alphabet overlap on '" + s + "'");
  std::vector<Npda> out;
  for (const auto& a : r1.pdas()) out.push_back(ignore_letters(a, r2.alphabet()));
  for (const auto& a : r2.pdas()) out.push_back(ignore_letters(a, r1.alphabet()));
  return KcfRecognizer(std::move(out));
}

KcfRecognizer inverse_homomorphism(const KcfRecognizer& r, const std::map<Symbol, Word>& h) {
  for (const auto& [g, img] : h)
    for (const auto& s : img)
      if (!std::binary_search(r.alphabet().begin(), r.alphabet().end(), s))
        throw UnknownSymbol("image of '" + g + "' uses '" + s + "', not in the alphabet");
  std::vector<Npda> out;
  for (const auto& orig : r.pdas()) {
    const Npda g = guard_bottom(orig);
    Npda b;
    for (const auto& q : g.states().names()) b.states().add(q);
    for (const auto& s : g.stack().names()) b.stack().add(s);
    for (const auto& [letter, img] : h) b.inputs().add(letter);
    b.set_start(g.start_state(), g.start_stack());
    for (std::size_t q = 0; q < g.states().size(); ++q)
      if (g.accepting(q)) b.set_accepting(q);

    std::vector<std::vector<const Npda::Transition*>> from(g.states().size());
    for (const auto& t : g.transitions()) {
      from[t.from].push_back(&t);
      if (t.input == Npda::kEps) b.add_transition(t);
    }
    const std::size_t nstack = g.stack().size();
    for (const auto& [letter, img] : h) {
      const auto gid = b.inputs().id(letter);
      std::vector<std::size_t> image;
      for (const auto& s : img) image.push_back(g.inputs().id(s));
      // States (p, letter, i): i letters of the image simulated so far.
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> mid;
      std::deque<std::pair<std::size_t, std::size_t>> todo;
      auto node = [&](std::size_t p, std::size_t i) {
        auto it = mid.find({p, i});
        if (it != mid.end()) return it->second;
        auto id = b.states().add(g.states().name(p) + "|" + letter + "|" + std::to_string(i));
        mid.emplace(std::make_pair(p, i), id);
        todo.emplace_back(p, i);
        return id;
      };
      for (std::size_t q = 0; q < g.states().size(); ++q) {
        if (from[q].empty() && !g.accepting(q)) continue;
        auto enter = node(q, 0);
        for (std::size_t s = 0; s < nstack; ++s) b.add_transition({q, gid, s, enter, {s}});
      }
      while (!todo.empty()) {
        auto [p, i] = todo.front();
        todo.pop_front();
        const auto here = mid.at({p, i});
        if (i == image.size())
          for (std::size_t s = 0; s < nstack; ++s) b.add_transition({here, Npda::kEps, s, p, {s}});
        for (const auto* t : from[p]) {
          if (t->input == Npda::kEps) {
            b.add_transition({here, Npda::kEps, t->top, node(t->to, i), t->push});
          } else if (i < image.size() && t->input == image[i]) {
            b.add_transition({here, Npda::kEps, t->top, node(t->to, i + 1), t->push});
          }
        }
      }
    }
    b.canonicalize();
    out.push_back(std::move(b));
  }
  return KcfRecognizer(std::move(out));
}

Npda pda_times_dfa(const Npda& a, const Dfa& d) {
  Npda p;
  for (const auto& s : a.inputs().names()) p.inputs().add(s);
  for (const auto& s : a.stack().names()) p.stack().add(s);
  std::vector<std::size_t> letter(a.inputs().size());
  for (std::size_t x = 0; x < a.inputs().size(); ++x) letter[x] = d.inputs().id(a.inputs().name(x));
  std::vector<std::vector<const Npda::Transition*>> from(a.states().size());
  for (const auto& t : a.transitions()) from[t.from].push_back(&t);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::deque<std::pair<std::size_t, std::size_t>> todo;
  auto node = [&](std::size_t q, std::size_t s) {
    auto it = ids.find({q, s});
    if (it != ids.end()) return it->second;
    auto id = p.states().add(a.states().name(q) + "/" + d.states().name(s));
    ids.emplace(std::make_pair(q, s), id);
    todo.emplace_back(q, s);
    if (a.accepting(q) && d.accepting(s)) p.set_accepting(id);
    return id;
  };
  p.set_start(node(a.start_state(), d.start()), a.start_stack());
  while (!todo.empty()) {
    auto [q, s] = todo.front();
    todo.pop_front();
    const auto here = ids.at({q, s});
    for (const auto* t : from[q]) {
      if (t->input == Npda::kEps) {
        p.add_transition({here, Npda::kEps, t->top, node(t->to, s), t->push});
      } else {
        auto s2 = d.next(s, letter[t->input]);
        if (s2 == Dfa::kNone) continue;
        p.add_transition({here, t->input, t->top, node(t->to, s2), t->push});
      }
    }
  }
  return p;
}

KcfRecognizer intersect_regular(const KcfRecognizer& r, const Dfa& d) {
  auto dal = d.inputs().names();
  std::sort(dal.begin(), dal.end());
  if (dal != r.alphabet()) throw PreconditionViolation("alphabet mismatch between recognizer and DFA");
  auto pdas = r.pdas();
  pdas.back() = pda_times_dfa(pdas.back(), d);
  return KcfRecognizer(std::move(pdas));
}

Npda pda_union(const Npda& a, const Npda& b) {
  Npda u;
  for (const auto& s : a.inputs().names()) u.inputs().add(s);
  for (const auto& s : b.inputs().names()) u.inputs().add(s);
  const auto start = u.states().add("u0");
  const auto bot = u.stack().add("^u");
  u.set_start(start, bot);
  auto copy = [&](const Npda& m, const std::string& tag) {
    std::vector<std::size_t> st, sk;
    for (const auto& q : m.states().names()) st.push_back(u.states().add(tag + q));
    for (const auto& s : m.stack().names()) sk.push_back(u.stack().add(tag + s));
    for (std::size_t q = 0; q < m.states().size(); ++q)
      if (m.accepting(q)) u.set_accepting(st[q]);
    for (const auto& t : m.transitions()) {
      std::vector<std::size_t> push;
      for (auto s : t.push) push.push_back(sk[s]);
      auto in = t.input == Npda::kEps ? Npda::kEps : u.inputs().id(m.inputs().name(t.input));
      u.add_transition({st[t.from], in, sk[t.top], st[t.to], push});
    }
    u.add_transition({start, Npda::kEps, bot, st[m.start_state()], {sk[m.start_stack()]}});
  };
  copy(a, "L.");
  copy(b, "R.");
  return u;
}

KcfRecognizer kcf_union(const KcfRecognizer& r1, const KcfRecognizer& r2) {
  if (r1.alphabet() != r2.alphabet()) throw PreconditionViolation("alphabet mismatch between recognizers");
  std::vector<Npda> out;
  for (const auto& a : r1.pdas())
    for (const auto& b : r2.pdas()) out.push_back(pda_union(a, b));
  return KcfRecognizer(std::move(out));
}

}  // namespace polycf

#include "polycf/automata/npda.hpp"

#include <algorithm>
#include <sstream>

namespace polycf {

std::size_t SymbolTable::add(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  names_.push_back(name);
  index_.emplace(name, names_.size() - 1);
  return names_.size() - 1;
}

std::size_t SymbolTable::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownSymbol("unknown symbol '" + name + "'");
  return it->second;
}

// --- Npda -------------------------------------------------------------------

void Npda::set_start(std::size_t state, std::size_t stack_symbol) {
  if (state >= states_.size() || stack_symbol >= stack_.size()) throw PreconditionViolation("start out of range");
  start_state_ = state;
  start_stack_ = stack_symbol;
}

void Npda::set_accepting(std::size_t state, bool accepting) {
  if (state >= states_.size()) throw PreconditionViolation("state out of range");
  if (accepting_.size() < states_.size()) accepting_.resize(states_.size(), false);
  accepting_[state] = accepting;
}

bool Npda::accepting(std::size_t state) const { return state < accepting_.size() && accepting_[state]; }

void Npda::add_transition(Transition t) {
  if (t.from >= states_.size() || t.to >= states_.size() || t.top >= stack_.size() ||
      (t.input != kEps && t.input >= inputs_.size())) {
    throw PreconditionViolation("transition refers to an undeclared symbol");
  }
  for (auto s : t.push)
    if (s >= stack_.size()) throw PreconditionViolation("transition pushes an undeclared symbol");
  transitions_.push_back(std::move(t));
}

void Npda::add(const std::string& from, const std::string& input, const std::string& top, const std::string& to,
               const std::vector<std::string>& push) {
  Transition t;
  t.from = states_.add(from);
  t.to = states_.add(to);
  t.input = (input.empty() || input == "_") ? kEps : inputs_.add(input);
  t.top = stack_.add(top);
  for (const auto& s : push) t.push.push_back(stack_.add(s));
  add_transition(std::move(t));
}

void Npda::canonicalize() {
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
}

// --- Dfa --------------------------------------------------------------------

void Dfa::set_accepting(std::size_t state, bool accepting) {
  if (accepting_.size() < states_.size()) accepting_.resize(states_.size(), false);
  accepting_.at(state) = accepting;
}

bool Dfa::accepting(std::size_t state) const { return state < accepting_.size() && accepting_[state]; }

void Dfa::set(std::size_t from, std::size_t input, std::size_t to) {
  if (from >= states_.size() || to >= states_.size() || input >= inputs_.size())
    throw PreconditionViolation("DFA transition out of range");
  if (delta_.size() < states_.size()) delta_.resize(states_.size());
  auto& row = delta_[from];
  if (row.size() < inputs_.size()) row.resize(inputs_.size(), kNone);
  if (row[input] != kNone && row[input] != to)
    throw PreconditionViolation("DFA transition from '" + states_.name(from) + "' on '" + inputs_.name(input) +
                                "' is not deterministic");
  row[input] = to;
}

void Dfa::add(const std::string& from, const std::string& input, const std::string& to) {
  auto f = states_.add(from);
  auto t = states_.add(to);
  set(f, inputs_.add(input), t);
}

std::size_t Dfa::next(std::size_t from, std::size_t input) const {
  if (from >= delta_.size() || input >= delta_[from].size()) return kNone;
  return delta_[from][input];
}

void Dfa::complete() {
  bool gap = false;
  for (std::size_t q = 0; q < states_.size() && !gap; ++q)
    for (std::size_t a = 0; a < inputs_.size() && !gap; ++a)
      if (next(q, a) == kNone) gap = true;
  if (!gap) return;
  std::string name = "sink";
  while (states_.contains(name)) name += "'";
  auto sink = states_.add(name);
  delta_.resize(states_.size());
  for (std::size_t q = 0; q < states_.size(); ++q) {
    delta_[q].resize(inputs_.size(), kNone);
    for (auto& t : delta_[q])
      if (t == kNone) t = sink;
  }
}

bool Dfa::accepts(const Word& w) const {
  std::size_t q = start_;
  for (const auto& s : w) {
    q = next(q, inputs_.id(s));
    if (q == kNone) return false;
  }
  return accepting(q);
}

// --- text format ------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Header {
  std::map<std::string, std::vector<std::string>> lists;
};

Header parse_header(std::istringstream& ls, std::size_t line_no, const std::vector<std::string>& keys) {
  Header h;
  for (std::string tok; ls >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + tok + "'");
    auto key = tok.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ParseError(line_no, "unknown key '" + key + "'");
    h.lists[key] = split(tok.substr(eq + 1), ',');
  }
  for (const auto& k : keys)
    if (!h.lists.count(k)) throw ParseError(line_no, "missing '" + k + "='");
  return h;
}

template <class F>
void for_each_line(const std::string& text, F f) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    f(line.substr(b), line_no);
  }
}

std::size_t lookup(const SymbolTable& t, const std::string& name, std::size_t line_no, const char* what) {
  if (!t.contains(name)) throw ParseError(line_no, std::string("undeclared ") + what + " '" + name + "'");
  return t.id(name);
}

}  // namespace

Npda parse_pda(const std::string& text) {
  Npda a;
  bool header = false, ended = false, started = false;
  std::size_t last = 0;
  for_each_line(text, [&](const std::string& line, std::size_t n) {
    last = n;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (ended) throw ParseError(n, "content after 'end'");
    if (!header) {
      if (kw != "pda") throw ParseError(n, "expected 'pda' header");
      auto h = parse_header(ls, n, {"states", "input", "stack"});
      for (const auto& s : h.lists["states"]) a.states().add(s);
      for (const auto& s : h.lists["input"]) a.inputs().add(s);
      for (const auto& s : h.lists["stack"]) a.stack().add(s);
      if (a.states().size() == 0 || a.stack().size() == 0) throw ParseError(n, "need at least one state and stack symbol");
      header = true;
      return;
    }
    if (kw == "start") {
      std::string q, z;
      ls >> q >> z;
      a.set_start(lookup(a.states(), q, n, "state"), lookup(a.stack(), z, n, "stack symbol"));
      started = true;
    } else if (kw == "accept") {
      for (std::string q; ls >> q;) a.set_accepting(lookup(a.states(), q, n, "state"));
    } else if (kw == "t") {
      std::string q, in, top, arrow, to;
      ls >> q >> in >> top >> arrow >> to;
      if (arrow != "->" || to.empty()) throw ParseError(n, "expected 't q a S -> q2 PUSH...'");
      Npda::Transition t;
      t.from = lookup(a.states(), q, n, "state");
      t.input = in == "_" ? Npda::kEps : lookup(a.inputs(), in, n, "input symbol");
      t.top = lookup(a.stack(), top, n, "stack symbol");
      t.to = lookup(a.states(), to, n, "state");
      std::vector<std::string> push;
      for (std::string s; ls >> s;) push.push_back(s);
      if (!(push.size() == 1 && push[0] == "_"))
        for (const auto& s : push) t.push.push_back(lookup(a.stack(), s, n, "stack symbol"));
      a.add_transition(std::move(t));
    } else if (kw == "end") {
      ended = true;
    } else {
      throw ParseError(n, "unknown directive '" + kw + "'");
    }
  });
  if (!header) throw ParseError(last, "missing 'pda' header");
  if (!started) throw ParseError(last, "missing 'start' line");
  if (!ended) throw ParseError(last, "missing 'end'");
  return a;
}

std::string format_pda(const Npda& a) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  std::string out = "pda states=" + join(a.states().names()) + " input=" + join(a.inputs().names()) +
                    " stack=" + join(a.stack().names()) + "\n";
  out += "start " + a.states().name(a.start_state()) + " " + a.stack().name(a.start_stack()) + "\n";
  std::string acc;
  for (std::size_t q = 0; q < a.states().size(); ++q)
    if (a.accepting(q)) acc += " " + a.states().name(q);
  if (!acc.empty()) out += "accept" + acc + "\n";
  for (const auto& t : a.transitions()) {
    out += "t " + a.states().name(t.from) + " " + (t.input == Npda::kEps ? "_" : a.inputs().name(t.input)) + " " +
           a.stack().name(t.top) + " -> " + a.states().name(t.to);
    if (t.push.empty()) out += " _";
    for (auto s : t.push) out += " " + a.stack().name(s);
    out += "\n";
  }
  return out + "end\n";
}

Dfa parse_dfa(const std::string& text) {
  Dfa d;
  bool header = false, ended = false, started = false;
  std::size_t last = 0;
  for_each_line(text, [&](const std::string& line, std::size_t n) {
    last = n;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (ended) throw ParseError(n, "content after 'end'");
    if (!header) {
      if (kw != "dfa") throw ParseError(n, "expected 'dfa' header");
      auto h = parse_header(ls, n, {"states", "input"});
      for (const auto& s : h.lists["states"]) d.states().add(s);
      for (const auto& s : h.lists["input"]) d.inputs().add(s);
      if (d.states().size() == 0) throw ParseError(n, "need at least one state");
      header = true;
      return;
    }
    if (kw == "start") {
      std::string q;
      ls >> q;
      d.set_start(lookup(d.states(), q, n, "state"));
      started = true;
    } else if (kw == "accept") {
      for (std::string q; ls >> q;) d.set_accepting(lookup(d.states(), q, n, "state"));
    } else if (kw == "t") {
      std::string q, in, arrow, to;
      ls >> q >> in >> arrow >> to;
      if (arrow != "->" || to.empty()) throw ParseError(n, "expected 't q a -> q2'");
      try {
        d.set(lookup(d.states(), q, n, "state"), lookup(d.inputs(), in, n, "input symbol"),
              lookup(d.states(), to, n, "state"));
      } catch (const PreconditionViolation& e) {
        throw ParseError(n, e.what());
      }
    } else if (kw == "end") {
      ended = true;
    } else {
      throw ParseError(n, "unknown directive '" + kw + "'");
    }
  });
  if (!header) throw ParseError(last, "missing 'dfa' header");
  if (!started) throw ParseError(last, "missing 'start' line");
  if (!ended) throw ParseError(last, "missing 'end'");
  d.complete();
  return d;
}

std::string format_dfa(const Dfa& d) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  std::string out = "dfa states=" + join(d.states().names()) + " input=" + join(d.inputs().names()) + "\n";
  out += "start " + d.states().name(d.start()) + "\n";
  std::string acc;
  for (std::size_t q = 0; q < d.states().size(); ++q)
    if (d.accepting(q)) acc += " " + d.states().name(q);
  if (!acc.empty()) out += "accept" + acc + "\n";
  for (std::size_t q = 0; q < d.states().size(); ++q)
    for (std::size_t a = 0; a < d.inputs().size(); ++a) {
      auto t = d.next(q, a);
      if (t != Dfa::kNone)
        out += "t " + d.states().name(q) + " " + d.inputs().name(a) + " -> " + d.states().name(t) + "\n";
    }
  return out + "end\n";
}

}  // namespace polycf

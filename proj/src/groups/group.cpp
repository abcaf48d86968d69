#include "polycf/groups/group.hpp"

#include <algorithm>
#include <cctype>

#include "polycf/groups/families.hpp"

namespace polycf {

bool Group::equal(const Word& u, const Word& v) const { return is_trivial(concat(u, invert_word(v))); }

bool in_word_problem(const Group& g, const Word& w) { return g.is_trivial(w); }

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

Word power(const Word& w, long e) {
  const Word base = e < 0 ? invert_word(w) : w;
  Word r;
  for (long i = 0; i < std::abs(e); ++i) r.insert(r.end(), base.begin(), base.end());
  return r;
}

Word conjugate(const Word& w, const Word& by) { return concat(concat(invert_word(by), w), by); }

Word commutator(const Word& u, const Word& v) {
  return concat(concat(invert_word(u), invert_word(v)), concat(u, v));
}

Word conjugate_b(std::int64_t i, bool inverse) {
  return conjugate({inverse ? "B" : "b"}, power({"a"}, static_cast<long>(i)));
}

Word random_word(const std::vector<Symbol>& letters, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(const std::string& s) {
  auto v = to_int64(parse_int(s));
  if (!v) throw PreconditionViolation("integer out of range: " + s);
  return static_cast<long>(*v);
}

long parse_p(const std::string& arg, bool allow_z) {
  if (allow_z && arg == "Z") return 0;
  if (arg.rfind("p=", 0) != 0) throw PreconditionViolation("expected p=<n>: '" + arg + "'");
  return parse_long(arg.substr(2));
}

}  // namespace

std::unique_ptr<Group> make_group(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw PreconditionViolation("group descriptor needs a ':' ('" + descriptor + "')");
  const std::string kind = descriptor.substr(0, colon);
  const std::string arg = descriptor.substr(colon + 1);
  try {
    if (kind == "free") {
      if (!arg.empty() && std::isdigit(static_cast<unsigned char>(arg[0])))
        return std::make_unique<FreeGroup>(FreeGroup::of_rank(static_cast<std::size_t>(parse_long(arg))));
      return std::make_unique<FreeGroup>(split(arg, ','));
    }
    if (kind == "zn") return std::make_unique<ZnGroup>(static_cast<std::size_t>(parse_long(arg)));
    if (kind == "bs") {
      auto parts = split(arg, ',');
      if (parts.size() != 2) throw PreconditionViolation("bs needs m,n");
      return std::make_unique<BsGroup>(parse_long(parts[0]), parse_long(parts[1]));
    }
    if (kind == "wreath") return std::make_unique<WreathGroup>(parse_p(arg, true));
    if (kind == "gc") return std::make_unique<GcGroup>(parse_gc_spec(arg));
    if (kind == "abc") return std::make_unique<AbcGroup>(parse_p(arg, false));
  } catch (const std::invalid_argument& e) {
    throw PreconditionViolation(std::string("bad group descriptor '") + descriptor + "': " + e.what());
  }
  throw PreconditionViolation("unknown group family '" + kind + "'");
}

}  // namespace polycf

#include "quivergp/strings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qgp {

namespace {

int letter_start(const Quiver& q, const StringLetter& l) {
  return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}

int letter_end(const Quiver& q, const StringLetter& l) {
  return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

}  // namespace

StringWalk StringWalk::trivial(int vertex) { return StringWalk(vertex, {}); }

StringWalk StringWalk::make(const AlgebraPtr& algebra, std::vector<StringLetter> letters) {
  const Quiver& q = algebra->quiver();
  const BoundQuiver& bound = algebra->bound();
  if (letters.empty()) {
    throw InvalidWalkError("a nonempty letter sequence is required; use trivial()");
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letter_end(q, letters[i]) != letter_start(q, letters[i + 1])) {
      throw InvalidWalkError("letters do not chain at position " + std::to_string(i));
    }
    if (letters[i].arrow == letters[i + 1].arrow &&
        letters[i].inverse != letters[i + 1].inverse) {
      throw InvalidWalkError("walk is not reduced at position " + std::to_string(i) +
                             " (letter followed by its inverse)");
    }
  }
  // Same-direction runs must avoid the zero-relations.
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j + 1 < letters.size() && letters[j + 1].inverse == letters[i].inverse) ++j;
    std::vector<int> word;
    for (std::size_t k = i; k <= j; ++k) word.push_back(letters[k].arrow);
    if (letters[i].inverse) std::reverse(word.begin(), word.end());
    if (bound.contains_relation(word)) {
      throw InvalidWalkError("a same-direction run of the walk meets the ideal");
    }
    i = j + 1;
  }
  return StringWalk(-1, std::move(letters));
}

StringWalk StringWalk::from_path(const AlgebraPtr& algebra, const Path& p) {
  if (p.is_trivial()) return trivial(p.trivial_vertex());
  std::vector<StringLetter> letters;
  letters.reserve(p.arrows().size());
  for (int ar : p.arrows()) letters.push_back(StringLetter{ar, false});
  return make(algebra, std::move(letters));
}

std::vector<int> StringWalk::vertices(const Quiver& q) const {
  if (is_trivial()) return {vertex_};
  std::vector<int> out;
  out.reserve(letters_.size() + 1);
  out.push_back(letter_start(q, letters_.front()));
  for (const StringLetter& l : letters_) out.push_back(letter_end(q, l));
  return out;
}

StringWalk StringWalk::reversed() const {
  if (is_trivial()) return *this;
  std::vector<StringLetter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    rev.push_back(StringLetter{it->arrow, !it->inverse});
  }
  return StringWalk(-1, std::move(rev));
}

StringWalk StringWalk::canonical() const {
  StringWalk rev = reversed();
  return *this < rev ? *this : rev;
}

bool StringWalk::is_cyclic(const Quiver& q) const {
  const auto vs = vertices(q);
  return vs.size() > 1 && vs.front() == vs.back();
}

bool StringWalk::operator<(const StringWalk& o) const {
  if (length() != o.length()) return length() < o.length();
  if (is_trivial()) return vertex_ < o.vertex_;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].arrow != o.letters_[i].arrow) return letters_[i].arrow < o.letters_[i].arrow;
    if (letters_[i].inverse != o.letters_[i].inverse) return !letters_[i].inverse;
  }
  return false;
}

StringWalk parse_walk(const AlgebraPtr& algebra, const std::string& text) {
  const Quiver& q = algebra->quiver();
  if (text.empty()) throw InvalidWalkError("empty walk specifier");
  if (text[0] == '@') {
    return StringWalk::trivial(q.vertex_index(text.substr(1)));
  }
  std::vector<StringLetter> letters;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw InvalidWalkError("empty letter in walk specifier");
    bool inverse = false;
    if (token.back() == '~') {
      inverse = true;
      token.pop_back();
    }
    letters.push_back(StringLetter{q.arrow_index(token), inverse});
  }
  return StringWalk::make(algebra, std::move(letters));
}

std::string format_walk(const StringWalk& w, const Quiver& q) {
  if (w.is_trivial()) return "@" + q.vertex_label(w.trivial_vertex());
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ',';
    out += q.arrow(w.letters()[i].arrow).name;
    if (w.letters()[i].inverse) out += '~';
  }
  return out;
}

Representation string_module(const AlgebraPtr& algebra, const StringWalk& w) {
  const Quiver& q = algebra->quiver();
  const int nv = q.vertex_count();
  const std::vector<int> walk_vertices = w.vertices(q);
  std::vector<int> dims(nv, 0);
  std::vector<int> position(walk_vertices.size());
  for (std::size_t i = 0; i < walk_vertices.size(); ++i) {
    position[i] = dims[walk_vertices[i]]++;
  }
  std::vector<RMatrix> mats(q.arrow_count());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    mats[a] = RMatrix::Zero(dims[arrow.target], dims[arrow.source]);
  }
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    const StringLetter& l = w.letters()[i];
    // Forward letter: walk vertex i -> i+1 along the arrow; inverse letter:
    // the arrow truly runs from walk vertex i+1 to i.
    const int from = l.inverse ? static_cast<int>(i + 1) : static_cast<int>(i);
    const int to = l.inverse ? static_cast<int>(i) : static_cast<int>(i + 1);
    mats[l.arrow](position[to], position[from]) = Rational(1);
  }
  try {
    return Representation::make(algebra, std::move(dims), std::move(mats));
  } catch (const ValidationError& e) {
    throw InvalidWalkError(std::string("walk does not define a module: ") + e.what());
  }
}

namespace {

bool letters_extendable(const AlgebraPtr& algebra, const std::vector<StringLetter>& letters,
                        const StringLetter& next) {
  const Quiver& q = algebra->quiver();
  if (!letters.empty()) {
    if (letter_end(q, letters.back()) != letter_start(q, next)) return false;
    if (letters.back().arrow == next.arrow && letters.back().inverse != next.inverse) {
      return false;
    }
  }
  // Check the same-direction run ending in `next`.
  std::vector<int> run{next.arrow};
  for (int i = static_cast<int>(letters.size()) - 1;
       i >= 0 && letters[i].inverse == next.inverse; --i) {
    run.push_back(letters[i].arrow);
  }
  if (!next.inverse) std::reverse(run.begin(), run.end());
  // For a forward run the new arrow is the last of the path; for an inverse
  // run it is the first. Either way only windows touching it matter, and a
  // full containment scan on the short run is cheap.
  return !algebra->bound().contains_relation(run);
}

}  // namespace

StringEnumeration enumerate_strings(const AlgebraPtr& algebra, int max_length) {
  const Quiver& q = algebra->quiver();
  StringEnumeration out;
  std::set<StringWalk> seen;
  for (int v = 0; v < q.vertex_count(); ++v) {
    StringWalk w = StringWalk::trivial(v);
    seen.insert(w);
    out.walks.push_back(std::move(w));
  }
  // Grow letter sequences on the right; each valid walk is produced once.
  std::vector<std::vector<StringLetter>> frontier;
  auto candidate_letters = [&](int at_vertex) {
    std::vector<StringLetter> cands;
    for (int a : q.arrows_from(at_vertex)) cands.push_back(StringLetter{a, false});
    for (int a : q.arrows_to(at_vertex)) cands.push_back(StringLetter{a, true});
    return cands;
  };
  for (int a = 0; a < q.arrow_count(); ++a) {
    for (bool inverse : {false, true}) {
      StringLetter l{a, inverse};
      if (letters_extendable(algebra, {}, l)) frontier.push_back({l});
    }
  }
  int length = 1;
  while (!frontier.empty() && length <= max_length) {
    std::vector<std::vector<StringLetter>> next;
    for (auto& letters : frontier) {
      StringWalk w = StringWalk::make(algebra, std::vector<StringLetter>(letters));
      StringWalk canon = w.canonical();
      if (seen.insert(canon).second) out.walks.push_back(canon);
      if (length == max_length) {
        // Anything left to extend?
        const int end = letter_end(q, letters.back());
        for (const StringLetter& l : candidate_letters(end)) {
          if (letters_extendable(algebra, letters, l)) {
            out.truncated = true;
            break;
          }
        }
        continue;
      }
      const int end = letter_end(q, letters.back());
      for (const StringLetter& l : candidate_letters(end)) {
        if (!letters_extendable(algebra, letters, l)) continue;
        std::vector<StringLetter> ext = letters;
        ext.push_back(l);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
    ++length;
  }

  // Band detection: a cyclic string whose powers all stay strings. Relations
  // are bounded, so checking enough copies of the cycle is exact.
  int max_rel = 2;
  for (const Path& r : algebra->bound().relations()) max_rel = std::max(max_rel, r.length());
  for (const StringWalk& w : out.walks) {
    if (out.bands_exist) break;
    if (w.is_trivial() || !w.is_cyclic(q)) continue;
    const int copies = std::max(2, (max_rel + w.length() - 1) / w.length() + 1);
    std::vector<StringLetter> power;
    for (int c = 0; c < copies; ++c) {
      power.insert(power.end(), w.letters().begin(), w.letters().end());
    }
    try {
      StringWalk::make(algebra, std::move(power));
      out.bands_exist = true;
    } catch (const InvalidWalkError&) {
    }
  }
  std::sort(out.walks.begin(), out.walks.end());
  return out;
}

std::vector<StringWalk> kalck_gp_modules(const AlgebraPtr& algebra,
                                         const GentleProfile& profile) {
  if (!profile.is_gentle) {
    throw NotGentleError("the saturated-cycle description requires a gentle algebra");
  }
  const Quiver& q = algebra->quiver();
  const BoundQuiver& bound = algebra->bound();
  std::set<StringWalk> dedupe;
  std::vector<StringWalk> out;
  for (const auto& cycle : profile.saturated_cycles) {
    for (int cycle_arrow : cycle) {
      const int x = q.arrow(cycle_arrow).source;
      // The maximal relation-avoiding path from x that leaves the cycle: it
      // starts with the unique outgoing arrow other than the cycle arrow.
      int first = -1;
      for (int a : q.arrows_from(x)) {
        if (a != cycle_arrow) first = a;
      }
      StringWalk walk = StringWalk::trivial(x);
      if (first >= 0) {
        std::vector<int> word{first};
        bool growing = true;
        while (growing) {
          growing = false;
          for (int a : q.arrows_from(q.arrow(word.back()).target)) {
            if (bound.quadratic_in_ideal(word.back(), a)) continue;
            word.push_back(a);
            growing = true;
            break;
          }
        }
        walk = StringWalk::from_path(algebra, Path::of(std::move(word), q));
      }
      if (dedupe.insert(walk).second) out.push_back(std::move(walk));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qgp
